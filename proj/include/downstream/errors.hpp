#pragma once

#include <stdexcept>
#include <string>

namespace downstream {

// Base for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid site count, value width, or hybrid layout.
class configuration_error : public error {
 public:
  using error::error;
};

// Stretched/tilted stream exceeded 2^S - 2 items.
class capacity_error : public error {
 public:
  using error::error;
};

// Value does not fit the configured item width.
class domain_error : public error {
 public:
  using error::error;
};

// Malformed hex, algorithm name, or table field.
class parse_error : public error {
 public:
  using error::error;
};

// Replay-defined computation requested past the practicality cap.
class resource_error : public error {
 public:
  using error::error;
};

// Out-of-order index fed to a compressing buffer.
class sequence_error : public error {
 public:
  using error::error;
};

}  // namespace downstream
