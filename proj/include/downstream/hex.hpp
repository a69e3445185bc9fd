#pragma once

// Bit-exact hex packing of buffer slots: site 0 in the most significant
// bits, each item big-endian over its width, lowercase digits.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "downstream/errors.hpp"

namespace downstream {

constexpr bool is_valid_value_bits(unsigned bits) noexcept {
  return bits == 1 || bits == 8 || bits == 16 || bits == 32 || bits == 64;
}

inline void require_value_bits(unsigned bits) {
  if (!is_valid_value_bits(bits)) {
    throw configuration_error("value width must be one of 1, 8, 16, 32, 64 bits, got " +
                              std::to_string(bits));
  }
}

constexpr std::uint64_t max_value(unsigned bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

constexpr std::size_t hex_length(std::size_t count, unsigned bits) noexcept {
  return count * bits / 4;
}

inline std::string pack_hex(std::span<const std::uint64_t> values, unsigned bits) {
  require_value_bits(bits);
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(hex_length(values.size(), bits));
  if (bits == 1) {
    unsigned nibble = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      nibble = (nibble << 1) | static_cast<unsigned>(values[k] & 1U);
      if (k % 4 == 3) {
        out += kDigits[nibble];
        nibble = 0;
      }
    }
    if (values.size() % 4 != 0) {
      out += kDigits[nibble << (4 - values.size() % 4)];
    }
    return out;
  }
  for (const std::uint64_t v : values) {
    for (int shift = static_cast<int>(bits) - 4; shift >= 0; shift -= 4) {
      out += kDigits[(v >> shift) & 0xF];
    }
  }
  return out;
}

inline unsigned hex_digit_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
  if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
  throw parse_error(std::string("non-hex digit '") + c + "'");
}

inline std::vector<std::uint64_t> unpack_hex(std::string_view hex, std::size_t count,
                                             unsigned bits) {
  require_value_bits(bits);
  if (hex.size() != hex_length(count, bits)) {
    throw parse_error("hex length " + std::to_string(hex.size()) + " does not match expected " +
                      std::to_string(hex_length(count, bits)));
  }
  std::vector<std::uint64_t> values(count);
  if (bits == 1) {
    for (std::size_t d = 0; d < hex.size(); ++d) {
      const unsigned nibble = hex_digit_value(hex[d]);
      for (std::size_t b = 0; b < 4; ++b) values[4 * d + b] = (nibble >> (3 - b)) & 1U;
    }
    return values;
  }
  const std::size_t per_item = bits / 4;
  for (std::size_t k = 0; k < count; ++k) {
    std::uint64_t v = 0;
    for (std::size_t d = 0; d < per_item; ++d) v = (v << 4) | hex_digit_value(hex[k * per_item + d]);
    values[k] = v;
  }
  return values;
}

}  // namespace downstream
