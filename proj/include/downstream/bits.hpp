#pragma once

// Bit kernels shared by the site-selection algorithms.

#include <bit>
#include <cstdint>
#include <string>

#include "downstream/errors.hpp"

namespace downstream {

using site_t = std::uint32_t;
using tick_t = std::uint64_t;

inline constexpr site_t kMinSites = 4;
inline constexpr site_t kMaxSites = site_t{1} << 20;

// Number of trailing zero bits of T+1 (the ruler sequence). Defined for the
// full 64-bit range, including T = 2^64 - 1.
constexpr unsigned hanoi_value(tick_t T) noexcept {
  return static_cast<unsigned>(std::countr_one(T));
}

constexpr unsigned bit_length(tick_t T) noexcept {
  return static_cast<unsigned>(std::bit_width(T));
}

constexpr bool is_valid_site_count(std::uint64_t S) noexcept {
  return S >= kMinSites && S <= kMaxSites && std::has_single_bit(S);
}

inline void require_site_count(std::uint64_t S) {
  if (!is_valid_site_count(S)) {
    throw configuration_error("site count must be a power of two in [4, 2^20], got " +
                              std::to_string(S));
  }
}

// log2 of a valid site count.
constexpr unsigned site_bits(site_t S) noexcept {
  return static_cast<unsigned>(std::countr_zero(S));
}

// Steady thinning level: max(bit_length(T) - log2(S), 0).
inline unsigned epoch(site_t S, tick_t T) {
  require_site_count(S);
  const unsigned s = site_bits(S);
  const unsigned len = bit_length(T);
  return len > s ? len - s : 0;
}

}  // namespace downstream
