#pragma once

// Steady curation: retained items stay evenly spaced over the whole stream.
//
// Epoch 0 fills sites by identity. In epoch t >= 1 only arrivals with
// hanoi_value >= t are stored; the arrival with in-epoch incidence i takes
// over the site of the incidence-i item whose hanoi value is exactly t - 1,
// which the new epoch no longer needs. Each epoch frees exactly S/2 sites and
// admits exactly S/2 arrivals.

#include <optional>

#include "downstream/bits.hpp"

namespace downstream {

namespace detail {

// Site of a stored arrival; requires hanoi_value(T) >= epoch(S, T).
// Each iteration lowers the epoch by at least one.
inline site_t steady_site_of_stored(unsigned s, tick_t T) noexcept {
  while (true) {
    const unsigned len = bit_length(T);
    const unsigned t = len > s ? len - s : 0;
    if (t == 0) return static_cast<site_t>(T);
    // ((T + 1) >> t) - S/2 - 1, written to avoid overflow at T = 2^64 - 1;
    // 2^t divides T + 1 so (T + 1) >> t == (T >> t) + 1.
    const tick_t incidence = (T >> t) - (tick_t{1} << (s - 1));
    T = ((2 * incidence + 1) << (t - 1)) - 1;
  }
}

inline bool steady_stores(unsigned s, tick_t T) noexcept {
  const unsigned len = bit_length(T);
  const unsigned t = len > s ? len - s : 0;
  return hanoi_value(T) >= t;
}

}  // namespace detail

// Site for the item arriving at T, or nullopt to discard. Valid for every
// 64-bit T; worst case O(log T).
inline std::optional<site_t> steady_assign(site_t S, tick_t T) {
  require_site_count(S);
  const unsigned s = site_bits(S);
  if (!detail::steady_stores(s, T)) return std::nullopt;
  return detail::steady_site_of_stored(s, T);
}

}  // namespace downstream
