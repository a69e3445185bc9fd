#pragma once

// Brute-force conformance checkers. These deliberately avoid the site
// selection internals and only look at sets of retained arrival indices.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "downstream/algorithm.hpp"
#include "downstream/lookup.hpp"

namespace downstream::oracle {

// Sorted arrival indices resident in a buffer.
using RetainedSet = std::vector<std::uint64_t>;

inline RetainedSet retained_from(const LookupTable& table) {
  RetainedSet out;
  for (const auto& e : table.entries) {
    if (e) out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline unsigned count_bits(std::uint64_t x) {
  unsigned n = 0;
  while (x != 0) {
    x >>= 1;
    ++n;
  }
  return n;
}

inline unsigned log2_exact(std::uint64_t S) {
  unsigned n = 0;
  while ((std::uint64_t{1} << n) < S) ++n;
  return n;
}

}  // namespace detail

// Items a steady buffer must hold after T ingests: every T' < T with
// T' = 2^t - 1 (mod 2^t), t the thinning level at T.
inline std::vector<std::uint64_t> needed_set_steady(std::uint64_t S, std::uint64_t T) {
  const unsigned s = detail::log2_exact(S);
  const unsigned len = detail::count_bits(T);
  const unsigned t = len > s ? len - s : 0;
  const std::uint64_t spacing = std::uint64_t{1} << t;
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = spacing - 1; x < T; x += spacing) out.push_back(x);
  return out;
}

struct GapCheck {
  bool pass;
  std::uint64_t max_gap;
};

// Largest gap over retained plus sentinels -1 and T, bounded by max(2T/S, 1).
inline GapCheck check_steady_gap(const RetainedSet& retained, std::uint64_t S, std::uint64_t T) {
  using i128 = __int128;
  i128 prev = -1;
  i128 widest = 0;
  for (const std::uint64_t x : retained) {
    widest = std::max(widest, static_cast<i128>(x) - prev);
    prev = x;
  }
  widest = std::max(widest, static_cast<i128>(T) - prev);
  const auto gap = static_cast<std::uint64_t>(widest);
  const bool pass = gap <= 1 || static_cast<i128>(gap) * static_cast<i128>(S) <= 2 * static_cast<i128>(T);
  return {pass, gap};
}

enum class CoverageMode { age, depth };

// Fraction of doubling windows [2^j, 2^(j+1)) inside [1, T] that hold at least
// one retained item, measuring items by age T - x or depth x + 1.
inline double window_coverage_metric(const RetainedSet& retained, std::uint64_t T,
                                     CoverageMode mode) {
  std::uint64_t windows = 0;
  std::uint64_t covered = 0;
  for (unsigned j = 0; j < 63 && (std::uint64_t{1} << (j + 1)) - 1 <= T; ++j) {
    const std::uint64_t lo = std::uint64_t{1} << j;
    const std::uint64_t hi = lo << 1;
    ++windows;
    const bool hit = std::any_of(retained.begin(), retained.end(), [&](std::uint64_t x) {
      const std::uint64_t m = mode == CoverageMode::age ? T - x : x + 1;
      return m >= lo && m < hi;
    });
    if (hit) ++covered;
  }
  return windows == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(windows);
}

// Retained counts per eighth of [0, T).
inline std::array<std::uint64_t, 8> window_counts(const RetainedSet& retained, std::uint64_t T) {
  std::array<std::uint64_t, 8> counts{};
  for (const std::uint64_t x : retained) {
    for (std::size_t w = 0; w < 8; ++w) {
      const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(T) * w / 8);
      const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(T) * (w + 1) / 8);
      if (x >= lo && x < hi) ++counts[w];
    }
  }
  return counts;
}

// Stretched: no later eighth holds more than an earlier one plus slack.
// Tilted: the reverse.
inline bool density_monotonicity_check(const RetainedSet& retained, std::uint64_t T,
                                       Curation direction, std::uint64_t slack) {
  const auto counts = window_counts(retained, T);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      const bool ok = direction == Curation::tilted ? counts[i] <= counts[j] + slack
                                                    : counts[j] <= counts[i] + slack;
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace downstream::oracle
