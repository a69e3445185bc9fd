#pragma once

// Timing harness for site selection across buffer sizes and depth windows.

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "downstream/algorithm.hpp"
#include "downstream/greedy.hpp"
#include "downstream/steady.hpp"

namespace downstream {

// Half-open range of arrival indices [lo, hi).
struct DepthWindow {
  tick_t lo;
  tick_t hi;
};

struct BenchRow {
  Curation algo;
  site_t S;
  tick_t T_lo;
  tick_t T_hi;
  std::uint64_t items;
  std::uint64_t total_ns;
  double ns_per_item;
  unsigned replicate;
};

namespace detail {

inline void keep_alive(std::uint64_t value) { asm volatile("" : : "r"(value) : "memory"); }

inline std::uint64_t time_window(Curation algo, site_t S, DepthWindow window) {
  using clock = std::chrono::steady_clock;
  std::uint64_t acc = 0;
  if (algo == Curation::steady) {
    const auto start = clock::now();
    for (tick_t T = window.lo; T < window.hi; ++T) {
      const auto k = steady_assign(S, T);
      acc += k ? *k : 1;
    }
    const auto stop = clock::now();
    keep_alive(acc);
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  }
  GreedyCurator curator(algo, S);
  curator.advance_to(window.lo);
  const auto start = clock::now();
  for (tick_t T = window.lo; T < window.hi; ++T) {
    const auto k = curator.step();
    acc += k ? *k : 1;
  }
  const auto stop = clock::now();
  keep_alive(acc);
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

}  // namespace detail

// One row per (S, window, replicate), in that nesting order. Each (S, window)
// gets one unreported warm-up pass first.
inline std::vector<BenchRow> run_bench(Curation algo, std::span<const site_t> sizes,
                                       std::span<const DepthWindow> windows, unsigned replicates) {
  if (replicates == 0) throw configuration_error("benchmark needs at least one replicate");
  if (sizes.empty() || windows.empty()) {
    throw configuration_error("benchmark needs at least one size and one depth window");
  }
  for (const site_t S : sizes) {
    require_site_count(S);
    for (const auto& w : windows) {
      if (w.hi <= w.lo) throw configuration_error("empty depth window");
      if (algo != Curation::steady) {
        if (!greedy_has_capacity(S, w.hi - 1)) {
          throw capacity_error("depth window exceeds 2^S - 2 items for S = " + std::to_string(S));
        }
        if (w.hi > kReplayCap) {
          throw resource_error("depth window is past the replay cap of 2^22");
        }
      }
    }
  }

  std::vector<BenchRow> rows;
  for (const site_t S : sizes) {
    for (const auto& w : windows) {
      detail::time_window(algo, S, w);  // warm-up, not reported
      for (unsigned r = 0; r < replicates; ++r) {
        const std::uint64_t ns = detail::time_window(algo, S, w);
        const std::uint64_t items = w.hi - w.lo;
        rows.push_back({algo, S, w.lo, w.hi, items, ns,
                        static_cast<double>(ns) / static_cast<double>(items), r});
      }
    }
  }
  return rows;
}

}  // namespace downstream
