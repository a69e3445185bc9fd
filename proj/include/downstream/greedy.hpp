#pragma once

// Stretched and tilted curation by deterministic greedy eviction.
//
// Once the buffer is full, each arrival either is discarded or evicts the
// retained item b minimizing
//
//     score(b) = (c - a) / weight(b)
//
// where a and c are b's older and newer retained neighbours (-1 and the
// arrival T at the ends). Discarding scores (T - newest) / weight(T).
// weight(x) = x + 1 for stretched (depth) and T - x for tilted (age), so
// stretched density falls off with depth and tilted density with age. Scores
// compare by exact integer cross-multiplication; ties go to discard, then to
// the oldest b.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "downstream/algorithm.hpp"
#include "downstream/bits.hpp"
#include "downstream/errors.hpp"

namespace downstream {

// Replay-defined computations are limited to streams of this many items.
inline constexpr tick_t kReplayCap = tick_t{1} << 22;

// True iff the item arriving at T keeps the stream within 2^S - 2 items.
constexpr bool greedy_has_capacity(site_t S, tick_t T) noexcept {
  if (S > 64) return true;
  using u128 = unsigned __int128;
  return u128{T} + 1 <= (u128{1} << S) - 2;
}

struct Resident {
  tick_t time;
  site_t site;

  friend bool operator==(const Resident&, const Resident&) = default;
};

// Incremental replay of the greedy rule for a single stream. Owns the sorted
// retained set; each step() decides the item arriving at now().
class GreedyCurator {
 public:
  GreedyCurator(Curation bias, site_t S) : bias_(bias), S_(S) {
    require_site_count(S);
    if (bias == Curation::steady) {
      throw configuration_error("greedy curator needs stretched or tilted bias");
    }
    residents_.reserve(S);
  }

  Curation bias() const noexcept { return bias_; }
  site_t size() const noexcept { return S_; }
  tick_t now() const noexcept { return now_; }

  // Retained items, oldest first.
  const std::vector<Resident>& residents() const noexcept { return residents_; }

  std::optional<site_t> step() {
    const tick_t T = now_;
    if (!greedy_has_capacity(S_, T)) {
      throw capacity_error(std::string(to_string(bias_)) + " surface of " + std::to_string(S_) +
                           " sites cannot ingest item " + std::to_string(T) +
                           " (limit 2^S - 2 items)");
    }
    ++now_;
    if (T < S_) {
      residents_.push_back({T, static_cast<site_t>(T)});
      return static_cast<site_t>(T);
    }

    Score best{T - residents_.back().time, weight(T, T)};
    std::size_t victim = residents_.size();
    for (std::size_t idx = 0; idx < residents_.size(); ++idx) {
      const u128 older = idx == 0 ? 0 : u128{residents_[idx - 1].time} + 1;
      const u128 newer = idx + 1 == residents_.size() ? u128{T} + 1
                                                      : u128{residents_[idx + 1].time} + 1;
      const Score candidate{newer - older, weight(residents_[idx].time, T)};
      if (candidate < best) {
        best = candidate;
        victim = idx;
      }
    }
    if (victim == residents_.size()) return std::nullopt;

    const site_t site = residents_[victim].site;
    residents_.erase(residents_.begin() + static_cast<std::ptrdiff_t>(victim));
    residents_.push_back({T, site});
    return site;
  }

  void advance_to(tick_t T) {
    if (T < now_) throw sequence_error("greedy curator cannot rewind");
    while (now_ < T) step();
  }

 private:
  using u128 = unsigned __int128;

  // gap / weight; weight 0 is +infinity.
  struct Score {
    u128 gap;
    u128 weight;

    friend bool operator<(const Score& lhs, const Score& rhs) noexcept {
      if (lhs.weight == 0) return false;
      if (rhs.weight == 0) return true;
      return lhs.gap * rhs.weight < rhs.gap * lhs.weight;
    }
  };

  u128 weight(tick_t x, tick_t T) const noexcept {
    return bias_ == Curation::stretched ? u128{x} + 1 : u128{T - x};
  }

  Curation bias_;
  site_t S_;
  tick_t now_ = 0;
  std::vector<Resident> residents_;
};

namespace detail {

inline void require_greedy_arrival(Curation bias, site_t S, tick_t T) {
  require_site_count(S);
  if (!greedy_has_capacity(S, T)) {
    throw capacity_error(std::string(to_string(bias)) + " surface of " + std::to_string(S) +
                         " sites cannot ingest item " + std::to_string(T) +
                         " (limit 2^S - 2 items)");
  }
  if (T >= kReplayCap) {
    throw resource_error("item " + std::to_string(T) + " is past the replay cap of 2^22");
  }
}

// Per-thread replay state, rewound only when asked about an earlier T. The
// last answer is remembered so hybrid layouts with repeated segments do not
// force a rewind.
inline std::optional<site_t> replayed_step(Curation bias, site_t S, tick_t T) {
  struct Entry {
    GreedyCurator curator;
    tick_t last_T = 0;
    std::optional<site_t> last;
    bool has_last = false;
  };
  thread_local std::map<std::pair<Curation, site_t>, Entry> cache;
  auto [it, inserted] = cache.try_emplace({bias, S}, Entry{GreedyCurator(bias, S), 0, std::nullopt, false});
  Entry& entry = it->second;
  if (entry.has_last && entry.last_T == T) return entry.last;
  if (entry.curator.now() > T) entry.curator = GreedyCurator(bias, S);
  entry.curator.advance_to(T);
  entry.last = entry.curator.step();
  entry.last_T = T;
  entry.has_last = true;
  return entry.last;
}

inline std::optional<site_t> greedy_assign(Curation bias, site_t S, tick_t T) {
  require_greedy_arrival(bias, S, T);
  return replayed_step(bias, S, T);
}

}  // namespace detail

// Site for the stretched item arriving at T, or nullopt to discard.
inline std::optional<site_t> stretched_assign(site_t S, tick_t T) {
  return detail::greedy_assign(Curation::stretched, S, T);
}

// Site for the tilted item arriving at T. Never discards within capacity.
inline std::optional<site_t> tilted_assign(site_t S, tick_t T) {
  return detail::greedy_assign(Curation::tilted, S, T);
}

}  // namespace downstream
