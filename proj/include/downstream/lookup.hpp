#pragma once

// Site lookup: which stream item sits at each site after T ingests,
// recovered from (algorithm, S, T) alone.

#include <optional>
#include <string>
#include <vector>

#include "downstream/algorithm.hpp"
#include "downstream/assign.hpp"
#include "downstream/greedy.hpp"
#include "downstream/steady.hpp"

namespace downstream {

// Per-site arrival index of the resident item; nullopt for never-written sites.
struct LookupTable {
  std::vector<std::optional<tick_t>> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const std::optional<tick_t>& operator[](std::size_t k) const { return entries[k]; }
  friend bool operator==(const LookupTable&, const LookupTable&) = default;
};

namespace detail {

inline void require_lookup_capacity(Curation c, site_t size, tick_t T) {
  if (c == Curation::steady || T == 0) return;
  if (!greedy_has_capacity(size, T - 1)) {
    throw capacity_error(std::string(to_string(c)) + " stream of " + std::to_string(T) +
                         " items exceeds 2^S - 2 for S = " + std::to_string(size));
  }
}

inline void require_replay_bounds(const AlgorithmId& algo, site_t S, tick_t T) {
  algo.validate_for(S);
  if (T > kReplayCap) {
    throw resource_error("lookup at T = " + std::to_string(T) + " is past the replay cap of 2^22");
  }
  for (const auto& seg : algo.layout(S)) require_lookup_capacity(seg.curation, seg.size, T);
}

inline void greedy_lookup_into(Curation bias, site_t size, tick_t T, site_t offset,
                               LookupTable& table) {
  GreedyCurator curator(bias, size);
  curator.advance_to(T);
  for (const auto& r : curator.residents()) table.entries[offset + r.site] = r.time;
}

}  // namespace detail

// Reference lookup: entries[k] = last T' < T whose selection includes k.
inline LookupTable lookup_replay(const AlgorithmId& algo, site_t S, tick_t T) {
  detail::require_replay_bounds(algo, S, T);
  LookupTable table{std::vector<std::optional<tick_t>>(S)};
  for (tick_t t = 0; t < T; ++t) {
    for (const site_t k : assign(algo, S, t).sites) table.entries[k] = t;
  }
  return table;
}

// Steady lookup for any 64-bit T in O(S log T). At the start of epoch t the
// buffer holds exactly the S items with hanoi value >= t - 1; after that
// only the epoch's stored arrivals (hanoi value >= t) overwrite sites.
inline LookupTable lookup_steady_fast(site_t S, tick_t T) {
  require_site_count(S);
  const unsigned s = site_bits(S);
  const unsigned t = epoch(S, T);
  LookupTable table{std::vector<std::optional<tick_t>>(S)};
  if (t == 0) {
    for (site_t k = 0; k < S && k < T; ++k) table.entries[k] = k;
    return table;
  }
  for (tick_t m = 1; m <= S; ++m) {
    const tick_t item = (m << (t - 1)) - 1;
    table.entries[detail::steady_site_of_stored(s, item)] = item;
  }
  using u128 = unsigned __int128;
  for (tick_t j = S / 2 + 1; j <= S; ++j) {
    const u128 item = (u128{j} << t) - 1;
    if (item >= T) break;
    const auto arrival = static_cast<tick_t>(item);
    table.entries[detail::steady_site_of_stored(s, arrival)] = arrival;
  }
  return table;
}

// Fastest available lookup: steady segments decode directly, stretched and
// tilted segments replay (capped at 2^22 items).
inline LookupTable lookup(const AlgorithmId& algo, site_t S, tick_t T) {
  algo.validate_for(S);
  LookupTable table{std::vector<std::optional<tick_t>>(S)};
  site_t offset = 0;
  for (const auto& seg : algo.layout(S)) {
    if (seg.curation == Curation::steady) {
      const LookupTable part = lookup_steady_fast(seg.size, T);
      for (site_t k = 0; k < seg.size; ++k) table.entries[offset + k] = part.entries[k];
    } else {
      if (T > kReplayCap) {
        throw resource_error(std::string(to_string(seg.curation)) + " lookup at T = " +
                             std::to_string(T) + " is past the replay cap of 2^22");
      }
      detail::require_lookup_capacity(seg.curation, seg.size, T);
      detail::greedy_lookup_into(seg.curation, seg.size, T, offset, table);
    }
    offset += seg.size;
  }
  return table;
}

}  // namespace downstream
