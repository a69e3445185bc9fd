#pragma once

// Uniform entry points over all algorithms, including hybrid layouts.

#include <optional>
#include <vector>

#include "downstream/algorithm.hpp"
#include "downstream/greedy.hpp"
#include "downstream/steady.hpp"

namespace downstream {

inline bool has_ingest_capacity(Curation c, site_t S, tick_t T) noexcept {
  return c == Curation::steady || greedy_has_capacity(S, T);
}

inline bool has_ingest_capacity(const AlgorithmId& algo, site_t S, tick_t T) {
  if (!algo.is_hybrid()) return has_ingest_capacity(algo.curation(), S, T);
  for (const auto& seg : algo.segments()) {
    if (!has_ingest_capacity(seg.curation, seg.size, T)) return false;
  }
  return true;
}

inline std::optional<site_t> assign(Curation c, site_t S, tick_t T) {
  switch (c) {
    case Curation::steady: return steady_assign(S, T);
    case Curation::stretched: return stretched_assign(S, T);
    case Curation::tilted: return tilted_assign(S, T);
  }
  return std::nullopt;
}

// Each segment curates the whole stream on its own slice of the buffer; the
// selection is the union of offset sub-selections.
inline SiteSelection hybrid_assign(const AlgorithmId& algo, site_t S, tick_t T) {
  if (!algo.is_hybrid()) throw configuration_error("hybrid_assign needs a hybrid algorithm");
  algo.validate_for(S);
  for (const auto& seg : algo.segments()) {
    if (!has_ingest_capacity(seg.curation, seg.size, T)) {
      throw capacity_error(std::string(to_string(seg.curation)) + " segment of " +
                           std::to_string(seg.size) + " sites cannot ingest item " +
                           std::to_string(T));
    }
  }
  SiteSelection out;
  site_t offset = 0;
  for (const auto& seg : algo.segments()) {
    if (const auto k = assign(seg.curation, seg.size, T)) out.sites.push_back(offset + *k);
    offset += seg.size;
  }
  return out;
}

inline SiteSelection assign(const AlgorithmId& algo, site_t S, tick_t T) {
  if (algo.is_hybrid()) return hybrid_assign(algo, S, T);
  SiteSelection out;
  if (const auto k = assign(algo.curation(), S, T)) out.sites.push_back(*k);
  return out;
}

}  // namespace downstream
