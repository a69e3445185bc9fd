#pragma once

// Fixed-capacity working buffer driven by a site-selection algorithm.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "downstream/algorithm.hpp"
#include "downstream/assign.hpp"
#include "downstream/greedy.hpp"
#include "downstream/hex.hpp"
#include "downstream/lookup.hpp"
#include "downstream/steady.hpp"

namespace downstream {

// Holds S value slots and the ingest counter T. Items are written in place
// and never moved. Single writer; stretched and tilted segments keep their
// replay state here so ingest stays O(S).
class Surface {
 public:
  Surface(AlgorithmId algo, site_t S, unsigned value_bits)
      : algo_(std::move(algo)), S_(S), value_bits_(value_bits) {
    algo_.validate_for(S);
    require_value_bits(value_bits);
    site_t offset = 0;
    for (const auto& seg : algo_.layout(S)) {
      segments_.push_back({seg, offset, std::nullopt});
      offset += seg.size;
    }
    slots_.assign(S, 0);
    written_.assign(S, false);
  }

  // Inverse of to_hex(). Written flags come from the lookup at T.
  static Surface from_hex(AlgorithmId algo, site_t S, tick_t T, unsigned value_bits,
                          std::string_view hex) {
    Surface surface(std::move(algo), S, value_bits);
    surface.slots_ = unpack_hex(hex, S, value_bits);
    surface.T_ = T;
    const LookupTable table = downstream::lookup(surface.algo_, S, T);
    for (site_t k = 0; k < S; ++k) surface.written_[k] = table.entries[k].has_value();
    return surface;
  }

  const AlgorithmId& algorithm() const noexcept { return algo_; }
  site_t size() const noexcept { return S_; }
  tick_t T() const noexcept { return T_; }
  unsigned value_bits() const noexcept { return value_bits_; }
  std::span<const std::uint64_t> slots() const noexcept { return slots_; }
  bool written(site_t k) const { return written_.at(k); }

  bool has_ingest_capacity() const { return downstream::has_ingest_capacity(algo_, S_, T_); }

  SiteSelection ingest(std::uint64_t value) {
    if (value > max_value(value_bits_)) {
      throw domain_error("value " + std::to_string(value) + " does not fit in " +
                         std::to_string(value_bits_) + " bits");
    }
    if (!has_ingest_capacity()) {
      throw capacity_error(to_string(algo_) + " surface of " + std::to_string(S_) +
                           " sites cannot ingest item " + std::to_string(T_));
    }
    SiteSelection selection;
    for (auto& seg : segments_) {
      if (const auto k = place(seg)) selection.sites.push_back(seg.offset + *k);
    }
    for (const site_t k : selection.sites) {
      slots_[k] = value;
      written_[k] = true;
    }
    ++T_;
    return selection;
  }

  std::string to_hex() const { return pack_hex(slots_, value_bits_); }

  LookupTable lookup() const { return downstream::lookup(algo_, S_, T_); }

 private:
  struct Segment {
    HybridSegment layout;
    site_t offset;
    std::optional<GreedyCurator> curator;
  };

  std::optional<site_t> place(Segment& seg) {
    if (seg.layout.curation == Curation::steady) return steady_assign(seg.layout.size, T_);
    if (!seg.curator || seg.curator->now() != T_) {
      seg.curator.emplace(seg.layout.curation, seg.layout.size);
      seg.curator->advance_to(T_);
    }
    return seg.curator->step();
  }

  AlgorithmId algo_;
  site_t S_;
  unsigned value_bits_;
  tick_t T_ = 0;
  std::vector<std::uint64_t> slots_;
  std::vector<bool> written_;
  std::vector<Segment> segments_;
};

}  // namespace downstream
