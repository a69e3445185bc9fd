#pragma once

// Algorithm identifiers and the hybrid layout description.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "downstream/bits.hpp"
#include "downstream/errors.hpp"

namespace downstream {

enum class Curation : std::uint8_t { steady, stretched, tilted };

struct HybridSegment {
  Curation curation;
  site_t size;

  friend bool operator==(const HybridSegment&, const HybridSegment&) = default;
};

// Sites chosen for one arriving item. Empty means discard.
struct SiteSelection {
  std::vector<site_t> sites;

  bool discarded() const noexcept { return sites.empty(); }
  friend bool operator==(const SiteSelection&, const SiteSelection&) = default;
};

// One of steady, stretched, tilted, or a hybrid split of the buffer.
class AlgorithmId {
 public:
  static AlgorithmId steady() { return AlgorithmId(Curation::steady); }
  static AlgorithmId stretched() { return AlgorithmId(Curation::stretched); }
  static AlgorithmId tilted() { return AlgorithmId(Curation::tilted); }

  static AlgorithmId hybrid(std::vector<HybridSegment> segments) {
    if (segments.size() < 2) {
      throw configuration_error("hybrid layout needs at least two segments");
    }
    for (const auto& seg : segments) {
      if (!is_valid_site_count(seg.size)) {
        throw configuration_error("hybrid segment size must be a power of two in [4, 2^20], got " +
                                  std::to_string(seg.size));
      }
    }
    AlgorithmId id(Curation::steady);
    id.hybrid_ = true;
    id.segments_ = std::move(segments);
    return id;
  }

  static AlgorithmId of(Curation c) { return AlgorithmId(c); }

  bool is_hybrid() const noexcept { return hybrid_; }

  // Curation of a non-hybrid algorithm.
  Curation curation() const noexcept { return curation_; }

  const std::vector<HybridSegment>& segments() const noexcept { return segments_; }

  std::uint64_t hybrid_size() const noexcept {
    std::uint64_t total = 0;
    for (const auto& seg : segments_) total += seg.size;
    return total;
  }

  // Segment layout for a surface of S sites; non-hybrid algorithms are a
  // single segment spanning the whole buffer.
  std::vector<HybridSegment> layout(site_t S) const {
    if (hybrid_) return segments_;
    return {HybridSegment{curation_, S}};
  }

  // Throws configuration_error unless this algorithm can drive S sites.
  void validate_for(std::uint64_t S) const {
    require_site_count(S);
    if (hybrid_ && hybrid_size() != S) {
      throw configuration_error("hybrid segment sizes sum to " + std::to_string(hybrid_size()) +
                                ", surface has " + std::to_string(S) + " sites");
    }
  }

  friend bool operator==(const AlgorithmId&, const AlgorithmId&) = default;

 private:
  explicit AlgorithmId(Curation c) : curation_(c) {}

  Curation curation_;
  bool hybrid_ = false;
  std::vector<HybridSegment> segments_;
};

inline std::string_view to_string(Curation c) noexcept {
  switch (c) {
    case Curation::steady: return "steady";
    case Curation::stretched: return "stretched";
    case Curation::tilted: return "tilted";
  }
  return "?";
}

inline Curation parse_curation(std::string_view text) {
  if (text == "steady") return Curation::steady;
  if (text == "stretched") return Curation::stretched;
  if (text == "tilted") return Curation::tilted;
  throw parse_error("unknown algorithm '" + std::string(text) + "'");
}

// Text form: "steady", "stretched", "tilted", or
// "hybrid:steady/4+tilted/4" (segments in site order).
inline std::string to_string(const AlgorithmId& algo) {
  if (!algo.is_hybrid()) return std::string(to_string(algo.curation()));
  std::string out = "hybrid:";
  bool first = true;
  for (const auto& seg : algo.segments()) {
    if (!first) out += '+';
    first = false;
    out += to_string(seg.curation);
    out += '/';
    out += std::to_string(seg.size);
  }
  return out;
}

inline AlgorithmId parse_algorithm(std::string_view text) {
  constexpr std::string_view prefix = "hybrid:";
  if (!text.starts_with(prefix)) return AlgorithmId::of(parse_curation(text));

  std::vector<HybridSegment> segments;
  std::string_view rest = text.substr(prefix.size());
  while (true) {
    const auto plus = rest.find('+');
    const std::string_view part = rest.substr(0, plus);
    const auto slash = part.find('/');
    if (slash == std::string_view::npos) {
      throw parse_error("hybrid segment '" + std::string(part) + "' lacks '/size'");
    }
    const std::string_view digits = part.substr(slash + 1);
    std::uint64_t size = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), size);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty() ||
        size > kMaxSites) {
      throw parse_error("bad hybrid segment size '" + std::string(digits) + "'");
    }
    segments.push_back({parse_curation(part.substr(0, slash)), static_cast<site_t>(size)});
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  try {
    return AlgorithmId::hybrid(std::move(segments));
  } catch (const configuration_error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace downstream
