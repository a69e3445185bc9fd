#pragma once

// Command implementations behind the dstream tool. Each takes streams and
// returns an exit code: 0 clean, 1 data-level failures, 2 usage errors.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "downstream/algorithm.hpp"
#include "downstream/assign.hpp"
#include "downstream/bench.hpp"
#include "downstream/cli/csv.hpp"
#include "downstream/explode.hpp"
#include "downstream/lookup.hpp"

namespace downstream::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

inline std::uint64_t parse_uint(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw parse_error("not an unsigned integer: '" + std::string(text) + "'");
  }
  return value;
}

// Unsigned integer with optional powers and sums, e.g. "65536", "2^31+2^16".
inline std::uint64_t parse_count(std::string_view text) {
  using u128 = unsigned __int128;
  u128 total = 0;
  while (true) {
    const auto plus = text.find('+');
    const std::string_view term = text.substr(0, plus);
    const auto caret = term.find('^');
    u128 value = parse_uint(term.substr(0, caret));
    if (caret != std::string_view::npos) {
      const auto base = static_cast<std::uint64_t>(value);
      const std::uint64_t exponent = parse_uint(term.substr(caret + 1));
      value = 1;
      for (std::uint64_t i = 0; i < exponent; ++i) {
        value *= base;
        if (value > ~std::uint64_t{0}) throw parse_error("count overflows 64 bits: " + std::string(term));
      }
    }
    total += value;
    if (total > ~std::uint64_t{0}) throw parse_error("count overflows 64 bits");
    if (plus == std::string_view::npos) break;
    text = text.substr(plus + 1);
  }
  return static_cast<std::uint64_t>(total);
}

inline site_t parse_site_count(std::string_view text) {
  const std::uint64_t S = parse_count(text);
  require_site_count(S);
  return static_cast<site_t>(S);
}

inline std::string format_selection(const SiteSelection& selection) {
  std::string out;
  for (std::size_t i = 0; i < selection.sites.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(selection.sites[i]);
  }
  return out;
}

inline SiteSelection parse_selection(std::string_view text) {
  SiteSelection out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto space = text.find(' ', pos);
    const auto token = text.substr(pos, space == std::string_view::npos ? text.npos : space - pos);
    if (!token.empty()) out.sites.push_back(static_cast<site_t>(parse_uint(token)));
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return out;
}

// ---------------------------------------------------------------- explode

inline constexpr std::string_view kAlgoColumn = "dstream_algo";
inline constexpr std::string_view kSizeColumn = "dstream_S";
inline constexpr std::string_view kCounterColumn = "dstream_T";
inline constexpr std::string_view kHexColumn = "dstream_storage_hex";

struct ExplodeOptions {
  unsigned value_bits = 8;
};

// Reads a dump table and writes one row per site. Output columns:
// dstream_row, every input column but the hex blob, then dstream_site,
// dstream_Tbar, dstream_value. Bad rows go to `rejects`.
inline int cmd_explode(std::istream& in, std::ostream& out, std::ostream& rejects,
                       std::ostream& err, const ExplodeOptions& options) {
  if (!is_valid_value_bits(options.value_bits)) {
    err << "error: --value-bits must be one of 1, 8, 16, 32, 64\n";
    return kExitUsage;
  }
  std::vector<csv::Row> table;
  try {
    table = csv::read(in);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (table.empty()) {
    err << "error: input has no header row\n";
    return kExitUsage;
  }
  const csv::Row& header = table.front();
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto algo_col = column(kAlgoColumn);
  const auto size_col = column(kSizeColumn);
  const auto counter_col = column(kCounterColumn);
  const auto hex_col = column(kHexColumn);
  if (!algo_col || !size_col || !counter_col || !hex_col) {
    err << "error: input must have columns dstream_algo, dstream_S, dstream_T, "
           "dstream_storage_hex\n";
    return kExitUsage;
  }

  csv::Row out_header{"dstream_row"};
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != *hex_col) out_header.push_back(header[c]);
  }
  out_header.insert(out_header.end(), {"dstream_site", "dstream_Tbar", "dstream_value"});
  csv::write_row(out, out_header);
  csv::write_row(rejects, {"dstream_row", "error"});

  std::size_t reject_count = 0;
  std::size_t ordinal = 0;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const csv::Row& row = table[r];
    if (row.size() == 1 && row.front().empty()) continue;  // blank line
    const std::size_t this_row = ordinal++;
    try {
      if (row.size() != header.size()) {
        throw parse_error("row has " + std::to_string(row.size()) + " fields, header has " +
                          std::to_string(header.size()));
      }
      const DumpRow dump{parse_algorithm(row[*algo_col]),
                         static_cast<site_t>(std::min<std::uint64_t>(parse_uint(row[*size_col]),
                                                                     ~site_t{0})),
                         parse_uint(row[*counter_col]), options.value_bits, row[*hex_col]};
      const auto records = explode_row(dump, this_row);
      csv::Row prefix{std::to_string(this_row)};
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c != *hex_col) prefix.push_back(row[c]);
      }
      for (const auto& rec : records) {
        csv::Row line = prefix;
        line.push_back(std::to_string(rec.site));
        line.push_back(rec.Tbar ? std::to_string(*rec.Tbar) : std::string{});
        line.push_back(rec.value ? std::to_string(*rec.value) : std::string{});
        csv::write_row(out, line);
      }
    } catch (const error& e) {
      ++reject_count;
      csv::write_row(rejects, {std::to_string(this_row), e.what()});
    }
  }
  return reject_count == 0 ? kExitOk : kExitData;
}

// --------------------------------------------------------------- validate

struct ValidateOptions {
  std::vector<AlgorithmId> algos{AlgorithmId::steady()};
  site_t max_S = 64;
  tick_t max_T = 1024;
  // Extra steady vectors per S at random 64-bit T.
  std::size_t large_samples = 0;
  std::uint64_t seed = 0x5eed;
};

// Writes the conformance vector table `algo,S,T,expected`; expected lists
// the selected sites separated by spaces, empty for discard.
inline int cmd_validate_generate(const ValidateOptions& options, std::ostream& out,
                                 std::ostream& err) {
  try {
    csv::write_row(out, {"algo", "S", "T", "expected"});
    for (const auto& algo : options.algos) {
      std::vector<site_t> sizes;
      if (algo.is_hybrid()) {
        sizes.push_back(static_cast<site_t>(algo.hybrid_size()));
      } else {
        for (std::uint64_t S = kMinSites; S <= options.max_S; S *= 2) sizes.push_back(static_cast<site_t>(S));
      }
      const std::string name = to_string(algo);
      for (const site_t S : sizes) {
        const auto layout = algo.layout(S);
        const bool replays = std::any_of(layout.begin(), layout.end(), [](const HybridSegment& seg) {
          return seg.curation != Curation::steady;
        });
        for (tick_t T = 0; T < options.max_T; ++T) {
          if (!has_ingest_capacity(algo, S, T)) break;
          if (replays && T >= kReplayCap) break;
          csv::write_row(out, {name, std::to_string(S), std::to_string(T),
                               format_selection(assign(algo, S, T))});
        }
        if (!algo.is_hybrid() && algo.curation() == Curation::steady) {
          std::mt19937_64 rng(options.seed ^ S);
          for (std::size_t i = 0; i < options.large_samples; ++i) {
            const tick_t T = rng();
            csv::write_row(out, {name, std::to_string(S), std::to_string(T),
                                 format_selection(assign(algo, S, T))});
          }
        }
      }
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

// Recomputes every vector; reports one line per mismatch to `report`.
inline int cmd_validate_check(std::istream& in, std::ostream& report, std::ostream& err) {
  std::vector<csv::Row> table;
  try {
    table = csv::read(in);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (table.empty() || table.front() != csv::Row{"algo", "S", "T", "expected"}) {
    err << "error: vector file must start with header algo,S,T,expected\n";
    return kExitUsage;
  }
  struct Vector {
    std::size_t line;
    AlgorithmId algo;
    site_t S;
    tick_t T;
    SiteSelection expected;
  };
  std::vector<Vector> vectors;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const csv::Row& row = table[r];
    if (row.size() == 1 && row.front().empty()) continue;
    try {
      if (row.size() != 4) throw parse_error("expected 4 fields");
      vectors.push_back({r + 1, parse_algorithm(row[0]), parse_site_count(row[1]),
                         parse_uint(row[2]), parse_selection(row[3])});
    } catch (const error& e) {
      err << "error: line " << r + 1 << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }

  std::size_t mismatches = 0;
  for (const auto& v : vectors) {
    std::string got;
    try {
      const SiteSelection actual = assign(v.algo, v.S, v.T);
      if (actual == v.expected) continue;
      got = format_selection(actual);
      if (got.empty()) got = "discard";
    } catch (const error& e) {
      got = std::string("error: ") + e.what();
    }
    ++mismatches;
    const std::string want = v.expected.discarded() ? "discard" : format_selection(v.expected);
    report << "mismatch line " << v.line << ": " << to_string(v.algo) << " S=" << v.S
           << " T=" << v.T << " expected " << want << " got " << got << '\n';
  }
  report << vectors.size() << " vectors checked, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitData;
}

// ------------------------------------------------------------------ bench

struct BenchOptions {
  Curation algo = Curation::steady;
  std::vector<site_t> sizes{64, 256, 1024};
  std::vector<DepthWindow> depths{{0, tick_t{1} << 16}};
  unsigned replicates = 30;
};

// "lo:hi" with parse_count syntax on both sides.
inline DepthWindow parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw parse_error("depth window must be lo:hi");
  return {parse_count(text.substr(0, colon)), parse_count(text.substr(colon + 1))};
}

inline int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<BenchRow> rows;
  try {
    rows = run_bench(options.algo, options.sizes, options.depths, options.replicates);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  csv::write_row(out, {"algo", "S", "T_lo", "T_hi", "items", "total_ns", "ns_per_item", "replicate"});
  for (const auto& row : rows) {
    std::ostringstream ns;
    ns << std::fixed << std::setprecision(3) << row.ns_per_item;
    csv::write_row(out, {std::string(to_string(row.algo)), std::to_string(row.S),
                         std::to_string(row.T_lo), std::to_string(row.T_hi),
                         std::to_string(row.items), std::to_string(row.total_ns), ns.str(),
                         std::to_string(row.replicate)});
  }
  return kExitOk;
}

// ----------------------------------------------------------------- lookup

// Prints "k<TAB>Tbar" per site, Tbar empty for unwritten sites.
inline int cmd_lookup(const AlgorithmId& algo, site_t S, tick_t T, std::ostream& out,
                      std::ostream& err) {
  LookupTable table;
  try {
    table = lookup(algo, S, T);
  } catch (const configuration_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  for (site_t k = 0; k < S; ++k) {
    out << k << '\t';
    if (table.entries[k]) out << *table.entries[k];
    out << '\n';
  }
  return kExitOk;
}

}  // namespace downstream::cli
