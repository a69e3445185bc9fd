#pragma once

// Long-format expansion of buffer dumps: one record per site with the
// resident item's arrival index and decoded value.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "downstream/algorithm.hpp"
#include "downstream/hex.hpp"
#include "downstream/lookup.hpp"

namespace downstream {

// One dumped buffer: algorithm, size, ingest counter, and packed slots.
struct DumpRow {
  AlgorithmId algo;
  site_t S;
  tick_t T;
  unsigned value_bits;
  std::string hex;
};

struct StreamRecord {
  std::size_t row;
  site_t site;
  std::optional<tick_t> Tbar;
  std::optional<std::uint64_t> value;

  friend bool operator==(const StreamRecord&, const StreamRecord&) = default;
};

struct RowReject {
  std::size_t row;
  std::string reason;
};

struct ExplodeResult {
  std::vector<StreamRecord> records;
  std::vector<RowReject> rejects;
};

// Records for one dump, sites ascending. Throws on bad parameters or hex.
inline std::vector<StreamRecord> explode_row(const DumpRow& dump, std::size_t ordinal) {
  dump.algo.validate_for(dump.S);
  const std::vector<std::uint64_t> values = unpack_hex(dump.hex, dump.S, dump.value_bits);
  const LookupTable table = lookup(dump.algo, dump.S, dump.T);
  std::vector<StreamRecord> records;
  records.reserve(dump.S);
  for (site_t k = 0; k < dump.S; ++k) {
    StreamRecord rec{ordinal, k, table.entries[k], std::nullopt};
    if (rec.Tbar) rec.value = values[k];
    records.push_back(rec);
  }
  return records;
}

// Failing rows are reported in rejects and skipped; the rest are expanded in
// input order.
inline ExplodeResult explode_records(std::span<const DumpRow> rows) {
  ExplodeResult result;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      auto records = explode_row(rows[i], i);
      result.records.insert(result.records.end(), records.begin(), records.end());
    } catch (const error& e) {
      result.rejects.push_back({i, e.what()});
    }
  }
  return result;
}

}  // namespace downstream
