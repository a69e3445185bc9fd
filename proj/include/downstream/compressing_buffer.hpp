#pragma once

// Compressing circular buffer: steady curation by modular thinning. Keeps
// every m-th stream item; when the buffer fills it drops every second item
// in place and doubles m. Unlike Surface, compression relocates items.

#include <cstdint>
#include <string>
#include <vector>

#include "downstream/errors.hpp"
#include "downstream/oracle.hpp"

namespace downstream {

template <typename Value>
class CompressingBuffer {
 public:
  struct Item {
    std::uint64_t index;
    Value value;
  };

  explicit CompressingBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity < 2 || capacity % 2 != 0) {
      throw configuration_error("compressing buffer capacity must be even and >= 2, got " +
                                std::to_string(capacity));
    }
    items_.reserve(capacity);
  }

  std::size_t capacity() const noexcept { return capacity_; }
  std::uint64_t interval() const noexcept { return interval_; }
  std::size_t occupancy() const noexcept { return items_.size(); }
  const std::vector<Item>& items() const noexcept { return items_; }

  // Offers stream item T (must be the next index, starting at 0). Returns
  // whether it was stored.
  bool ingest(std::uint64_t T, const Value& value) {
    if (T != next_) {
      throw sequence_error("expected stream index " + std::to_string(next_) + ", got " +
                           std::to_string(T));
    }
    ++next_;
    if (T % interval_ != 0) return false;
    if (items_.size() == capacity_) compress();
    if (T % interval_ != 0) return false;
    items_.push_back({T, value});
    return true;
  }

  oracle::RetainedSet retained() const {
    oracle::RetainedSet out;
    out.reserve(items_.size());
    for (const auto& item : items_) out.push_back(item.index);
    return out;
  }

 private:
  void compress() {
    const std::uint64_t keep = interval_ * 2;
    std::erase_if(items_, [keep](const Item& item) { return item.index % keep != 0; });
    interval_ = keep;
  }

  std::size_t capacity_;
  std::uint64_t interval_ = 1;
  std::uint64_t next_ = 0;
  std::vector<Item> items_;
};

}  // namespace downstream
