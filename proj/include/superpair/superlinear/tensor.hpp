#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superpair/superlinear/scalar.hpp"

namespace superpair {

/// Sparse structure tensor: sorted coordinate list with duplicate indices
/// summed and zero entries dropped.
template <std::size_t Order>
class SparseTensor {
 public:
  using Index = std::array<std::size_t, Order>;
  using Entry = std::pair<Index, Scalar>;

  SparseTensor() { extents_.fill(0); }
  /// Throws std::out_of_range if an index exceeds its extent.
  SparseTensor(Index extents, std::vector<Entry> entries) : extents_(extents), entries_(std::move(entries)) {
    for (const auto& [idx, value] : entries_) {
      for (std::size_t k = 0; k < Order; ++k) {
        if (idx[k] >= extents_[k]) {
          throw std::out_of_range("tensor index " + std::to_string(idx[k]) + " in slot " + std::to_string(k) +
                                  " exceeds extent " + std::to_string(extents_[k]));
        }
      }
    }
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    for (auto& e : entries_) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
    entries_ = std::move(merged);
  }

  const Index& extents() const { return extents_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Scalar at(const Index& idx) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                               [](const Entry& e, const Index& i) { return e.first < i; });
    return (it != entries_.end() && it->first == idx) ? it->second : Scalar(0);
  }

  friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
    return a.extents_ == b.extents_ && a.entries_ == b.entries_;
  }

 private:
  Index extents_;
  std::vector<Entry> entries_;
};

}  // namespace superpair
