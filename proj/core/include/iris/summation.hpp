#pragma once

#include <cstddef>
#include <vector>

namespace iris {

/// Pairwise (cascade) summation: operands are combined in a balanced
/// binary tree, so rounding error grows with log2 of the term count.
template <class T>
class PairwiseSum {
 public:
  void add(T x) {
    for (std::size_t level = 0;; ++level) {
      if (level == slots_.size()) {
        slots_.push_back(x);
        used_.push_back(true);
        return;
      }
      if (!used_[level]) {
        slots_[level] = x;
        used_[level] = true;
        return;
      }
      x = slots_[level] + x;
      used_[level] = false;
    }
  }

  T total() const {
    T acc{};
    for (std::size_t level = 0; level < slots_.size(); ++level)
      if (used_[level]) acc = slots_[level] + acc;
    return acc;
  }

  void merge(const PairwiseSum& other) { add(other.total()); }

 private:
  std::vector<T> slots_;
  std::vector<bool> used_;
};

}  // namespace iris
