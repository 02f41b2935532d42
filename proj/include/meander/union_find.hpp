#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace meander {

// Disjoint sets over {0..size-1} with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(size), size_(size, 1), components_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

}  // namespace meander
