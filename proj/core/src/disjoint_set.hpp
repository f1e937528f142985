#pragma once

#include <numeric>
#include <vector>

namespace gromov::detail {

// Union-find with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Merges the sets of a and b; returns the surviving root, or -1 when they
  // were already together.
  int unite(int a, int b) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) return -1;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    return ra;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace gromov::detail
