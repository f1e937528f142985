#pragma once

#include <vector>

#include "gromov/metric.hpp"

namespace gromov {

/// Solution of the all-pairs bottleneck paths problem: entry (i,j), i != j,
/// is the largest value of min-edge-capacity over paths from i to j in the
/// complete graph with capacities C; the diagonal is copied from C.
struct BottleneckResult {
  SquareMatrix entries;

  int size() const { return entries.size(); }
};

struct TreeEdge {
  int u = 0;
  int v = 0;
  double capacity = 0.0;
};

/// Maximum spanning tree of the complete graph on C, grown greedily from
/// vertex 0 in O(n^2). Ties pick the smallest vertex index. Empty for n = 1.
std::vector<TreeEdge> max_spanning_tree(const CapacityMatrix& c);

/// O(n^2) bottleneck-paths solver: grows the maximum spanning tree, then
/// replays its edges by decreasing capacity through a union-find structure;
/// the capacity that first joins two components is exactly their bottleneck
/// value, and each of the n(n-1)/2 pairs is written once.
BottleneckResult apbp(const CapacityMatrix& c);

/// O(n^3) max-min closure over intermediate vertices; the independent oracle
/// apbp is cross-checked against.
BottleneckResult maxmin_closure_naive(const CapacityMatrix& c);

}  // namespace gromov
