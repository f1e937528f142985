#include "gromov/bottleneck.hpp"

#include <algorithm>
#include <limits>

#include "disjoint_set.hpp"

namespace gromov {

std::vector<TreeEdge> max_spanning_tree(const CapacityMatrix& c) {
  const int n = c.size();
  std::vector<TreeEdge> edges;
  if (n <= 1) return edges;
  edges.reserve(n - 1);

  std::vector<char> in_tree(n, 0);
  std::vector<double> best_cap(n, -std::numeric_limits<double>::infinity());
  std::vector<int> best_from(n, 0);
  in_tree[0] = 1;
  for (int v = 1; v < n; ++v) {
    best_cap[v] = c.entries(0, v);
    best_from[v] = 0;
  }

  for (int step = 1; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (pick < 0 || best_cap[v] > best_cap[pick]) pick = v;
    }
    edges.push_back({best_from[pick], pick, best_cap[pick]});
    in_tree[pick] = 1;
    for (int v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (c.entries(pick, v) > best_cap[v]) {
        best_cap[v] = c.entries(pick, v);
        best_from[v] = pick;
      }
    }
  }
  return edges;
}

BottleneckResult apbp(const CapacityMatrix& c) {
  const int n = c.size();
  SquareMatrix result(n, 0.0);
  for (int i = 0; i < n; ++i) result(i, i) = c.entries(i, i);
  if (n <= 1) return BottleneckResult{std::move(result)};

  std::vector<TreeEdge> edges = max_spanning_tree(c);
  std::sort(edges.begin(), edges.end(), [](const TreeEdge& a, const TreeEdge& b) {
    if (a.capacity != b.capacity) return a.capacity > b.capacity;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  detail::DisjointSet dsu(n);
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[v] = {v};

  for (const TreeEdge& e : edges) {
    const int ru = dsu.find(e.u);
    const int rv = dsu.find(e.v);
    // First contact between the two components happens at the bottleneck
    // capacity of every pair across them.
    for (int a : members[ru])
      for (int b : members[rv]) {
        result(a, b) = e.capacity;
        result(b, a) = e.capacity;
      }
    int survivor = dsu.unite(ru, rv);
    int absorbed = (survivor == ru) ? rv : ru;
    std::vector<int>& dst = members[survivor];
    std::vector<int>& src = members[absorbed];
    dst.insert(dst.end(), src.begin(), src.end());
    src.clear();
    src.shrink_to_fit();
  }
  return BottleneckResult{std::move(result)};
}

BottleneckResult maxmin_closure_naive(const CapacityMatrix& c) {
  const int n = c.size();
  SquareMatrix m = c.entries;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double via = std::min(m(i, k), m(k, j));
        if (via > m(i, j)) m(i, j) = via;
      }
  return BottleneckResult{std::move(m)};
}

}  // namespace gromov
