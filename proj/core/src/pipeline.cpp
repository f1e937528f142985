#include "gromov/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "gromov/errors.hpp"

namespace gromov {

bool AdjacencyGraph::adjacent(int u, int v) const {
  const std::vector<int>& row = adjacency[u];
  return std::binary_search(row.begin(), row.end(), v);
}

AdjacencyGraph make_adjacency_graph(int n, const std::vector<std::pair<int, int>>& edges,
                                    int base) {
  if (n <= 0) throw_validation_error(ErrorKind::EmptyMatrix, -1, -1, -1, "graph needs n >= 1");
  if (base < 0 || base >= n)
    throw_validation_error(ErrorKind::IndexOutOfRange, base, -1, -1, "basepoint vertex");

  AdjacencyGraph g{n, base, std::vector<std::vector<int>>(n)};
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n) throw_validation_error(ErrorKind::IndexOutOfRange, u);
    if (v < 0 || v >= n) throw_validation_error(ErrorKind::IndexOutOfRange, v);
    if (u == v) throw_validation_error(ErrorKind::SelfLoop, u);
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (int u = 0; u < n; ++u) {
    std::vector<int>& row = g.adjacency[u];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) throw_validation_error(ErrorKind::DuplicateEdge, u, *dup);
  }

  // connectivity
  std::vector<int> dist = bfs_distances(g, 0);
  (void)dist;
  return g;
}

AdjacencyGraph adjacency_graph_from_matrix(const std::vector<std::vector<double>>& matrix,
                                           int base) {
  SquareMatrix m = matrix_from_rows(matrix);
  const int n = m.size();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    if (m(i, i) > 0.5) throw_validation_error(ErrorKind::SelfLoop, i);
    for (int j = i + 1; j < n; ++j) {
      if ((m(i, j) > 0.5) != (m(j, i) > 0.5))
        throw_validation_error(ErrorKind::AsymmetricEntry, i, j);
      if (m(i, j) > 0.5) edges.emplace_back(i, j);
    }
  }
  return make_adjacency_graph(n, edges, base);
}

std::vector<std::vector<double>> adjacency_matrix(const AdjacencyGraph& g) {
  std::vector<std::vector<double>> m(g.n, std::vector<double>(g.n, 0.0));
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adjacency[u]) m[u][v] = 1.0;
  return m;
}

std::vector<int> bfs_distances(const AdjacencyGraph& g, int source) {
  if (source < 0 || source >= g.n) throw_validation_error(ErrorKind::IndexOutOfRange, source);
  std::vector<int> dist(g.n, -1);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : g.adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (dist[v] < 0) throw_validation_error(ErrorKind::Disconnected, v);
  return dist;
}

Hyperbolicity TreeApproximation::source_delta() const {
  if (!source) throw std::logic_error("TreeApproximation has no source matrix");
  return delta_hyperbolicity(*source);
}

namespace {

// Shared tail of both gtree routes: close the products, invert, and run the
// O(n^2)-affordable sanity checks (basepoint row preserved; no entry above
// the bound supplied by the caller).
DistanceMatrix close_and_invert(const ProductMatrix& products) {
  BottleneckResult closed = apbp(CapacityMatrix{products.entries});
  ProductMatrix m{std::move(closed.entries), products.base};
  return igprd(m, /*validate_output=*/false);
}

void check_base_row_preserved(const DistanceMatrix& result, const SquareMatrix& reference,
                              bool reference_is_distance) {
  const int n = result.size();
  const int w = result.base;
  for (int i = 0; i < n; ++i) {
    const double expect = reference_is_distance ? reference(w, i) : reference(i, i);
    if (result.entries(w, i) != expect && std::fabs(result.entries(w, i) - expect) > kDefaultTol)
      throw std::logic_error("approximating tree failed to preserve basepoint distances");
  }
}

}  // namespace

TreeApproximation gtree(const DistanceMatrix& d) {
  DistanceMatrix a = close_and_invert(gprd(d));

  check_base_row_preserved(a, d.entries, /*reference_is_distance=*/true);
  const int n = d.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.entries(i, j) > d.entries(i, j) + kDefaultTol)
        throw std::logic_error("approximating tree increased a distance");

  return TreeApproximation{std::move(a), d};
}

BottleneckResult apbp_via_gtree(const CapacityMatrix& c) {
  const int n = c.size();
  // EXTE(C) is the product matrix of a metric space on n+1 points, so the
  // inversion below needs no revalidation.
  ProductMatrix extended = exte(c);
  DistanceMatrix space = igprd(extended, /*validate_output=*/false);
  TreeApproximation approx = gtree(space);
  ProductMatrix products = gprd(approx.distances);

  SquareMatrix result(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      result(i, j) = (i == j) ? c.entries(i, i) : products.entries(i, j);
  return BottleneckResult{std::move(result)};
}

ProductMatrix lprd(const AdjacencyGraph& g) {
  const int n = g.n;
  const int w = g.base;
  const std::vector<int> depth = bfs_distances(g, w);

  SquareMatrix k(n, 0.0);
  for (int i = 0; i < n; ++i) k(i, i) = static_cast<double>(depth[i]);
  for (int i = 0; i < n; ++i) {
    if (i == w) continue;
    for (int j : g.adjacency[i]) {
      if (j <= i || j == w) continue;
      const double v = 0.5 * (depth[i] + depth[j] - 1);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return ProductMatrix{std::move(k), w};
}

TreeApproximation gtree_from_graph(const AdjacencyGraph& g, bool with_source) {
  ProductMatrix k = lprd(g);
  SquareMatrix diag = k.entries;  // keep the depths for the base-row check
  DistanceMatrix a = close_and_invert(k);
  check_base_row_preserved(a, diag, /*reference_is_distance=*/false);

  TreeApproximation approx{std::move(a), std::nullopt};
  if (with_source) {
    SquareMatrix d(g.n);
    for (int s = 0; s < g.n; ++s) {
      const std::vector<int> dist = bfs_distances(g, s);
      for (int t = 0; t < g.n; ++t) d(s, t) = static_cast<double>(dist[t]);
    }
    approx.source = DistanceMatrix{std::move(d), g.base, /*strict=*/true};
  }
  return approx;
}

}  // namespace gromov
