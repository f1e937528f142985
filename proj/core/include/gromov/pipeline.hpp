#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gromov/bottleneck.hpp"
#include "gromov/metric.hpp"

namespace gromov {

/// Undirected simple connected graph with a distinguished basepoint vertex,
/// kept as sorted adjacency lists.
struct AdjacencyGraph {
  int n = 0;
  int base = 0;
  std::vector<std::vector<int>> adjacency;

  int size() const { return n; }
  bool adjacent(int u, int v) const;
};

/// Validates vertex indices, rejects loops and duplicate edges, checks
/// connectivity.
AdjacencyGraph make_adjacency_graph(int n, const std::vector<std::pair<int, int>>& edges,
                                    int base);

/// Reads a 0/1 adjacency matrix (anything > 0.5 counts as an edge).
AdjacencyGraph adjacency_graph_from_matrix(const std::vector<std::vector<double>>& matrix,
                                           int base);

std::vector<std::vector<double>> adjacency_matrix(const AdjacencyGraph& g);

/// Hop distances from `source` by breadth-first traversal (edges all have
/// unit length, so this matches Dijkstra on the adjacency matrix).
std::vector<int> bfs_distances(const AdjacencyGraph& g, int source);

/// The tree pseudo-metric produced by gtree, together with the input it was
/// computed from. `source` is absent for the adjacency-matrix route unless
/// explicitly requested there (it costs n BFS runs).
struct TreeApproximation {
  DistanceMatrix distances;
  std::optional<DistanceMatrix> source;

  /// Hyperbolicity of the source space, computed on demand.
  Hyperbolicity source_delta() const;
};

/// Gromov's approximating tree of a distance matrix: the largest
/// 0-hyperbolic pseudo-metric below d that preserves all distances to the
/// basepoint. Computed as igprd(apbp(gprd(d))) in O(n^2).
TreeApproximation gtree(const DistanceMatrix& d);

/// Bottleneck paths solved through the tree approximation: extend C to a
/// product matrix on n+1 points, take the approximating tree of its
/// recombined distance matrix, and read the products back. Agrees with
/// apbp(c) off the diagonal; the diagonal is copied from C.
BottleneckResult apbp_via_gtree(const CapacityMatrix& c);

/// Gromov products restricted to adjacent pairs, straight from the graph:
/// diagonal entries are hop distances to the basepoint, adjacent pairs get
/// (k_ii + k_jj - 1) / 2, everything else (including the basepoint row) is
/// zero. O(n^2).
ProductMatrix lprd(const AdjacencyGraph& g);

/// Approximating tree of a connected graph in O(n^2), without materializing
/// its distance matrix: igprd(apbp(lprd(g))). Equals gtree applied to the
/// BFS all-pairs distance matrix. With `with_source` that matrix is built
/// (n BFS runs) and attached.
TreeApproximation gtree_from_graph(const AdjacencyGraph& g, bool with_source = false);

}  // namespace gromov
