#pragma once

#include <string>
#include <vector>

#include "gromov/pipeline.hpp"

namespace gromov {

/// Explicit weighted tree realizing a tree pseudo-metric. The root carries
/// the basepoint; input points at pseudo-distance 0 share one node, so some
/// nodes carry several points and pure branch (Steiner) nodes carry none.
struct WeightedTree {
  struct Node {
    int parent = -1;             // -1 only for the root
    double length = 0.0;         // edge length to the parent
    std::vector<int> children;   // ordered by node id
    std::vector<int> points;     // input points mapped here, ascending
  };

  std::vector<Node> nodes;
  int root = 0;
  int base_point = 0;         // the input point sitting at the root
  std::vector<int> leaf_map;  // point index -> node id

  int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Builds the tree for a 0-hyperbolic pseudo-metric by single-linkage style
/// merging of Gromov products in decreasing order: point i hangs at depth
/// (i|i) below the root and the meet of i and j sits at depth (i|j), so path
/// lengths reproduce the input distances. Throws NotZeroHyperbolic when the
/// products are not max-min transitive within tol.
WeightedTree realize_tree(const TreeApproximation& approx, double tol = kDefaultTol);

struct NewickOptions {
  /// One label per input point; empty means x1..xn.
  std::vector<std::string> labels;
  /// Render every co-located point as its own zero-length leaf instead of
  /// joining labels with underscores.
  bool split_coincident = false;
  /// Digits after the decimal point before trailing zeros are trimmed.
  int precision = 9;
};

/// Single-line Newick serialization, rooted at the basepoint, children
/// ordered by the smallest point index in their subtree.
std::string to_newick(const WeightedTree& tree, const NewickOptions& options = {});

}  // namespace gromov
