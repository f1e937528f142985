#include "gromov/treeize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "disjoint_set.hpp"
#include "gromov/errors.hpp"
#include "gromov/io.hpp"

namespace gromov {

namespace {

struct BuildNode {
  double depth = 0.0;
  double length = 0.0;  // edge to the parent, set when attached
  int parent = -1;
  std::vector<int> children;
  std::vector<int> points;
  bool dead = false;
};

struct PairEntry {
  double value;
  int i;
  int j;
};

class TreeBuilder {
 public:
  int add(double depth) {
    BuildNode node;
    node.depth = depth;
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
  }

  void attach(int parent, int child) {
    nodes[child].parent = parent;
    nodes[parent].children.push_back(child);
  }

  // Absorbs src into dst (same depth): children and points move over.
  void fold(int dst, int src) {
    for (int c : nodes[src].children) {
      nodes[c].parent = dst;
      nodes[dst].children.push_back(c);
    }
    nodes[dst].points.insert(nodes[dst].points.end(), nodes[src].points.begin(),
                             nodes[src].points.end());
    nodes[src].children.clear();
    nodes[src].points.clear();
    nodes[src].dead = true;
  }

  std::vector<BuildNode> nodes;
};

}  // namespace

WeightedTree realize_tree(const TreeApproximation& approx, double tol) {
  const DistanceMatrix& dist = approx.distances;
  const int n = dist.size();
  const int base = dist.base;
  const ProductMatrix products = gprd(dist);
  const SquareMatrix& m = products.entries;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m(i, j) < std::min(m(i, k), m(k, j)) - tol)
          throw_validation_error(ErrorKind::NotZeroHyperbolic, i, j, k,
                                 "products are not max-min transitive");

  TreeBuilder builder;
  const int root = builder.add(0.0);
  builder.nodes[root].points.push_back(base);

  // Every non-base point starts as a leaf at its distance to the basepoint.
  std::vector<int> leaf_node(n, -1);
  for (int i = 0; i < n; ++i) {
    if (i == base) continue;
    leaf_node[i] = builder.add(m(i, i));
    builder.nodes[leaf_node[i]].points.push_back(i);
  }

  std::vector<PairEntry> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    if (i == base) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == base) continue;
      pairs.push_back({m(i, j), i, j});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairEntry& a, const PairEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  // Single-linkage merging: clusters meet at depth equal to their bottleneck
  // product. A cluster's pending top is its shallowest node so far.
  detail::DisjointSet dsu(n);
  std::vector<int> cluster_top(n, -1);
  for (int i = 0; i < n; ++i)
    if (i != base) cluster_top[i] = leaf_node[i];

  for (const PairEntry& pair : pairs) {
    const int ri = dsu.find(pair.i);
    const int rj = dsu.find(pair.j);
    if (ri == rj) continue;
    const int top_i = cluster_top[ri];
    const int top_j = cluster_top[rj];
    const double di = builder.nodes[top_i].depth;
    const double dj = builder.nodes[top_j].depth;
    const double p = pair.value;

    int merged_top;
    if (di - p <= tol && dj - p <= tol) {
      builder.fold(top_i, top_j);
      merged_top = top_i;
    } else if (di - p <= tol) {
      builder.attach(top_i, top_j);
      builder.nodes[top_j].length = dj - p;
      merged_top = top_i;
    } else if (dj - p <= tol) {
      builder.attach(top_j, top_i);
      builder.nodes[top_i].length = di - p;
      merged_top = top_j;
    } else {
      merged_top = builder.add(p);
      builder.attach(merged_top, top_i);
      builder.attach(merged_top, top_j);
      builder.nodes[top_i].length = di - p;
      builder.nodes[top_j].length = dj - p;
    }
    const int survivor = dsu.unite(ri, rj);
    cluster_top[survivor] = merged_top;
  }

  // Hang the final cluster (all non-base points) below the root.
  for (int i = 0; i < n; ++i) {
    if (i == base) continue;
    const int r = dsu.find(i);
    if (cluster_top[r] < 0) continue;
    const int top = cluster_top[r];
    const double d = builder.nodes[top].depth;
    if (d <= tol) {
      builder.fold(root, top);
    } else {
      builder.attach(root, top);
      builder.nodes[top].length = d;
    }
    cluster_top[r] = -1;
  }

  // Compact away folded nodes, keeping creation order (root stays 0).
  std::vector<int> remap(builder.nodes.size(), -1);
  WeightedTree tree;
  tree.root = 0;
  tree.leaf_map.assign(n, -1);
  for (std::size_t id = 0; id < builder.nodes.size(); ++id) {
    if (builder.nodes[id].dead) continue;
    remap[id] = tree.node_count();
    tree.nodes.push_back({});
  }
  for (std::size_t id = 0; id < builder.nodes.size(); ++id) {
    const BuildNode& src = builder.nodes[id];
    if (src.dead) continue;
    WeightedTree::Node& dst = tree.nodes[remap[id]];
    dst.parent = (src.parent < 0) ? -1 : remap[src.parent];
    dst.length = src.length;
    dst.points = src.points;
    std::sort(dst.points.begin(), dst.points.end());
    for (int p : dst.points) tree.leaf_map[p] = remap[id];
  }
  for (int id = 0; id < tree.node_count(); ++id) {
    if (tree.nodes[id].parent >= 0) tree.nodes[tree.nodes[id].parent].children.push_back(id);
  }
  tree.base_point = base;
  return tree;
}

namespace {

void check_label(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("empty point label");
  if (label.find_first_of("(),:;'\"[] \t\r\n") != std::string::npos)
    throw std::invalid_argument("label contains a character reserved by the Newick format: " +
                                label);
}

}  // namespace

std::string to_newick(const WeightedTree& tree, const NewickOptions& options) {
  const int n_points = static_cast<int>(tree.leaf_map.size());
  std::vector<std::string> labels = options.labels;
  if (labels.empty()) {
    labels.reserve(n_points);
    for (int i = 0; i < n_points; ++i) labels.push_back("x" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels.size()) != n_points)
    throw std::invalid_argument("expected " + std::to_string(n_points) + " labels, got " +
                                std::to_string(labels.size()));
  for (const std::string& label : labels) check_label(label);

  // Smallest point index in each subtree, used for child ordering.
  std::vector<int> min_point(tree.nodes.size(), std::numeric_limits<int>::max());
  const std::function<int(int)> fill_min = [&](int id) {
    int best = std::numeric_limits<int>::max();
    for (int p : tree.nodes[id].points) best = std::min(best, p);
    for (int c : tree.nodes[id].children) best = std::min(best, fill_min(c));
    min_point[id] = best;
    return best;
  };
  fill_min(tree.root);

  struct ChildItem {
    int order_key;
    int node = -1;   // subtree, or
    int point = -1;  // zero-length coincident leaf (split mode)
  };

  std::string out;
  const std::function<void(int, bool)> render = [&](int id, bool is_root) {
    const WeightedTree::Node& node = tree.nodes[id];

    std::vector<int> label_points = node.points;
    std::vector<ChildItem> items;
    for (int c : node.children) items.push_back({min_point[c], c, -1});
    if (options.split_coincident) {
      // Each point becomes its own zero-length leaf; the root keeps the
      // basepoint as its label.
      std::vector<int> keep;
      for (int p : label_points) {
        if (is_root && p == tree.base_point) {
          keep.push_back(p);
        } else if (node.children.empty() && label_points.size() == 1) {
          keep.push_back(p);  // an ordinary leaf needs no splitting
        } else {
          items.push_back({p, -1, p});
        }
      }
      label_points = keep;
    }
    std::sort(items.begin(), items.end(),
              [](const ChildItem& a, const ChildItem& b) { return a.order_key < b.order_key; });

    if (!items.empty()) {
      out += '(';
      for (std::size_t idx = 0; idx < items.size(); ++idx) {
        if (idx > 0) out += ',';
        if (items[idx].node >= 0) {
          render(items[idx].node, false);
        } else {
          out += labels[items[idx].point];
          out += ":0";
        }
      }
      out += ')';
    }
    for (std::size_t idx = 0; idx < label_points.size(); ++idx) {
      if (idx > 0) out += '_';
      out += labels[label_points[idx]];
    }
    if (!is_root) {
      out += ':';
      out += format_branch_length(node.length, options.precision);
    }
  };
  render(tree.root, true);
  out += ';';
  return out;
}

}  // namespace gromov
