#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "gromov/errors.hpp"
#include "gromov/metric.hpp"
#include "gromov/pipeline.hpp"
#include "gromov/treeize.hpp"
#include "test_support.hpp"

using namespace gromov;
using testsupport::EntryKind;
using testsupport::Rng;

namespace {

WeightedTree tree_of(const std::vector<std::vector<double>>& rows, int base) {
  return realize_tree(gtree(validate_distance_matrix(rows, base, false)));
}

void check_distances_realized(const WeightedTree& tree, const SquareMatrix& expected,
                              double tol) {
  const int n = expected.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double got = testsupport::tree_point_distance(tree, i, j);
      CHECK(std::fabs(got - expected(i, j)) <= tol);
    }
}

void check_structure(const WeightedTree& tree) {
  CHECK(tree.root == 0);
  CHECK(tree.nodes[tree.root].parent == -1);
  CHECK(tree.nodes[tree.root].length == 0.0);
  for (int id = 0; id < tree.node_count(); ++id) {
    const WeightedTree::Node& node = tree.nodes[id];
    if (id != tree.root) {
      CHECK(node.parent >= 0);
      CHECK(node.length > 0.0);
    }
    CHECK(std::is_sorted(node.children.begin(), node.children.end()));
    for (int c : node.children) CHECK(tree.nodes[c].parent == id);
    // Branch nodes exist only to join at least two subtrees.
    if (node.points.empty() && id != tree.root) CHECK(node.children.size() >= 2);
  }
  for (std::size_t p = 0; p < tree.leaf_map.size(); ++p) {
    const int id = tree.leaf_map[p];
    REQUIRE(id >= 0);
    const auto& pts = tree.nodes[id].points;
    CHECK(std::find(pts.begin(), pts.end(), static_cast<int>(p)) != pts.end());
  }
  CHECK(tree.leaf_map[tree.base_point] == tree.root);
}

}  // namespace

TEST_SUITE("treeize") {

TEST_CASE("path metric realizes as a chain") {
  const WeightedTree t = tree_of(testsupport::p3_rows(), 2);
  check_structure(t);
  REQUIRE(t.node_count() == 3);
  CHECK(t.base_point == 2);
  CHECK(t.nodes[t.root].points == std::vector<int>{2});
  // x2 hangs below the root, x1 below x2, each edge of length 1.
  const int mid = t.leaf_map[1];
  const int far = t.leaf_map[0];
  CHECK(t.nodes[mid].parent == t.root);
  CHECK(t.nodes[mid].length == 1.0);
  CHECK(t.nodes[far].parent == mid);
  CHECK(t.nodes[far].length == 1.0);
  check_distances_realized(t, matrix_from_rows(testsupport::p3_rows()), 0.0);
}

TEST_CASE("4-cycle realizes with opposite points on one node") {
  const WeightedTree t = tree_of(testsupport::c4_rows(), 3);
  check_structure(t);
  CHECK(t.leaf_map[0] == t.leaf_map[2]);
  CHECK(t.nodes[t.leaf_map[0]].points == std::vector<int>{0, 2});
  const SquareMatrix expected =
      matrix_from_rows({{0, 1, 0, 1}, {1, 0, 1, 2}, {0, 1, 0, 1}, {1, 2, 1, 0}});
  check_distances_realized(t, expected, 0.0);
}

TEST_CASE("star metric realizes with all leaves at the root") {
  const WeightedTree t = tree_of(testsupport::star_rows(), 3);
  check_structure(t);
  REQUIRE(t.node_count() == 4);
  for (int leaf = 0; leaf < 3; ++leaf) {
    CHECK(t.nodes[t.leaf_map[leaf]].parent == t.root);
    CHECK(t.nodes[t.leaf_map[leaf]].length == 1.0);
  }
  check_distances_realized(t, matrix_from_rows(testsupport::star_rows()), 0.0);
}

TEST_CASE("two points and a single point") {
  const WeightedTree pair = tree_of({{0, 5}, {5, 0}}, 1);
  REQUIRE(pair.node_count() == 2);
  CHECK(pair.nodes[pair.leaf_map[0]].length == 5.0);
  check_distances_realized(pair, matrix_from_rows({{0, 5}, {5, 0}}), 0.0);

  const WeightedTree point = tree_of({{0}}, 0);
  CHECK(point.node_count() == 1);
  CHECK(point.leaf_map == std::vector<int>{0});
}

TEST_CASE("all points coincident collapse to the root") {
  const WeightedTree t = tree_of({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 2);
  CHECK(t.node_count() == 1);
  CHECK(t.nodes[t.root].points == std::vector<int>{0, 1, 2});
  CHECK(to_newick(t) == "x1_x2_x3;");
}

TEST_CASE("rejects inputs that are not 0-hyperbolic") {
  // The raw 4-cycle: its products fail max-min transitivity.
  const TreeApproximation fake{validate_distance_matrix(testsupport::c4_rows(), 3, false),
                               std::nullopt};
  try {
    realize_tree(fake);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NotZeroHyperbolic);
  }
}

TEST_CASE("newick worked examples") {
  CHECK(to_newick(tree_of(testsupport::p3_rows(), 2)) == "((x1:1)x2:1)x3;");
  CHECK(to_newick(tree_of(testsupport::c4_rows(), 3)) == "((x2:1)x1_x3:1)x4;");
  CHECK(to_newick(tree_of(testsupport::star_rows(), 3)) == "(x1:1,x2:1,x3:1)x4;");

  NewickOptions split;
  split.split_coincident = true;
  CHECK(to_newick(tree_of(testsupport::c4_rows(), 3), split) == "((x1:0,x2:1,x3:0):1)x4;");

  NewickOptions named;
  named.labels = {"a", "b", "c"};
  CHECK(to_newick(tree_of(testsupport::p3_rows(), 2), named) == "((a:1)b:1)c;");
}

TEST_CASE("newick prints fractional branch lengths plainly") {
  const std::vector<std::vector<double>> weighted = {
      {0, 0.5, 0.75}, {0.5, 0, 0.25}, {0.75, 0.25, 0}};
  CHECK(to_newick(tree_of(weighted, 2)) == "((x1:0.5)x2:0.25)x3;");

  NewickOptions coarse;
  coarse.precision = 2;
  const std::vector<std::vector<double>> thirds = {
      {0, 2.0 / 3.0, 1.0 / 3.0}, {2.0 / 3.0, 0, 1.0 / 3.0}, {1.0 / 3.0, 1.0 / 3.0, 0}};
  const std::string s = to_newick(tree_of(thirds, 2), coarse);
  CHECK(s == "(x1:0.33,x2:0.33)x3;");
}

TEST_CASE("newick rejects unusable labels") {
  const WeightedTree t = tree_of(testsupport::p3_rows(), 2);
  NewickOptions bad_count;
  bad_count.labels = {"a", "b"};
  CHECK_THROWS_AS(to_newick(t, bad_count), std::invalid_argument);

  for (const std::string label : {"has space", "pa(ren", "co:lon", "semi;colon", ""}) {
    NewickOptions bad;
    bad.labels = {"a", label, "c"};
    CHECK_THROWS_AS(to_newick(t, bad), std::invalid_argument);
  }
}

TEST_CASE("random tree approximations are realized exactly") {
  Rng rng(987654321);
  for (unsigned seed = 0; seed < 25; ++seed) {
    const EntryKind kind = testsupport::kind_for_seed(seed);
    const int n = 2 + static_cast<int>(seed % 11);
    const int base = static_cast<int>(seed) % n;
    const DistanceMatrix d = testsupport::random_graph_metric(n, rng, kind, base);
    const TreeApproximation approx = gtree(d);
    const WeightedTree t = realize_tree(approx);
    check_structure(t);
    CHECK(t.base_point == base);
    check_distances_realized(t, approx.distances.entries,
                             kind == EntryKind::Real ? 1e-9 : 0.0);
    // Serialization stays deterministic.
    CHECK(to_newick(t) == to_newick(t));
  }
}

}  // TEST_SUITE
