#include "cli_app.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "gromov/errors.hpp"
#include "gromov/io.hpp"
#include "gromov/metric.hpp"
#include "gromov/pipeline.hpp"
#include "gromov/treeize.hpp"

namespace gromov::cli {

namespace {

constexpr int kBaseUnset = -1;

int resolve_base(int base_flag, int n) { return base_flag == kBaseUnset ? n - 1 : base_flag; }

DistanceMatrix load_distances(const std::string& path, int base_flag, bool strict) {
  ParsedMatrix parsed = read_matrix_file(path);
  return validate_distance_matrix(parsed.rows, resolve_base(base_flag, parsed.n), strict);
}

CapacityMatrix load_capacities(const std::string& path) {
  ParsedMatrix parsed = read_matrix_file(path);
  return validate_capacity_matrix(parsed.rows);
}

ProductMatrix load_products(const std::string& path, int base_flag) {
  ParsedMatrix parsed = read_matrix_file(path);
  return validate_product_matrix(parsed.rows, resolve_base(base_flag, parsed.n));
}

AdjacencyGraph load_graph(const std::string& path, int base_flag) {
  ParsedGraph parsed = read_graph_file(path);
  return make_adjacency_graph(parsed.n, parsed.edges, resolve_base(base_flag, parsed.n));
}

/// Smallest slack in the lower bound D - 2*delta*log2(n) <= A, over all
/// entries; non-negative (up to rounding) whenever the bound holds.
double lower_bound_margin(const TreeApproximation& t, double delta) {
  const SquareMatrix& a = t.distances.entries;
  const SquareMatrix& d = t.source->entries;
  const int n = a.size();
  const double slack_term = 2.0 * delta * std::log2(static_cast<double>(n));
  double margin = slack_term;  // the diagonal's value; also covers n = 1
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      margin = std::min(margin, a(i, j) - (d(i, j) - slack_term));
  return margin;
}

struct Options {
  std::string input;
  std::string labels_file;
  int base = kBaseUnset;
  bool show_delta = false;
  bool oracle = false;
  bool split_coincident = false;
  bool pseudo = false;
};

void add_input(CLI::App* sub, Options& opt) {
  sub->add_option("--input", opt.input, "Input file")->required();
}

void add_base(CLI::App* sub, Options& opt) {
  sub->add_option("--base", opt.base, "Basepoint index, 0-based (default: last point)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gromov tree approximation and bottleneck paths toolkit"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* gtree_cmd = app.add_subcommand(
      "gtree", "Approximating tree pseudo-metric of a distance matrix");
  add_input(gtree_cmd, opt);
  add_base(gtree_cmd, opt);
  gtree_cmd->add_flag("--show-delta", opt.show_delta,
                      "Also print the hyperbolicity delta* and the lower-bound margin");
  gtree_cmd->callback([&] {
    TreeApproximation t = gtree(load_distances(opt.input, opt.base, false));
    out << format_matrix(t.distances.entries);
    if (opt.show_delta) {
      const Hyperbolicity h = t.source_delta();
      out << "delta = " << format_number(h.delta) << '\n'
          << "margin = " << format_number(lower_bound_margin(t, h.delta)) << '\n';
    }
  });

  CLI::App* gtree_graph_cmd = app.add_subcommand(
      "gtree-graph", "Approximating tree of a connected graph, via adjacent-pair products");
  add_input(gtree_graph_cmd, opt);
  add_base(gtree_graph_cmd, opt);
  gtree_graph_cmd->callback([&] {
    TreeApproximation t = gtree_from_graph(load_graph(opt.input, opt.base));
    out << format_matrix(t.distances.entries);
  });

  CLI::App* apbp_cmd = app.add_subcommand(
      "apbp", "All-pairs bottleneck capacities of a capacity matrix");
  add_input(apbp_cmd, opt);
  apbp_cmd->add_flag("--oracle", opt.oracle, "Use the cubic max-min closure instead");
  apbp_cmd->callback([&] {
    const CapacityMatrix c = load_capacities(opt.input);
    const BottleneckResult r = opt.oracle ? maxmin_closure_naive(c) : apbp(c);
    out << format_matrix(r.entries);
  });

  CLI::App* via_tree_cmd = app.add_subcommand(
      "apbp-via-tree", "Bottleneck capacities computed through the tree approximation");
  add_input(via_tree_cmd, opt);
  via_tree_cmd->callback(
      [&] { out << format_matrix(apbp_via_gtree(load_capacities(opt.input)).entries); });

  CLI::App* gprd_cmd = app.add_subcommand("gprd", "Gromov products of a distance matrix");
  add_input(gprd_cmd, opt);
  add_base(gprd_cmd, opt);
  gprd_cmd->callback(
      [&] { out << format_matrix(gprd(load_distances(opt.input, opt.base, false)).entries); });

  CLI::App* igprd_cmd = app.add_subcommand(
      "igprd", "Distance matrix recovered from a Gromov product matrix");
  add_input(igprd_cmd, opt);
  add_base(igprd_cmd, opt);
  igprd_cmd->callback(
      [&] { out << format_matrix(igprd(load_products(opt.input, opt.base)).entries); });

  CLI::App* exte_cmd = app.add_subcommand(
      "exte", "Extend a capacity matrix to a Gromov product matrix with an appended basepoint");
  add_input(exte_cmd, opt);
  exte_cmd->callback(
      [&] { out << format_matrix(exte(load_capacities(opt.input)).entries); });

  CLI::App* delta_cmd = app.add_subcommand(
      "delta", "Hyperbolicity delta* and a witness quadruple");
  add_input(delta_cmd, opt);
  delta_cmd->callback([&] {
    const Hyperbolicity h =
        delta_hyperbolicity(load_distances(opt.input, kBaseUnset, false));
    out << "delta = " << format_number(h.delta) << '\n'
        << "witness = " << h.witness[0] << ' ' << h.witness[1] << ' ' << h.witness[2] << ' '
        << h.witness[3] << '\n';
  });

  CLI::App* newick_cmd = app.add_subcommand(
      "newick", "Approximating tree of a distance matrix in Newick form");
  add_input(newick_cmd, opt);
  add_base(newick_cmd, opt);
  newick_cmd->add_option("--labels", opt.labels_file, "File with one point label per line");
  newick_cmd->add_flag("--split-coincident", opt.split_coincident,
                       "Emit coincident points as separate zero-length leaves");
  newick_cmd->callback([&] {
    TreeApproximation t = gtree(load_distances(opt.input, opt.base, false));
    NewickOptions options;
    if (!opt.labels_file.empty()) options.labels = read_labels_file(opt.labels_file);
    options.split_coincident = opt.split_coincident;
    out << to_newick(realize_tree(t), options) << '\n';
  });

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Check that a file holds a valid (pseudo-)metric");
  add_input(validate_cmd, opt);
  validate_cmd->add_flag("--pseudo", opt.pseudo, "Allow zero off-diagonal distances");
  validate_cmd->callback([&] {
    load_distances(opt.input, kBaseUnset, !opt.pseudo);
    out << "ok\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const gromov::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gromov::cli
