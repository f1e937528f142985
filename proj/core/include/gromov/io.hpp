#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gromov/matrix.hpp"

namespace gromov {

/// Raised for malformed input files; `line` is 1-based, 0 when the failure
/// is not tied to a line (e.g. the file cannot be opened).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Matrix file: a header line holding n, then n rows of n decimal fields.
/// Blank lines and lines starting with '#' are ignored.
struct ParsedMatrix {
  int n = 0;
  std::vector<std::vector<double>> rows;
};

/// Graph file: a header line "n m", then m edge lines "u v" with 0-based
/// endpoints. Same comment/blank-line rules as matrix files.
struct ParsedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

ParsedMatrix parse_matrix_text(std::string_view text);
ParsedMatrix read_matrix_file(const std::string& path);

ParsedGraph parse_graph_text(std::string_view text);
ParsedGraph read_graph_file(const std::string& path);

/// One label per significant line.
std::vector<std::string> parse_labels_text(std::string_view text);
std::vector<std::string> read_labels_file(const std::string& path);

/// Fixed-notation decimal with 9 significant digits; half-integers print
/// exactly ("2", "1.5"). No scientific notation.
std::string format_number(double x);

/// Matrix output format: header line n, then space-separated rows.
std::string format_matrix(const SquareMatrix& m);

/// Branch length for Newick output: fixed decimal with `precision` digits
/// after the point, trailing zeros trimmed.
std::string format_branch_length(double x, int precision = 9);

}  // namespace gromov
