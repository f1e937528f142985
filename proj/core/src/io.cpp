#include "gromov/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gromov {

namespace {

// Significant lines with their 1-based numbers; comments and blanks dropped.
std::vector<std::pair<int, std::string>> significant_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    if (line[start] == '#') continue;
    const std::size_t stop = line.find_last_not_of(" \t\r");
    lines.emplace_back(number, std::string(line.substr(start, stop - start + 1)));
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

double parse_double(const std::string& token, int line) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size())
    throw ParseError(line, "cannot parse number '" + token + "'");
  if (!std::isfinite(value)) throw ParseError(line, "non-finite number '" + token + "'");
  return value;
}

int parse_int(const std::string& token, int line) {
  char* end = nullptr;
  const long value = std::strtol(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size() || value < 0 || value > 1'000'000'000)
    throw ParseError(line, "cannot parse non-negative integer '" + token + "'");
  return static_cast<int>(value);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

ParsedMatrix parse_matrix_text(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(0, "empty matrix file");

  const auto header = split_fields(lines[0].second);
  if (header.size() != 1)
    throw ParseError(lines[0].first, "matrix header must be a single integer");
  const int n = parse_int(header[0], lines[0].first);
  if (n < 1) throw ParseError(lines[0].first, "matrix size must be positive");
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError(lines.empty() ? 0 : lines.back().first,
                     "expected " + std::to_string(n) + " data rows, got " +
                         std::to_string(lines.size() - 1));

  ParsedMatrix result;
  result.n = n;
  result.rows.reserve(n);
  for (int r = 0; r < n; ++r) {
    const auto& [line_no, line] = lines[r + 1];
    const auto fields = split_fields(line);
    if (static_cast<int>(fields.size()) != n)
      throw ParseError(line_no, "expected " + std::to_string(n) + " fields, got " +
                                    std::to_string(fields.size()));
    std::vector<double> row;
    row.reserve(n);
    for (const std::string& field : fields) row.push_back(parse_double(field, line_no));
    result.rows.push_back(std::move(row));
  }
  return result;
}

ParsedMatrix read_matrix_file(const std::string& path) {
  return parse_matrix_text(read_file(path));
}

ParsedGraph parse_graph_text(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(0, "empty graph file");

  const auto header = split_fields(lines[0].second);
  if (header.size() != 2) throw ParseError(lines[0].first, "graph header must be 'n m'");
  const int n = parse_int(header[0], lines[0].first);
  const int m = parse_int(header[1], lines[0].first);
  if (n < 1) throw ParseError(lines[0].first, "vertex count must be positive");
  if (static_cast<int>(lines.size()) != m + 1)
    throw ParseError(lines.back().first, "expected " + std::to_string(m) + " edge lines, got " +
                                             std::to_string(lines.size() - 1));

  ParsedGraph result;
  result.n = n;
  result.edges.reserve(m);
  for (int e = 0; e < m; ++e) {
    const auto& [line_no, line] = lines[e + 1];
    const auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    const int u = parse_int(fields[0], line_no);
    const int v = parse_int(fields[1], line_no);
    if (u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
    result.edges.emplace_back(u, v);
  }
  return result;
}

ParsedGraph read_graph_file(const std::string& path) {
  return parse_graph_text(read_file(path));
}

std::vector<std::string> parse_labels_text(std::string_view text) {
  std::vector<std::string> labels;
  for (auto& entry : significant_lines(text)) labels.push_back(std::move(entry.second));
  return labels;
}

std::vector<std::string> read_labels_file(const std::string& path) {
  return parse_labels_text(read_file(path));
}

namespace {

void trim_trailing_zeros(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  std::size_t last = s.find_last_not_of('0');
  if (s[last] == '.') --last;
  s.erase(last + 1);
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0 || std::fabs(x) < 1e-12) return "0";
  if (is_half_integer(x)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), (x == std::floor(x)) ? "%.0f" : "%.1f", x);
    return buf;
  }
  const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  int decimals = 8 - exponent;
  if (decimals < 0) decimals = 0;
  if (decimals > 24) decimals = 24;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  std::string out(buf);
  trim_trailing_zeros(out);
  return out;
}

std::string format_matrix(const SquareMatrix& m) {
  const int n = m.size();
  std::string out = std::to_string(n);
  out += '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out += ' ';
      out += format_number(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_branch_length(double x, int precision) {
  if (x == 0.0 || std::fabs(x) < 1e-12) return "0";
  if (precision < 0) precision = 0;
  if (precision > 30) precision = 30;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, x);
  std::string out(buf);
  trim_trailing_zeros(out);
  return out;
}

}  // namespace gromov
