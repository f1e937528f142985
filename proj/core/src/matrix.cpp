#include "gromov/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "gromov/errors.hpp"

namespace gromov {

std::vector<std::vector<double>> SquareMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_);
  for (int i = 0; i < n_; ++i) {
    rows[i].assign(values_.begin() + static_cast<std::size_t>(i) * n_,
                   values_.begin() + static_cast<std::size_t>(i + 1) * n_);
  }
  return rows;
}

SquareMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw_validation_error(ErrorKind::EmptyMatrix);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw_validation_error(ErrorKind::NotSquare, i, -1, -1,
                             "row has " + std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(n));
    }
  }
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

bool is_half_integer(double x) {
  if (!std::isfinite(x)) return false;
  const double twice = 2.0 * x;
  return twice == std::floor(twice);
}

bool all_half_integers(const SquareMatrix& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_half_integer(m(i, j))) return false;
  return true;
}

double default_tolerance(const SquareMatrix& m) {
  return all_half_integers(m) ? 0.0 : kDefaultTol;
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  const int n = a.size();
  if (n != b.size()) return HUGE_VAL;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) worst = std::max(worst, std::fabs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace gromov
