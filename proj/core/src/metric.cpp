#include "gromov/metric.hpp"

#include <algorithm>
#include <cmath>

#include "gromov/errors.hpp"

namespace gromov {

namespace {

void check_base_index(int n, int base) {
  if (base < 0 || base >= n)
    throw_validation_error(ErrorKind::IndexOutOfRange, base, -1, -1,
                           "basepoint index for a matrix of size " + std::to_string(n));
}

void check_finite(const SquareMatrix& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!std::isfinite(m(i, j))) throw_validation_error(ErrorKind::NonFiniteEntry, i, j);
}

void check_symmetric_nonnegative(const SquareMatrix& m, double tol) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) < -tol) throw_validation_error(ErrorKind::NegativeEntry, i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(m(i, j) - m(j, i)) > tol)
        throw_validation_error(ErrorKind::AsymmetricEntry, i, j);
}

}  // namespace

DistanceMatrix validate_distance_matrix(const std::vector<std::vector<double>>& raw, int base,
                                        bool strict, double tol) {
  return validate_distance_matrix(matrix_from_rows(raw), base, strict, tol);
}

DistanceMatrix validate_distance_matrix(SquareMatrix entries, int base, bool strict, double tol) {
  const int n = entries.size();
  check_base_index(n, base);
  check_finite(entries);
  for (int i = 0; i < n; ++i)
    if (std::fabs(entries(i, i)) > tol) throw_validation_error(ErrorKind::NonzeroDiagonal, i);
  check_symmetric_nonnegative(entries, tol);
  if (strict) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (entries(i, j) <= tol) throw_validation_error(ErrorKind::ZeroOffDiagonal, i, j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (entries(i, j) > entries(i, k) + entries(k, j) + tol)
          throw_validation_error(ErrorKind::TriangleViolation, i, j, k);
  return DistanceMatrix{std::move(entries), base, strict};
}

ProductMatrix validate_product_matrix(const std::vector<std::vector<double>>& raw, int base,
                                      double tol) {
  return validate_product_matrix(matrix_from_rows(raw), base, tol);
}

ProductMatrix validate_product_matrix(SquareMatrix entries, int base, double tol) {
  const int n = entries.size();
  check_base_index(n, base);
  check_finite(entries);
  check_symmetric_nonnegative(entries, tol);
  for (int i = 0; i < n; ++i)
    if (std::fabs(entries(base, i)) > tol || std::fabs(entries(i, base)) > tol)
      throw_validation_error(ErrorKind::NonzeroBaseEntry, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && entries(i, j) > std::min(entries(i, i), entries(j, j)) + tol)
        throw_validation_error(ErrorKind::ProductBoundViolation, i, j);
  return ProductMatrix{std::move(entries), base};
}

CapacityMatrix validate_capacity_matrix(const std::vector<std::vector<double>>& raw, double tol) {
  return validate_capacity_matrix(matrix_from_rows(raw), tol);
}

CapacityMatrix validate_capacity_matrix(SquareMatrix entries, double tol) {
  check_finite(entries);
  check_symmetric_nonnegative(entries, tol);
  return CapacityMatrix{std::move(entries)};
}

ProductMatrix gprd(const DistanceMatrix& d) {
  const int n = d.size();
  const int w = d.base;
  SquareMatrix l(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double p = 0.5 * (d.entries(i, w) + d.entries(j, w) - d.entries(i, j));
      l(i, j) = p;
      l(j, i) = p;
    }
  return ProductMatrix{std::move(l), w};
}

DistanceMatrix igprd(const ProductMatrix& l, bool validate_output, double tol) {
  const int n = l.size();
  SquareMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = l.entries(i, i) + l.entries(j, j) - 2.0 * l.entries(i, j);
      d(i, j) = v;
      d(j, i) = v;
    }
  if (validate_output) return validate_distance_matrix(std::move(d), l.base, /*strict=*/false, tol);
  return DistanceMatrix{std::move(d), l.base, /*strict=*/false};
}

ProductMatrix exte(const CapacityMatrix& c) {
  const int n = c.size();
  double top = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) top = std::max(top, c.entries(i, j));
  const double mu = 1.0 + top;

  SquareMatrix e(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e(i, j) = (i == j) ? mu : c.entries(i, j);
  }
  return ProductMatrix{std::move(e), n};
}

Hyperbolicity delta_hyperbolicity(const DistanceMatrix& d) {
  const int n = d.size();
  Hyperbolicity best;  // delta 0 is attained by (0,0,0,0)
  SquareMatrix p(n);
  for (int w = 0; w < n; ++w) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double v = 0.5 * (d.entries(i, w) + d.entries(j, w) - d.entries(i, j));
        p(i, j) = v;
        p(j, i) = v;
      }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const double v = std::min(p(x, y), p(y, z)) - p(x, z);
          if (v < best.delta) continue;
          const std::array<int, 4> quad{x, y, z, w};
          if (v > best.delta || quad < best.witness) {
            best.delta = v;
            best.witness = quad;
          }
        }
  }
  return best;
}

}  // namespace gromov
