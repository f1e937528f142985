#pragma once

#include <array>
#include <vector>

#include "gromov/matrix.hpp"

namespace gromov {

/// Pairwise distances of a finite (pseudo-)metric space with a
/// distinguished basepoint. When `strict` is set, distinct points must be
/// at positive distance; otherwise zero off-diagonal entries are allowed
/// (points may coincide).
struct DistanceMatrix {
  SquareMatrix entries;
  int base = 0;
  bool strict = true;

  int size() const { return entries.size(); }
};

/// Gromov products at the basepoint. The basepoint row and column are
/// identically zero and every entry is bounded by both diagonal entries
/// it touches.
struct ProductMatrix {
  SquareMatrix entries;
  int base = 0;

  int size() const { return entries.size(); }
};

/// Symmetric non-negative edge capacities of a complete graph.
struct CapacityMatrix {
  SquareMatrix entries;

  int size() const { return entries.size(); }
};

/// Hyperbolicity constant together with one quadruple (x, y, z, w)
/// attaining it: delta = min((x|y)_w, (y|z)_w) - (x|z)_w.
struct Hyperbolicity {
  double delta = 0.0;
  std::array<int, 4> witness{0, 0, 0, 0};
};

DistanceMatrix validate_distance_matrix(const std::vector<std::vector<double>>& raw, int base,
                                        bool strict, double tol = kDefaultTol);
DistanceMatrix validate_distance_matrix(SquareMatrix entries, int base, bool strict,
                                        double tol = kDefaultTol);

ProductMatrix validate_product_matrix(const std::vector<std::vector<double>>& raw, int base,
                                      double tol = kDefaultTol);
ProductMatrix validate_product_matrix(SquareMatrix entries, int base, double tol = kDefaultTol);

CapacityMatrix validate_capacity_matrix(const std::vector<std::vector<double>>& raw,
                                        double tol = kDefaultTol);
CapacityMatrix validate_capacity_matrix(SquareMatrix entries, double tol = kDefaultTol);

/// Gromov products at d.base: result(i,j) = (d(i,base) + d(j,base) - d(i,j)) / 2.
ProductMatrix gprd(const DistanceMatrix& d);

/// Inverse transform: result(i,j) = l(i,i) + l(j,j) - 2 l(i,j), so that
/// igprd(gprd(d)) == d. With `validate_output` the result is checked to be a
/// pseudo-metric (throws TriangleViolation when l is not a product matrix of
/// one); unchecked mode is for pipeline-internal calls whose validity is
/// guaranteed.
DistanceMatrix igprd(const ProductMatrix& l, bool validate_output = true,
                     double tol = kDefaultTol);

/// Extends an n-by-n capacity matrix to an (n+1)-by-(n+1) Gromov product
/// matrix: off-diagonal entries kept, diagonal raised to 1 + max entry, a
/// zero row/column appended for the new basepoint. The recombined distance
/// matrix igprd(exte(c)) separates the original points by at least 2 but may
/// violate the triangle inequality until the bottleneck closure is applied.
ProductMatrix exte(const CapacityMatrix& c);

/// Exact hyperbolicity by brute force over all n^4 quadruples, products
/// recomputed at every basepoint. Witness ties resolve to the
/// lexicographically smallest (x, y, z, w).
Hyperbolicity delta_hyperbolicity(const DistanceMatrix& d);

}  // namespace gromov
