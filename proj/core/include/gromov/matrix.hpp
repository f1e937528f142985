#pragma once

#include <vector>

namespace gromov {

/// Absolute tolerance used for comparisons on real-valued inputs.
/// Half-integer inputs are compared exactly (tolerance 0): all matrix
/// transforms here stay within small dyadic rationals, which doubles
/// represent without rounding.
inline constexpr double kDefaultTol = 1e-9;

/// Dense row-major n-by-n matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, double fill = 0.0)
      : n_(n), values_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  int size() const { return n_; }

  double operator()(int i, int j) const {
    return values_[static_cast<std::size_t>(i) * n_ + j];
  }
  double& operator()(int i, int j) {
    return values_[static_cast<std::size_t>(i) * n_ + j];
  }

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

/// Builds a SquareMatrix from raw rows; rejects empty and ragged input.
SquareMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows);

bool is_half_integer(double x);
bool all_half_integers(const SquareMatrix& m);

/// 0 when every entry is a half-integer (exact comparisons apply),
/// kDefaultTol otherwise.
double default_tolerance(const SquareMatrix& m);

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace gromov
