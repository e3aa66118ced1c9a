#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Dense linear-algebra and scalar kernels shared by the whole toolkit.
// Everything here is a pure function of its inputs; values are immutable
// after construction and safe to share across threads.

namespace dpcp {

using Vec = std::vector<double>;

// Centralized tolerances. Single audit point for the test suites.
inline constexpr double kNormTol = 1e-12;         // unit-norm slack
inline constexpr double kSymTol = 1e-9;           // symmetry slack, relative to matrix scale
inline constexpr double kSolveRelResidual = 1e-8; // linear-solve relative residual

/// Dense real matrix, column-major. Columns are the natural unit here:
/// data matrices are D x N with one point per column.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  Matrix(std::size_t rows, std::size_t cols, Vec entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  std::span<double> col(std::size_t j) { return {data_.data() + j * rows_, rows_}; }
  std::span<const double> col(std::size_t j) const { return {data_.data() + j * rows_, rows_}; }

  const Vec& data() const { return data_; }
  Vec& data() { return data_; }

  bool all_finite() const;

  /// A * A^T, (rows x rows) symmetric Gram accumulation over columns.
  Matrix gram() const;
  /// Sum of w_j * x_j x_j^T over columns x_j.
  Matrix weighted_gram(std::span<const double> weights) const;
  /// A^T b for a length-rows vector b.
  Vec mult_transpose(std::span<const double> b) const;
  /// A y for a length-cols vector y.
  Vec mult(std::span<const double> y) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

// ---- vector kernels ----

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double norm1(std::span<const double> v);

/// w / ||w||_2, with the convention that the zero vector maps to itself.
Vec normalize(std::span<const double> v);

/// Unit-norm vector. Admits the zero vector, matching the w-hat convention
/// used by normalize(); everything else must be unit to within kNormTol.
class UnitVector {
 public:
  UnitVector() = default;
  explicit UnitVector(Vec coords);
  static UnitVector normalized(std::span<const double> v);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const Vec& coords() const { return coords_; }
  std::span<const double> span() const { return coords_; }
  bool is_zero() const;

  /// Flips sign so the first entry larger than kNormTol in magnitude is
  /// positive. Makes solver outputs reproducible bit-for-bit.
  UnitVector canonical_sign() const;

 private:
  Vec coords_;
};

/// The unique angle in [0, pi/2] with cos(theta) = |u . v|.
double principal_angle(const UnitVector& u, const UnitVector& v);
double principal_angle(std::span<const double> u, std::span<const double> v);

/// Orthogonal projection of x onto the hyperplane with unit normal b:
/// x - (b.x) b.
Vec project_to_hyperplane(std::span<const double> x, std::span<const double> b);

/// Elementwise sign(v_j) * max(|v_j| - tau, 0). Requires tau > 0.
Vec soft_threshold(std::span<const double> v, double tau);

// ---- symmetric eigensolves ----
// Householder tridiagonalization followed by implicit-shift QL iteration.
// Dense; intended for the D <= few hundred sizes this toolkit sees.

struct SymEigen {
  Vec values;      // ascending
  Matrix vectors;  // column k pairs with values[k]
};

/// Full spectrum of a symmetric matrix. Throws if S is not symmetric to
/// within kSymTol * max|S| or not finite.
SymEigen sym_eigen(const Matrix& S);

/// Unit eigenvector of the smallest eigenvalue, sign-canonicalized.
std::pair<UnitVector, double> smallest_eigvec(const Matrix& S);

/// Largest eigenvalue of a symmetric matrix.
double max_eigval(const Matrix& S);

// ---- SPD solves ----

/// Cholesky factorization L L^T of a symmetric positive-definite matrix,
/// reusable across right-hand sides. Throws on a non-positive pivot.
class CholeskyFactor {
 public:
  explicit CholeskyFactor(const Matrix& A);
  Vec solve(std::span<const double> rhs) const;
  std::size_t dim() const { return L_.rows(); }

 private:
  Matrix L_;
};

/// One-shot SPD solve; residual meets kSolveRelResidual on well-posed input.
Vec solve_spd(const Matrix& A, std::span<const double> rhs);

}  // namespace dpcp
