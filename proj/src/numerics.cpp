#include "dpcp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dpcp {

Matrix::Matrix(std::size_t rows, std::size_t cols, Vec entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("Matrix: entry count does not match rows*cols");
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Matrix Matrix::gram() const {
  Matrix S(rows_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    const double* x = data_.data() + j * rows_;
    for (std::size_t c = 0; c < rows_; ++c)
      for (std::size_t r = c; r < rows_; ++r) S(r, c) += x[r] * x[c];
  }
  for (std::size_t c = 0; c < rows_; ++c)
    for (std::size_t r = 0; r < c; ++r) S(r, c) = S(c, r);
  return S;
}

Matrix Matrix::weighted_gram(std::span<const double> weights) const {
  if (weights.size() != cols_)
    throw std::invalid_argument("weighted_gram: weight count mismatch");
  Matrix S(rows_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    const double* x = data_.data() + j * rows_;
    const double w = weights[j];
    if (w == 0.0) continue;
    for (std::size_t c = 0; c < rows_; ++c)
      for (std::size_t r = c; r < rows_; ++r) S(r, c) += w * x[r] * x[c];
  }
  for (std::size_t c = 0; c < rows_; ++c)
    for (std::size_t r = 0; r < c; ++r) S(r, c) = S(c, r);
  return S;
}

Vec Matrix::mult_transpose(std::span<const double> b) const {
  if (b.size() != rows_) throw std::invalid_argument("mult_transpose: dimension mismatch");
  Vec out(cols_, 0.0);
  for (std::size_t j = 0; j < cols_; ++j) {
    const double* x = data_.data() + j * rows_;
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += x[i] * b[i];
    out[j] = s;
  }
  return out;
}

Vec Matrix::mult(std::span<const double> y) const {
  if (y.size() != cols_) throw std::invalid_argument("mult: dimension mismatch");
  Vec out(rows_, 0.0);
  for (std::size_t j = 0; j < cols_; ++j) {
    const double* x = data_.data() + j * rows_;
    const double w = y[j];
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < rows_; ++i) out[i] += w * x[i];
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double norm1(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

Vec normalize(std::span<const double> v) {
  const double n = norm2(v);
  Vec out(v.begin(), v.end());
  // a norm within a few ulps of 1 leaves the input untouched, which makes
  // normalization exactly idempotent
  if (n == 0.0 || std::abs(n - 1.0) < 4e-16) return out;
  for (double& x : out) x /= n;
  return out;
}

UnitVector::UnitVector(Vec coords) : coords_(std::move(coords)) {
  const double n = norm2(coords_);
  if (n != 0.0 && std::abs(n - 1.0) > kNormTol)
    throw std::invalid_argument("UnitVector: norm " + std::to_string(n) + " is not 1");
}

UnitVector UnitVector::normalized(std::span<const double> v) {
  return UnitVector(normalize(v));
}

bool UnitVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double x) { return x == 0.0; });
}

UnitVector UnitVector::canonical_sign() const {
  for (double x : coords_) {
    if (std::abs(x) > kNormTol) {
      if (x < 0.0) {
        Vec flipped(coords_);
        for (double& e : flipped) e = -e;
        return UnitVector(std::move(flipped));
      }
      return *this;
    }
  }
  return *this;
}

double principal_angle(std::span<const double> u, std::span<const double> v) {
  const double c = std::clamp(std::abs(dot(u, v)), 0.0, 1.0);
  return std::acos(c);
}

double principal_angle(const UnitVector& u, const UnitVector& v) {
  return principal_angle(u.span(), v.span());
}

Vec project_to_hyperplane(std::span<const double> x, std::span<const double> b) {
  const double s = dot(x, b);
  Vec out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= s * b[i];
  return out;
}

Vec soft_threshold(std::span<const double> v, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("soft_threshold: tau must be positive");
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]) - tau;
    out[i] = a > 0.0 ? (v[i] > 0.0 ? a : -a) : 0.0;
  }
  return out;
}

namespace {

double pythag(double a, double b) {
  const double absa = std::abs(a), absb = std::abs(b);
  if (absa > absb) {
    const double r = absb / absa;
    return absa * std::sqrt(1.0 + r * r);
  }
  if (absb == 0.0) return 0.0;
  const double r = absa / absb;
  return absb * std::sqrt(1.0 + r * r);
}

// Householder reduction of a symmetric matrix to tridiagonal form.
// On exit `z` holds the accumulated orthogonal transform, `d` the diagonal
// and `e` the subdiagonal (e[0] unused).
void tred2(Matrix& z, Vec& d, Vec& e) {
  const std::size_t n = z.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (std::size_t i = n; i-- > 1;) {
    const std::size_t l = i;  // columns 0..l-1 participate
    double h = 0.0, scale = 0.0;
    if (l > 1) {
      for (std::size_t k = 0; k < l; ++k) scale += std::abs(z(i, k));
      if (scale == 0.0) {
        e[i] = z(i, l - 1);
      } else {
        for (std::size_t k = 0; k < l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        double f = z(i, l - 1);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        z(i, l - 1) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j < l; ++j) {
          z(j, i) = z(i, j) / h;
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
          for (std::size_t k = j + 1; k < l; ++k) g += z(k, j) * z(i, k);
          e[j] = g / h;
          f += e[j] * z(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j < l; ++j) {
          f = z(i, j);
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k) z(j, k) -= f * e[k] + g * z(i, k);
        }
      }
    } else {
      e[i] = z(i, l - 1);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (std::size_t j = 0; j < i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k < i; ++k) g += z(i, k) * z(k, j);
        for (std::size_t k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
      }
    }
    d[i] = z(i, i);
    z(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
  }
}

// Implicit-shift QL iteration on the tridiagonal (d, e), rotations
// accumulated into z.
void tqli(Vec& d, Vec& e, Matrix& z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) + dd == dd) break;
      }
      if (m != l) {
        if (iter++ == 50) throw std::runtime_error("sym_eigen: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = pythag(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          e[i + 1] = r = pythag(f, g);
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
          for (std::size_t k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

SymEigen sym_eigen(const Matrix& S) {
  const std::size_t n = S.rows();
  if (n == 0 || S.cols() != n) throw std::invalid_argument("sym_eigen: matrix must be square");
  if (!S.all_finite()) throw std::invalid_argument("sym_eigen: non-finite entries");
  double scale = 0.0;
  for (double x : S.data()) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(S(i, j) - S(j, i)) > kSymTol * std::max(1.0, scale))
        throw std::invalid_argument("sym_eigen: matrix is not symmetric");

  Matrix z = S;
  // symmetrize exactly so roundoff asymmetry cannot leak into the iteration
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) z(i, j) = z(j, i) = 0.5 * (S(i, j) + S(j, i));

  Vec d, e;
  tred2(z, d, e);
  tqli(d, e, z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  SymEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = z(i, order[k]);
  }
  return out;
}

std::pair<UnitVector, double> smallest_eigvec(const Matrix& S) {
  const SymEigen eg = sym_eigen(S);
  Vec v(eg.vectors.col(0).begin(), eg.vectors.col(0).end());
  UnitVector u = UnitVector::normalized(v).canonical_sign();
  return {std::move(u), eg.values.front()};
}

double max_eigval(const Matrix& S) { return sym_eigen(S).values.back(); }

CholeskyFactor::CholeskyFactor(const Matrix& A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("CholeskyFactor: matrix must be square");
  L_ = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = A(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= L_(j, k) * L_(j, k);
    if (!(diag > 0.0))
      throw std::runtime_error("CholeskyFactor: non-positive pivot, matrix is not positive-definite");
    L_(j, j) = std::sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = A(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L_(i, k) * L_(j, k);
      L_(i, j) = s / L_(j, j);
    }
  }
}

Vec CholeskyFactor::solve(std::span<const double> rhs) const {
  const std::size_t n = L_.rows();
  if (rhs.size() != n) throw std::invalid_argument("CholeskyFactor::solve: dimension mismatch");
  Vec y(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {  // forward: L y = rhs
    for (std::size_t k = 0; k < i; ++k) y[i] -= L_(i, k) * y[k];
    y[i] /= L_(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {  // backward: L^T x = y
    for (std::size_t k = i + 1; k < n; ++k) y[i] -= L_(k, i) * y[k];
    y[i] /= L_(i, i);
  }
  return y;
}

Vec solve_spd(const Matrix& A, std::span<const double> rhs) {
  return CholeskyFactor(A).solve(rhs);
}

}  // namespace dpcp
