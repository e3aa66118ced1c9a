#include "doctest.h"

#include <cmath>

#include "dpcp/numerics.hpp"
#include "dpcp/rng.hpp"

using namespace dpcp;

namespace {

Matrix random_symmetric(std::size_t n, Rng& rng, double scale = 1.0) {
  Matrix S(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) S(i, j) = S(j, i) = scale * (2.0 * rng.uniform() - 1.0);
  return S;
}

// Independent oracle: eigenvalue count below x through the inertia of the
// LDL^T factorization of S - xI, bisected for the extreme eigenvalues.
std::size_t eigs_below(const Matrix& S, double x) {
  const std::size_t n = S.rows();
  Matrix A = S;
  for (std::size_t i = 0; i < n; ++i) A(i, i) -= x;
  std::size_t negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double pivot = A(k, k);
    if (pivot == 0.0) pivot = 1e-300;
    if (pivot < 0.0) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = A(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) A(i, j) -= f * A(k, j);
    }
  }
  return negatives;
}

double bisect_extreme_eig(const Matrix& S, bool largest) {
  const std::size_t n = S.rows();
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(S(i, j));
    bound = std::max(bound, row);
  }
  double lo = -bound - 1.0, hi = bound + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const std::size_t below = eigs_below(S, mid);
    if (largest ? below < n : below < 1)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

TEST_CASE("normalize basics and idempotence") {
  CHECK(normalize(Vec{3, 0, 0}) == Vec{1, 0, 0});
  CHECK(normalize(Vec{0, 0, 0}) == Vec{0, 0, 0});  // zero maps to zero by convention
  const Vec v = normalize(Vec{1, 1});
  CHECK(v[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(v[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Vec x(5);
    for (double& e : x) e = rng.gaussian() * 10.0;
    const Vec once = normalize(x);
    CHECK(normalize(once) == once);  // exact idempotence
  }
}

TEST_CASE("principal angle endpoints and symmetry") {
  const UnitVector e1(Vec{1, 0, 0});
  const UnitVector e2(Vec{0, 1, 0});
  CHECK(principal_angle(e1, e1) == doctest::Approx(0.0));
  CHECK(principal_angle(e1, UnitVector(Vec{-1, 0, 0})) == doctest::Approx(0.0));
  CHECK(principal_angle(e1, e2) == doctest::Approx(M_PI / 2));

  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    Vec a(4), b(4);
    for (double& x : a) x = rng.gaussian();
    for (double& x : b) x = rng.gaussian();
    const UnitVector u = UnitVector::normalized(a);
    const UnitVector v = UnitVector::normalized(b);
    Vec neg(u.coords());
    for (double& x : neg) x = -x;
    const double theta = principal_angle(u, v);
    CHECK(theta == doctest::Approx(principal_angle(v, u)).epsilon(1e-15));
    CHECK(theta == doctest::Approx(principal_angle(UnitVector(neg), v)).epsilon(1e-15));
    CHECK(theta >= 0.0);
    CHECK(theta <= M_PI / 2);
  }
}

TEST_CASE("hyperplane projection: examples, orthogonality, Pythagoras") {
  const Vec b{1, 0};
  CHECK(project_to_hyperplane(Vec{1, 1}, b) == Vec{0, 1});
  CHECK(project_to_hyperplane(b, b) == Vec{0, 0});
  CHECK(project_to_hyperplane(Vec{0, 2}, b) == Vec{0, 2});

  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Vec x(6), g(6);
    for (double& e : x) e = rng.gaussian() * 3.0;
    for (double& e : g) e = rng.gaussian();
    const Vec bu = normalize(g);
    const Vec p = project_to_hyperplane(x, bu);
    CHECK(std::abs(dot(p, bu)) <= 1e-12 * std::max(1.0, norm2(x)));
    const double c = dot(x, bu);
    CHECK(dot(x, x) == doctest::Approx(dot(p, p) + c * c).epsilon(1e-10));
  }
}

TEST_CASE("smallest eigenvector: diagonal, degenerate, plane-normal oracle") {
  Matrix D3(3, 3);
  D3(0, 0) = 3;
  D3(1, 1) = 1;
  D3(2, 2) = 2;
  auto [v, lam] = smallest_eigvec(D3);
  CHECK(lam == doctest::Approx(1.0));
  CHECK(std::abs(v[1]) == doctest::Approx(1.0));
  CHECK(v[1] > 0.0);  // sign convention

  Matrix I3(3, 3);
  for (int i = 0; i < 3; ++i) I3(i, i) = 1.0;
  auto [vi, li] = smallest_eigvec(I3);
  CHECK(li == doctest::Approx(1.0));
  CHECK(norm2(vi.span()) == doctest::Approx(1.0));
  bool first_nonzero_positive = false;
  for (double x : vi.coords()) {
    if (std::abs(x) > 1e-12) {
      first_nonzero_positive = x > 0.0;
      break;
    }
  }
  CHECK(first_nonzero_positive);

  // plane in R^3: smallest eigenvector of X X^T is the cross-product normal
  Rng rng(23);
  for (int t = 0; t < 25; ++t) {
    Vec a(3), b(3);
    for (double& x : a) x = rng.gaussian();
    for (double& x : b) x = rng.gaussian();
    Matrix X(3, 20);
    for (std::size_t j = 0; j < 20; ++j) {
      const double ca = rng.gaussian(), cb = rng.gaussian();
      for (std::size_t i = 0; i < 3; ++i) X(i, j) = ca * a[i] + cb * b[i];
    }
    const Vec n_expect = normalize(cross3(a, b));
    auto [got, lam0] = smallest_eigvec(X.gram());
    CHECK(std::abs(lam0) <= 1e-8 * std::max(1.0, max_eigval(X.gram())));
    CHECK(std::abs(std::abs(dot(got.span(), n_expect)) - 1.0) <= 1e-8);
  }
}

TEST_CASE("symmetric eigensolver matches the bisection oracle") {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 7;
    const Matrix S = random_symmetric(n, rng, 4.0);
    const SymEigen eg = sym_eigen(S);
    double scale = 0.0;
    for (double x : S.data()) scale = std::max(scale, std::abs(x));
    CHECK(std::abs(eg.values.back() - bisect_extreme_eig(S, true)) <= 1e-9 * std::max(1.0, scale));
    CHECK(std::abs(eg.values.front() - bisect_extreme_eig(S, false)) <=
          1e-9 * std::max(1.0, scale));
    for (std::size_t k = 0; k < n; ++k) {
      Vec v(eg.vectors.col(k).begin(), eg.vectors.col(k).end());
      const Vec Sv = S.mult_transpose(v);  // symmetric, so transpose-multiply works
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(Sv[i] - eg.values[k] * v[i]) <= 1e-8 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("max eigenvalue: diagonal and rank-one examples") {
  Matrix D3(3, 3);
  D3(0, 0) = 3;
  D3(1, 1) = 1;
  D3(2, 2) = 2;
  CHECK(max_eigval(D3) == doctest::Approx(3.0));

  const Vec u{0.0, 2.0, 0.0};  // ||u|| = 2, so u u^T has top eigenvalue 4
  Matrix R(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) R(i, j) = u[i] * u[j];
  CHECK(max_eigval(R) == doctest::Approx(4.0));
}

TEST_CASE("eigensolver rejects asymmetric input") {
  Matrix A(3, 3);
  A(0, 1) = 1.0;
  A(1, 0) = 1.0 + 1e-6;
  CHECK_THROWS(sym_eigen(A));
}

TEST_CASE("soft threshold examples, error, contraction") {
  CHECK(soft_threshold(Vec{3, -0.5}, 1.0) == Vec{2, 0});
  CHECK(soft_threshold(Vec{0, 0, 0}, 0.5) == Vec{0, 0, 0});
  const Vec v{1.5, -2.0, 0.3};
  const Vec tiny = soft_threshold(v, 1e-12);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(tiny[i] == doctest::Approx(v[i]).epsilon(1e-9));
  CHECK_THROWS(soft_threshold(v, 0.0));
  CHECK_THROWS(soft_threshold(v, -1.0));

  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    Vec a(8), b(8);
    for (double& x : a) x = rng.gaussian() * 2.0;
    for (double& x : b) x = rng.gaussian() * 2.0;
    const double tau = 0.1 + rng.uniform();
    const Vec sa = soft_threshold(a, tau);
    const Vec sb = soft_threshold(b, tau);
    Vec d1(8), d2(8);
    for (std::size_t i = 0; i < 8; ++i) {
      d1[i] = sa[i] - sb[i];
      d2[i] = a[i] - b[i];
    }
    CHECK(norm2(d1) <= norm2(d2) + 1e-14);
  }
}

TEST_CASE("SPD solves: identity, diagonal, residual oracle, reuse, failure") {
  Matrix I2(2, 2);
  I2(0, 0) = I2(1, 1) = 1.0;
  CHECK(solve_spd(I2, Vec{3.0, -4.0}) == Vec{3.0, -4.0});

  Matrix D2(2, 2);
  D2(0, 0) = 2.0;
  D2(1, 1) = 4.0;
  const Vec x = solve_spd(D2, Vec{2.0, 4.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.0));

  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    Matrix B(5, 8);
    for (double& e : B.data()) e = rng.gaussian();
    Matrix A = B.gram();
    for (int i = 0; i < 5; ++i) A(i, i) += 0.5;
    const CholeskyFactor chol(A);
    for (int reps = 0; reps < 3; ++reps) {  // factorization reused across solves
      Vec rhs(5);
      for (double& e : rhs) e = rng.gaussian();
      const Vec sol = chol.solve(rhs);
      const Vec back = A.mult_transpose(sol);
      Vec res(5);
      for (int i = 0; i < 5; ++i) res[i] = back[i] - rhs[i];
      CHECK(norm2(res) <= 1e-8 * std::max(1e-30, norm2(rhs)));
    }
  }

  Matrix neg(2, 2);
  neg(0, 0) = 1.0;
  neg(1, 1) = -1.0;
  CHECK_THROWS(solve_spd(neg, Vec{1.0, 1.0}));
}
