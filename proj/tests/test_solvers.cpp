#include "doctest.h"

#include <cmath>

#include "dpcp/arrangement.hpp"
#include "dpcp/solvers.hpp"

using namespace dpcp;

namespace {

// noiseless points on the hyperplane orthogonal to a random unit normal
struct PlaneInstance {
  Matrix points;
  UnitVector normal;
};

PlaneInstance plane_instance(std::size_t D, std::size_t N, Rng& rng) {
  Vec g(D);
  for (double& x : g) x = rng.gaussian();
  const UnitVector normal = UnitVector::normalized(g);
  Matrix X(D, N);
  for (std::size_t j = 0; j < N; ++j) {
    Vec p(D);
    for (double& x : p) x = rng.gaussian();
    const Vec u = normalize(project_to_hyperplane(p, normal.span()));
    std::copy(u.begin(), u.end(), X.col(j).begin());
  }
  return {std::move(X), normal};
}

Matrix two_plane_instance(const UnitVector& b1, const UnitVector& b2, std::size_t n1,
                          std::size_t n2, Rng& rng) {
  const std::size_t D = b1.dim();
  Matrix X(D, n1 + n2);
  for (std::size_t j = 0; j < n1 + n2; ++j) {
    const UnitVector& b = j < n1 ? b1 : b2;
    Vec p(D);
    for (double& x : p) x = rng.gaussian();
    const Vec u = normalize(project_to_hyperplane(p, b.span()));
    std::copy(u.begin(), u.end(), X.col(j).begin());
  }
  return X;
}

Matrix random_unit_columns(std::size_t D, std::size_t N, Rng& rng) {
  Matrix X(D, N);
  for (std::size_t j = 0; j < N; ++j) {
    Vec g(D);
    for (double& x : g) x = rng.gaussian();
    const Vec u = normalize(g);
    std::copy(u.begin(), u.end(), X.col(j).begin());
  }
  return X;
}

bool trace_non_increasing(const Vec& trace, double rel_tol) {
  for (std::size_t k = 1; k < trace.size(); ++k)
    if (trace[k] > trace[k - 1] * (1.0 + rel_tol) + 1e-15) return false;
  return true;
}

bool first_nonzero_positive(const UnitVector& v) {
  for (double x : v.coords())
    if (std::abs(x) > 1e-12) return x > 0.0;
  return true;
}

}  // namespace

TEST_CASE("init_normal: plane normal and degenerate spectra") {
  Rng rng(1);
  const PlaneInstance inst = plane_instance(3, 40, rng);
  const UnitVector got = init_normal(inst.points);
  // the acos in the angle itself floors out near sqrt(ulp)
  CHECK(principal_angle(got, inst.normal) <= 1e-7);

  Matrix I4(4, 4);
  for (int i = 0; i < 4; ++i) I4(i, i) = 1.0;
  const UnitVector e = init_normal(I4);
  CHECK(norm2(e.span()) == doctest::Approx(1.0));
  CHECK(first_nonzero_positive(e));
}

TEST_CASE("dpcp_r: exact recovery on a noiseless hyperplane") {
  Rng rng(2);
  const PlaneInstance inst = plane_instance(3, 50, rng);
  const SolverReport rep = dpcp_r(inst.points, SolverConfig::defaults_for(SolverMethod::kRelaxed));
  CHECK(principal_angle(rep.normal, inst.normal) <= 1e-10);
  CHECK(rep.objective_trace.back() <= 1e-10);
  CHECK(rep.converged);
  CHECK(rep.iterations == rep.objective_trace.size() - 1);
  for (const auto& cert : rep.certificates) CHECK(cert.independence_ok);
}

TEST_CASE("dpcp_r: trace is non-increasing on random instances") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const Matrix X = random_unit_columns(3 + t % 3, 25, rng);
    const SolverReport rep = dpcp_r(X, SolverConfig::defaults_for(SolverMethod::kRelaxed));
    CHECK(trace_non_increasing(rep.objective_trace, 1e-10));
    CHECK(norm2(rep.normal.span()) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("dpcp_r: warm start near the dominant normal stabilizes at it") {
  Rng rng(4);
  Vec g1{1.0, 0.0, 0.0};
  const UnitVector b1(g1);
  const double theta = M_PI / 4.0;
  const UnitVector b2(Vec{std::cos(theta), std::sin(theta), 0.0});
  const Matrix X = two_plane_instance(b1, b2, 200, 100, rng);

  // start 15 degrees away from the dominant normal
  const double tilt = 15.0 * M_PI / 180.0;
  const UnitVector n0(Vec{std::cos(tilt), 0.0, std::sin(tilt)});
  SolverConfig cfg = SolverConfig::defaults_for(SolverMethod::kRelaxed);
  const SolverReport rep = dpcp_r(X, cfg, n0);
  CHECK(principal_angle(rep.normal, b1) <= 1e-10);

  // the iterate is a fixed point: restarting from it returns it immediately
  const SolverReport again = dpcp_r(X, cfg, rep.normal);
  CHECK(std::abs(dot(again.normal.span(), rep.normal.span())) >= 1.0 - 1e-12);
  CHECK(again.iterations == 1);
}

TEST_CASE("dpcp_irls: noiseless recovery and the one-step diagonal oracle") {
  Rng rng(5);
  const PlaneInstance inst = plane_instance(4, 60, rng);
  const SolverReport rep = dpcp_irls(inst.points, SolverConfig::defaults_for(SolverMethod::kIrls));
  CHECK(principal_angle(rep.normal, inst.normal) <= 1e-8);

  // one reweighted step on the identity: weights 1/max(delta, |b0_i|), so
  // the new normal is the axis with the largest starting component
  Matrix I3(3, 3);
  for (int i = 0; i < 3; ++i) I3(i, i) = 1.0;
  const UnitVector b0 = UnitVector::normalized(Vec{0.8, 0.5, 0.33});
  SolverConfig one;
  one.max_iter = 1;
  const SolverReport step = dpcp_irls(I3, one, b0);
  CHECK(std::abs(step.normal[0]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dpcp_irls: fixed point no worse than the initialization") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Matrix X = random_unit_columns(3 + t % 4, 20 + t % 10, rng);
    const SolverReport rep = dpcp_irls(X, SolverConfig::defaults_for(SolverMethod::kIrls));
    CHECK(rep.objective_trace.back() <= rep.objective_trace.front() + 1e-12);
  }
}

TEST_CASE("dpcp_d: full shrinkage freezes the direction") {
  Rng rng(7);
  const Matrix X = random_unit_columns(3, 15, rng);
  SolverConfig cfg = SolverConfig::defaults_for(SolverMethod::kDenoised);
  cfg.tau = 10.0;  // above any |Y^T b| entry on unit data
  cfg.max_iter = 5;
  const auto [rep, y] = dpcp_d(X, cfg);
  for (double v : y) CHECK(v == 0.0);
  const UnitVector b0 = init_normal(X);
  CHECK(std::abs(dot(rep.normal.span(), b0.span())) == doctest::Approx(1.0).epsilon(1e-12));
  // with y = 0 the recorded objective is the pure quadratic 1/2 ||Y^T b||^2
  const Vec xb = X.mult_transpose(b0.span());
  CHECK(rep.objective_trace.back() == doctest::Approx(0.5 * dot(xb, xb)).epsilon(1e-12));
}

TEST_CASE("dpcp_d: trace non-increasing within 1e-10 relative") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const Matrix X = random_unit_columns(3 + t % 4, 30, rng);
    const auto [rep, y] = dpcp_d(X, SolverConfig::defaults_for(SolverMethod::kDenoised));
    CHECK(trace_non_increasing(rep.objective_trace, 1e-10));
  }
}

TEST_CASE("dpcp_d: near recovery on a noiseless hyperplane") {
  Rng rng(9);
  const PlaneInstance inst = plane_instance(3, 80, rng);
  const auto [rep, y] = dpcp_d(inst.points, SolverConfig::defaults_for(SolverMethod::kDenoised));
  CHECK(principal_angle(rep.normal, inst.normal) <= 1.0 * M_PI / 180.0);
}

TEST_CASE("denoised slice: inner objective non-increasing per alternation") {
  Rng rng(10);
  for (int t = 0; t < 50; ++t) {
    const std::size_t D = 3 + t % 3;
    const Matrix X = random_unit_columns(D, 25, rng);
    Matrix shifted = X.gram();
    for (std::size_t d = 0; d < D; ++d) shifted(d, d) += 1e-8;
    const CholeskyFactor chol(shifted);
    Vec g(D);
    for (double& x : g) x = rng.gaussian();
    const UnitVector anchor = UnitVector::normalized(g);
    const DenoisedSliceResult inner = solve_denoised_slice(X, chol, anchor, 1e-2, 50, 1e-6);
    CHECK(trace_non_increasing(inner.trace, 1e-10));
    CHECK(std::abs(dot(inner.b, anchor.span()) - 1.0) <= 1e-8);
  }
}

TEST_CASE("dpcp_r_d: approaches the LP recursion as tau vanishes") {
  Rng rng(11);
  const PlaneInstance inst = plane_instance(3, 30, rng);
  SolverConfig cfg = SolverConfig::defaults_for(SolverMethod::kRelaxedDenoised);
  cfg.tau = 1e-4;
  const SolverReport rd = dpcp_r_d(inst.points, cfg);
  const SolverReport r = dpcp_r(inst.points, SolverConfig::defaults_for(SolverMethod::kRelaxed));
  CHECK(principal_angle(rd.normal, r.normal) <= 1.0 * M_PI / 180.0);
}

TEST_CASE("dpcp_r_d: noiseless recovery within a degree") {
  Rng rng(12);
  const PlaneInstance inst = plane_instance(4, 50, rng);
  const SolverReport rep =
      dpcp_r_d(inst.points, SolverConfig::defaults_for(SolverMethod::kRelaxedDenoised));
  CHECK(principal_angle(rep.normal, inst.normal) <= 1.0 * M_PI / 180.0);
}

TEST_CASE("all four solvers agree on noiseless data and canonicalize signs") {
  Rng rng(13);
  const PlaneInstance inst = plane_instance(3, 60, rng);
  const SolverReport r1 = dpcp_r(inst.points, SolverConfig::defaults_for(SolverMethod::kRelaxed));
  const SolverReport r2 = dpcp_irls(inst.points, SolverConfig::defaults_for(SolverMethod::kIrls));
  const auto r3 = dpcp_d(inst.points, SolverConfig::defaults_for(SolverMethod::kDenoised));
  const SolverReport r4 =
      dpcp_r_d(inst.points, SolverConfig::defaults_for(SolverMethod::kRelaxedDenoised));
  for (const SolverReport* rep : {&r1, &r2, &r3.report, &r4}) {
    CHECK(principal_angle(rep->normal, inst.normal) <= 1e-6);
    CHECK(norm2(rep->normal.span()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(first_nonzero_positive(rep->normal));
    CHECK(rep->objective_trace.size() == rep->iterations + 1);
    for (double j : rep->objective_trace) {
      CHECK(std::isfinite(j));
      CHECK(j >= 0.0);
    }
  }
}

TEST_CASE("solver config validation") {
  SolverConfig bad;
  bad.epsilon = 0.0;
  CHECK_THROWS(bad.validate());
  bad = SolverConfig{};
  bad.tau = -1.0;
  CHECK_THROWS(bad.validate());
  CHECK(SolverConfig::defaults_for(SolverMethod::kRelaxed).max_iter == 20);
  CHECK(SolverConfig::defaults_for(SolverMethod::kIrls).max_iter == 100);
}
