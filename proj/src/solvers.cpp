#include "dpcp/solvers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dpcp {

namespace {

constexpr double kDeltaJGuard = 1e-9;  // denominator guard in the stop rule

double rel_decrease(double j_old, double j_new) {
  return (j_old - j_new) / (j_old + kDeltaJGuard);
}

}  // namespace

const char* solver_method_name(SolverMethod m) {
  switch (m) {
    case SolverMethod::kRelaxed: return "dpcp-r";
    case SolverMethod::kIrls: return "dpcp-irls";
    case SolverMethod::kDenoised: return "dpcp-d";
    case SolverMethod::kRelaxedDenoised: return "dpcp-r-d";
  }
  return "?";
}

std::optional<SolverMethod> parse_solver_method(const std::string& name) {
  if (name == "dpcp-r") return SolverMethod::kRelaxed;
  if (name == "dpcp-irls") return SolverMethod::kIrls;
  if (name == "dpcp-d") return SolverMethod::kDenoised;
  if (name == "dpcp-r-d") return SolverMethod::kRelaxedDenoised;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("SolverConfig: epsilon must be positive");
  if (max_iter == 0) throw std::invalid_argument("SolverConfig: max_iter must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("SolverConfig: delta must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("SolverConfig: tau must be positive");
}

SolverConfig SolverConfig::defaults_for(SolverMethod m) {
  SolverConfig cfg;
  if (m == SolverMethod::kRelaxed) cfg.max_iter = 20;
  return cfg;
}

UnitVector init_normal(const Matrix& Y) {
  if (Y.rows() == 0 || Y.cols() == 0) throw std::invalid_argument("init_normal: empty matrix");
  return smallest_eigvec(Y.gram()).first;
}

SolverReport dpcp_r(const Matrix& Y, const SolverConfig& cfg,
                    const std::optional<UnitVector>& init) {
  cfg.validate();
  SolverReport report;
  UnitVector n_hat = init ? *init : init_normal(Y);
  double j_prev = norm1(Y.mult_transpose(n_hat.span()));
  report.objective_trace.push_back(j_prev);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    const auto problem = L1SliceProblem::unchecked(Y, n_hat);
    L1SliceSolution sol = solve_l1_slice(problem);
    report.certificates.push_back(sol.certificate);
    n_hat = UnitVector::normalized(sol.b);
    const double j_new = norm1(Y.mult_transpose(n_hat.span()));
    report.objective_trace.push_back(j_new);
    ++report.iterations;
    if (rel_decrease(j_prev, j_new) <= cfg.epsilon) {
      report.converged = true;
      j_prev = j_new;
      break;
    }
    j_prev = j_new;
  }
  report.normal = n_hat.canonical_sign();
  return report;
}

SolverReport dpcp_irls(const Matrix& Y, const SolverConfig& cfg,
                       const std::optional<UnitVector>& init) {
  cfg.validate();
  SolverReport report;
  const std::size_t N = Y.cols();
  UnitVector b = init ? *init : init_normal(Y);
  double j_prev = norm1(Y.mult_transpose(b.span()));
  report.objective_trace.push_back(j_prev);

  Vec weights(N);
  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    const Vec residuals = Y.mult_transpose(b.span());
    for (std::size_t j = 0; j < N; ++j)
      weights[j] = 1.0 / std::max(cfg.delta, std::abs(residuals[j]));
    b = smallest_eigvec(Y.weighted_gram(weights)).first;
    const double j_new = norm1(Y.mult_transpose(b.span()));
    report.objective_trace.push_back(j_new);
    ++report.iterations;
    if (rel_decrease(j_prev, j_new) <= cfg.epsilon) {
      report.converged = true;
      j_prev = j_new;
      break;
    }
    j_prev = j_new;
  }
  report.normal = b.canonical_sign();
  return report;
}

DenoisedResult dpcp_d(const Matrix& Y, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t D = Y.rows();
  Matrix shifted = Y.gram();
  for (std::size_t d = 0; d < D; ++d) shifted(d, d) += cfg.delta;
  const CholeskyFactor chol(shifted);  // factored once, reused every round

  DenoisedResult out;
  SolverReport& report = out.report;
  UnitVector b = init_normal(Y);
  Vec y(Y.cols(), 0.0);
  double j_prev = cfg.tau * norm1(Y.mult_transpose(b.span()));
  report.objective_trace.push_back(j_prev);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    Vec xb = Y.mult_transpose(b.span());
    y = soft_threshold(xb, cfg.tau);
    const Vec solved = chol.solve(Y.mult(y));
    // a fully shrunk y makes the solve vanish; keep the previous direction
    // so the unit-norm contract survives
    if (norm2(solved) > 1e-300) b = UnitVector::normalized(solved);
    xb = Y.mult_transpose(b.span());
    double quad = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double r = y[j] - xb[j];
      quad += r * r;
    }
    const double j_new = cfg.tau * norm1(y) + 0.5 * quad;
    report.objective_trace.push_back(j_new);
    ++report.iterations;
    if (rel_decrease(j_prev, j_new) <= cfg.epsilon) {
      report.converged = true;
      j_prev = j_new;
      break;
    }
    j_prev = j_new;
  }
  report.normal = b.canonical_sign();
  out.denoised = std::move(y);
  return out;
}

DenoisedSliceResult solve_denoised_slice(const Matrix& Y, const CholeskyFactor& chol,
                                         const UnitVector& anchor, double tau,
                                         std::size_t max_alternations, double inner_eps) {
  DenoisedSliceResult out;
  out.b = anchor.coords();  // feasible start
  const Vec q = chol.solve(anchor.coords());
  const double wq = dot(anchor.span(), q);
  double j_prev = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < max_alternations; ++it) {
    const Vec y = soft_threshold(Y.mult_transpose(out.b), tau);
    const Vec p = chol.solve(Y.mult(y));
    const double lambda = (1.0 - dot(anchor.span(), p)) / wq;
    for (std::size_t d = 0; d < out.b.size(); ++d) out.b[d] = p[d] + lambda * q[d];
    const Vec xb = Y.mult_transpose(out.b);
    double quad = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double r = y[j] - xb[j];
      quad += r * r;
    }
    const double j_new = tau * norm1(y) + 0.5 * quad;
    out.trace.push_back(j_new);
    if (rel_decrease(j_prev, j_new) <= inner_eps) break;
    j_prev = j_new;
  }
  return out;
}

SolverReport dpcp_r_d(const Matrix& Y, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t D = Y.rows();
  Matrix shifted = Y.gram();
  for (std::size_t d = 0; d < D; ++d) shifted(d, d) += cfg.delta;
  const CholeskyFactor chol(shifted);

  constexpr std::size_t kInnerAlternations = 50;
  constexpr double kInnerEps = 1e-6;

  SolverReport report;
  UnitVector n_hat = init_normal(Y);
  double j_prev = norm1(Y.mult_transpose(n_hat.span()));
  report.objective_trace.push_back(j_prev);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    const DenoisedSliceResult inner =
        solve_denoised_slice(Y, chol, n_hat, cfg.tau, kInnerAlternations, kInnerEps);
    n_hat = UnitVector::normalized(inner.b);
    const double j_new = norm1(Y.mult_transpose(n_hat.span()));
    report.objective_trace.push_back(j_new);
    ++report.iterations;
    if (rel_decrease(j_prev, j_new) <= cfg.epsilon) {
      report.converged = true;
      j_prev = j_new;
      break;
    }
    j_prev = j_new;
  }
  report.normal = n_hat.canonical_sign();
  return report;
}

}  // namespace dpcp
