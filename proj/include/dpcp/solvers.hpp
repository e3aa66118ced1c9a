#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dpcp/lp.hpp"
#include "dpcp/numerics.hpp"

// The four DPCP solver variants. Each one takes a (possibly weighted) data
// matrix with one point per column and produces a single hyperplane normal.
// All solvers are pure given (Y, config) and report sign-canonicalized
// unit normals, so runs are reproducible and angle comparisons well defined.

namespace dpcp {

enum class SolverMethod { kRelaxed, kIrls, kDenoised, kRelaxedDenoised };

const char* solver_method_name(SolverMethod m);
std::optional<SolverMethod> parse_solver_method(const std::string& name);

struct SolverConfig {
  double epsilon = 1e-3;     // relative objective-decrease stop
  std::size_t max_iter = 100;
  double delta = 1e-8;       // IRLS weight floor / Cholesky shift
  double tau = 1e-2;         // denoising threshold

  void validate() const;
  /// Method defaults: the LP recursion caps at 20 iterations, the rest at 100.
  static SolverConfig defaults_for(SolverMethod m);
};

struct SolverReport {
  UnitVector normal;
  Vec objective_trace;            // J_0 .. J_k; iterations = length - 1
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<VertexCertificate> certificates;  // LP recursion only, one per iterate
};

/// Eigenvector initialization shared by all variants: the direction that
/// minimizes ||Y^T b||_2 over the sphere.
UnitVector init_normal(const Matrix& Y);

/// Relaxed DPCP: recursion of slice linear programs, each solved by the
/// simplex method, iterate renormalized between rounds. The iterate starts
/// at init_normal(Y) unless an explicit start is given.
SolverReport dpcp_r(const Matrix& Y, const SolverConfig& cfg,
                    const std::optional<UnitVector>& init = std::nullopt);

/// DPCP via iteratively reweighted least squares with weight floor delta.
SolverReport dpcp_irls(const Matrix& Y, const SolverConfig& cfg,
                       const std::optional<UnitVector>& init = std::nullopt);

struct DenoisedResult {
  SolverReport report;
  Vec denoised;  // the auxiliary y at exit
};

/// Denoised DPCP: alternate soft-thresholding of Y^T b with a ridge solve
/// against Y Y^T + delta I (factored once), renormalizing b each round.
DenoisedResult dpcp_d(const Matrix& Y, const SolverConfig& cfg);

struct DenoisedSliceResult {
  Vec b;      // feasible for the slice constraint
  Vec trace;  // inner objective per alternation
};

/// One denoised slice subproblem: minimize tau ||y||_1 + 1/2 ||y - Y^T b||^2
/// over the anchor slice by alternating shrinkage in y with a KKT
/// least-squares step in b against the pre-factored Y Y^T + delta I.
DenoisedSliceResult solve_denoised_slice(const Matrix& Y, const CholeskyFactor& chol,
                                         const UnitVector& anchor, double tau,
                                         std::size_t max_alternations, double inner_eps);

/// Relaxed-and-denoised DPCP: the outer LP recursion with each slice
/// subproblem replaced by its denoised version.
SolverReport dpcp_r_d(const Matrix& Y, const SolverConfig& cfg);

}  // namespace dpcp
