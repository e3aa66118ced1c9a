#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcp/numerics.hpp"
#include "dpcp/rng.hpp"
#include "dpcp/solvers.hpp"

// Multi-hyperplane pipelines: sequential learning by down-weighting points
// near already-found hyperplanes, and iterative refinement in the
// K-hyperplanes style, both parameterized by a pluggable normal estimator.
// RANSAC / SVD / REAPER baselines live here too.

namespace dpcp {

enum class EstimatorKind { kDpcpR, kDpcpIrls, kDpcpD, kDpcpRD, kSvd, kRansac, kReaper };

const char* estimator_name(EstimatorKind k);
std::optional<EstimatorKind> parse_estimator(const std::string& name);

/// A named strategy for fitting one hyperplane normal to a weighted point
/// set. DPCP variants and REAPER consume the weight-scaled columns, the SVD
/// baseline weights its covariance linearly, RANSAC samples by weight.
struct NormalEstimator {
  EstimatorKind kind = EstimatorKind::kDpcpR;
  SolverConfig solver;       // DPCP / REAPER settings
  std::size_t ransac_trials = 500;
  double ransac_thresh = 0.03;

  static NormalEstimator make(EstimatorKind k);
  /// rng is consumed only by the RANSAC strategy.
  UnitVector estimate(const Matrix& X, std::span<const double> weights, Rng& rng) const;
};

struct ClusterResult {
  std::vector<int> labels;          // 1-based hyperplane ids
  std::vector<UnitVector> normals;  // n of them
  Vec residuals;                    // |b_label . x| per point
  std::size_t restarts_used = 0;
  double final_objective = 0.0;     // sum of residuals
  std::size_t sweeps = 0;           // refinement sweeps (iterative pipeline)
};

/// Nearest-hyperplane assignment: argmin_k |b_k . x_j|, ties to smallest k.
std::vector<int> assign_labels(const Matrix& X, const std::vector<UnitVector>& normals);

/// Sequential hyperplane learning: estimate a normal from the weighted data,
/// reweight every point by its smallest distance to the normals found so
/// far, repeat n times, then label against the original points.
ClusterResult shl(const Matrix& X, std::size_t n, const NormalEstimator& est, Rng& rng);

/// Iterative hyperplane learning from given initial normals: alternate
/// assignment and per-cluster re-estimation until the l1 objective stalls.
/// An emptied cluster is re-seeded from the point with the largest current
/// residual rather than aborting the run.
ClusterResult ihl(const Matrix& X, const std::vector<UnitVector>& init_normals,
                  const NormalEstimator& est, double eps, std::size_t t_max, Rng& rng);

/// Best-of-restarts iterative learning with random unit initializations
/// drawn from seeds derived per restart; ties go to the earliest restart.
ClusterResult ihl_restarts(const Matrix& X, std::size_t n, const NormalEstimator& est,
                           double eps, std::size_t t_max, std::size_t restarts,
                           std::uint64_t seed);

/// Weighted RANSAC baseline: sample D-1 distinct columns with probability
/// proportional to the weights, score by weighted consensus within thresh.
UnitVector ransac_normal(const Matrix& X, std::span<const double> weights, std::size_t trials,
                         double thresh, Rng& rng);

/// PCA baseline: smallest eigenvector of the weighted covariance.
UnitVector svd_normal(const Matrix& X, std::span<const double> weights);

/// REAPER baseline specialized to hyperplanes, realized as IRLS on the
/// point-to-hyperplane distances. For one-codimension fits the reweighted
/// iteration coincides with the DPCP IRLS fixed-point equation.
UnitVector reaper_normal(const Matrix& X, const SolverConfig& cfg);

}  // namespace dpcp
