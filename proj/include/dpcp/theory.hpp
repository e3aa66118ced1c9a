#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dpcp/arrangement.hpp"
#include "dpcp/numerics.hpp"
#include "dpcp/rng.hpp"

// Global-optimality conditions for the continuous and discrete hyperplane
// median problems, estimators for the discrete uniformity and circumradius
// parameters, and a spherical grid-search oracle that certifies the
// continuous-problem phase transitions numerically.

namespace dpcp {

/// Average height of the unit hemisphere in R^D: the mean of |x_1| over
/// the sphere S^(D-2). Closed-form Gamma ratio, cross-checked against
/// quadrature to 1e-10 at evaluation time.
double average_height(std::size_t D);

/// Weighted median objective sum_i N_i c sin(theta_i) for b on the sphere.
double continuous_objective(const Arrangement& arr, const UnitVector& b);

struct ContinuousConditions {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool dominance_holds = false;   // N_1 > sqrt(alpha^2 + beta^2)
  bool uniqueness_holds = false;  // gamma > 0
  double sqrt2_bound = 0.0;       // sqrt(2) * sum_{i>1} N_i

  double dominance_threshold() const;
};

/// Quantities and verdicts of the continuous global-optimality conditions.
/// The (n-1)x(n-1) matrix entering alpha carries N_i N_j cos(theta_ij) for
/// all i, j > 1 including the diagonal (cos of the zero self-angle), which
/// is the form the bound is proved for.
ContinuousConditions continuous_conditions(const Arrangement& arr);

/// Probe-based lower bound on the uniformity parameter of one cluster: the
/// worst-case gap between the cluster's signed average point and c times
/// the normalized in-plane projection of the probe. Random probes followed
/// by a short local ascent; a lower bound because the exact maximization is
/// non-convex.
double uniformity_epsilon(const Matrix& cluster, const UnitVector& normal, double c,
                          std::size_t num_probes, Rng& rng);

struct CircumradiusResult {
  double value = 0.0;
  bool exact = false;  // false when any per-cluster term used the greedy bound
};

/// Worst-case reach of signed combinations of D-1 points split across the
/// clusters: per cluster and subset size the polytope is a symmetric
/// zonotope whose circumradius sits at a sign vertex, enumerated exactly
/// while C(N,K) 2^(K-1) stays under 1e6 and bounded greedily above that;
/// combined across all compositions of D-1 with parts at most D-2.
CircumradiusResult circumradius_R(const std::vector<Matrix>& clusters, std::size_t D);

struct DiscreteConditions {
  double c = 0.0;
  Vec epsilons;
  double R = 0.0;
  double alpha_bar = 0.0;
  double beta_bar = 0.0;
  double gamma_bar = 0.0;
  bool precondition_ok = false;   // c > sqrt(2) eps_1
  bool dominance_holds = false;   // N_1 > sqrt(alpha_bar^2 + beta_bar^2)
  bool uniqueness_holds = false;  // gamma_bar > 0
  bool epsilon_is_estimate = true;  // probe-based lower bound, so verdicts are optimistic
};

/// Discrete conditions from explicitly supplied uniformity and circumradius
/// values (the continuous limit is the all-zero input).
DiscreteConditions discrete_conditions_from(const Arrangement& arr, const Vec& epsilons,
                                            double R);

/// Estimate epsilons and R from per-cluster data, then evaluate.
DiscreteConditions discrete_conditions(const Arrangement& arr,
                                       const std::vector<Matrix>& clusters,
                                       std::size_t num_probes, Rng& rng);

struct LPConditions {
  double c = 0.0;
  double theta_10 = 0.0;      // angle of the initial estimate from the dominant normal
  double theta_min_1 = 0.0;   // smallest angle from the dominant normal to the rest
  double mu = 0.0;
  double nu = 0.0;
  double rho = 0.0;
  double tau_coeff = 0.0;
  bool precondition_ok = false;  // c > sqrt(5) eps_1
  bool angle_ok = false;
  double N1_threshold = 0.0;     // infinite when tau_coeff <= 0
  bool holds = false;
  bool epsilon_is_estimate = true;
};

LPConditions lp_conditions_from(const Arrangement& arr, const Vec& epsilons, double R,
                                const UnitVector& n0);

LPConditions lp_conditions(const Arrangement& arr, const std::vector<Matrix>& clusters,
                           const UnitVector& n0, std::size_t num_probes, Rng& rng);

struct GridArgmin {
  UnitVector argmin;
  double value = 0.0;
};

/// Deterministic quasi-uniform search over the sphere (golden-angle spiral
/// in R^3, uniform angles in R^2) with local pattern-descent refinement of
/// the best candidates. Exhaustive-mode dimensions are 2 and 3.
GridArgmin sphere_grid_argmin(std::size_t D, const std::function<double(const Vec&)>& f,
                              std::size_t resolution);

/// Grid search restricted to the great circle spanned by two directions.
GridArgmin circle_grid_argmin(const UnitVector& span_a, const UnitVector& span_b,
                              const std::function<double(const Vec&)>& f,
                              std::size_t resolution);

/// Default lattice size giving about half-degree spacing in R^3.
inline constexpr std::size_t kDefaultGridResolution = 200000;

}  // namespace dpcp
