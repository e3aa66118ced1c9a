#include "dpcp/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dpcp {

const char* estimator_name(EstimatorKind k) {
  switch (k) {
    case EstimatorKind::kDpcpR: return "dpcp-r";
    case EstimatorKind::kDpcpIrls: return "dpcp-irls";
    case EstimatorKind::kDpcpD: return "dpcp-d";
    case EstimatorKind::kDpcpRD: return "dpcp-r-d";
    case EstimatorKind::kSvd: return "svd";
    case EstimatorKind::kRansac: return "ransac";
    case EstimatorKind::kReaper: return "reaper";
  }
  return "?";
}

std::optional<EstimatorKind> parse_estimator(const std::string& name) {
  if (name == "dpcp-r") return EstimatorKind::kDpcpR;
  if (name == "dpcp-irls") return EstimatorKind::kDpcpIrls;
  if (name == "dpcp-d") return EstimatorKind::kDpcpD;
  if (name == "dpcp-r-d") return EstimatorKind::kDpcpRD;
  if (name == "svd") return EstimatorKind::kSvd;
  if (name == "ransac") return EstimatorKind::kRansac;
  if (name == "reaper") return EstimatorKind::kReaper;
  return std::nullopt;
}

NormalEstimator NormalEstimator::make(EstimatorKind k) {
  NormalEstimator est;
  est.kind = k;
  switch (k) {
    case EstimatorKind::kDpcpR:
      est.solver = SolverConfig::defaults_for(SolverMethod::kRelaxed);
      break;
    case EstimatorKind::kDpcpIrls:
      est.solver = SolverConfig::defaults_for(SolverMethod::kIrls);
      break;
    case EstimatorKind::kDpcpD:
      est.solver = SolverConfig::defaults_for(SolverMethod::kDenoised);
      break;
    case EstimatorKind::kDpcpRD:
      est.solver = SolverConfig::defaults_for(SolverMethod::kRelaxedDenoised);
      break;
    default:
      break;
  }
  return est;
}

namespace {

Matrix scale_columns(const Matrix& X, std::span<const double> weights) {
  Matrix Y(X.rows(), X.cols());
  for (std::size_t j = 0; j < X.cols(); ++j) {
    const double w = weights[j];
    auto src = X.col(j);
    auto dst = Y.col(j);
    for (std::size_t i = 0; i < X.rows(); ++i) dst[i] = w * src[i];
  }
  return Y;
}

}  // namespace

UnitVector NormalEstimator::estimate(const Matrix& X, std::span<const double> weights,
                                     Rng& rng) const {
  if (weights.size() != X.cols())
    throw std::invalid_argument("NormalEstimator: weight count mismatch");
  switch (kind) {
    case EstimatorKind::kDpcpR: return dpcp_r(scale_columns(X, weights), solver).normal;
    case EstimatorKind::kDpcpIrls: return dpcp_irls(scale_columns(X, weights), solver).normal;
    case EstimatorKind::kDpcpD: return dpcp_d(scale_columns(X, weights), solver).report.normal;
    case EstimatorKind::kDpcpRD: return dpcp_r_d(scale_columns(X, weights), solver).normal;
    case EstimatorKind::kSvd: return svd_normal(X, weights);
    case EstimatorKind::kRansac: return ransac_normal(X, weights, ransac_trials, ransac_thresh, rng);
    case EstimatorKind::kReaper: return reaper_normal(scale_columns(X, weights), solver);
  }
  throw std::logic_error("NormalEstimator: unknown strategy");
}

std::vector<int> assign_labels(const Matrix& X, const std::vector<UnitVector>& normals) {
  if (normals.empty()) throw std::invalid_argument("assign_labels: need at least one normal");
  std::vector<int> labels(X.cols(), 1);
  for (std::size_t j = 0; j < X.cols(); ++j) {
    auto x = X.col(j);
    double best = std::abs(dot(x, normals[0].span()));
    for (std::size_t k = 1; k < normals.size(); ++k) {
      const double r = std::abs(dot(x, normals[k].span()));
      if (r < best) {
        best = r;
        labels[j] = static_cast<int>(k) + 1;
      }
    }
  }
  return labels;
}

namespace {

Vec residuals_for(const Matrix& X, const std::vector<UnitVector>& normals,
                  const std::vector<int>& labels) {
  Vec res(X.cols());
  for (std::size_t j = 0; j < X.cols(); ++j)
    res[j] = std::abs(dot(X.col(j), normals[static_cast<std::size_t>(labels[j]) - 1].span()));
  return res;
}

double objective_of(const Vec& residuals) {
  double s = 0.0;
  for (double r : residuals) s += r;
  return s;
}

}  // namespace

ClusterResult shl(const Matrix& X, std::size_t n, const NormalEstimator& est, Rng& rng) {
  if (n < 1) throw std::invalid_argument("shl: need at least one hyperplane");
  const std::size_t N = X.cols();
  Vec weights(N, 1.0);
  std::vector<UnitVector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    UnitVector b;
    try {
      b = est.estimate(X, weights, rng);
    } catch (const std::exception& e) {
      throw std::runtime_error("shl: estimator failed on hyperplane " + std::to_string(i + 1) +
                               ": " + e.what());
    }
    normals.push_back(std::move(b));
    for (std::size_t j = 0; j < N; ++j)
      weights[j] = std::min(weights[j], std::abs(dot(X.col(j), normals.back().span())));
  }
  ClusterResult out;
  out.labels = assign_labels(X, normals);
  out.residuals = residuals_for(X, normals, out.labels);
  out.final_objective = objective_of(out.residuals);
  out.normals = std::move(normals);
  return out;
}

ClusterResult ihl(const Matrix& X, const std::vector<UnitVector>& init_normals,
                  const NormalEstimator& est, double eps, std::size_t t_max, Rng& rng) {
  const std::size_t n = init_normals.size();
  if (n == 0) throw std::invalid_argument("ihl: need initial normals");
  const std::size_t N = X.cols();

  std::vector<UnitVector> normals = init_normals;
  std::vector<int> labels;
  double j_old = std::numeric_limits<double>::infinity();
  std::size_t sweeps = 0;

  while (sweeps < t_max) {
    ++sweeps;
    labels = assign_labels(X, normals);
    const double j_new = objective_of(residuals_for(X, normals, labels));
    const double delta = (j_old - j_new) / (j_old + 1e-9);
    j_old = j_new;
    if (std::isfinite(delta) && delta <= eps) break;

    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < N; ++j)
        if (labels[j] == static_cast<int>(i) + 1) members.push_back(j);
      if (members.empty()) {
        // re-seed from the worst-fit point: rotate the old normal into the
        // orthogonal complement of that point so it joins this cluster next
        std::size_t worst = 0;
        double worst_r = -1.0;
        for (std::size_t j = 0; j < N; ++j) {
          const double r =
              std::abs(dot(X.col(j), normals[static_cast<std::size_t>(labels[j]) - 1].span()));
          if (r > worst_r) {
            worst_r = r;
            worst = j;
          }
        }
        Vec rotated = project_to_hyperplane(normals[i].span(), X.col(worst));
        if (norm2(rotated) < 1e-9) {
          // the old normal was aligned with the point; fall back to the
          // coordinate direction least aligned with it
          auto x = X.col(worst);
          std::size_t axis = 0;
          for (std::size_t d = 1; d < X.rows(); ++d)
            if (std::abs(x[d]) < std::abs(x[axis])) axis = d;
          Vec e(X.rows(), 0.0);
          e[axis] = 1.0;
          rotated = project_to_hyperplane(e, x);
        }
        normals[i] = UnitVector::normalized(rotated).canonical_sign();
        continue;
      }
      Matrix cluster(X.rows(), members.size());
      for (std::size_t c = 0; c < members.size(); ++c) {
        auto src = X.col(members[c]);
        std::copy(src.begin(), src.end(), cluster.col(c).begin());
      }
      const Vec ones(members.size(), 1.0);
      try {
        normals[i] = est.estimate(cluster, ones, rng);
      } catch (const std::exception& e) {
        throw std::runtime_error("ihl: estimator failed on cluster " + std::to_string(i + 1) +
                                 ": " + e.what());
      }
    }
  }

  ClusterResult out;
  out.labels = assign_labels(X, normals);
  out.residuals = residuals_for(X, normals, out.labels);
  out.final_objective = objective_of(out.residuals);
  out.normals = std::move(normals);
  out.sweeps = sweeps;
  return out;
}

ClusterResult ihl_restarts(const Matrix& X, std::size_t n, const NormalEstimator& est,
                           double eps, std::size_t t_max, std::size_t restarts,
                           std::uint64_t seed) {
  if (restarts == 0) throw std::invalid_argument("ihl_restarts: need at least one restart");
  ClusterResult best;
  bool have = false;
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, r));
    std::vector<UnitVector> init;
    for (std::size_t i = 0; i < n; ++i) {
      Vec g(X.rows());
      for (double& x : g) x = rng.gaussian();
      init.push_back(UnitVector::normalized(g));
    }
    ClusterResult res = ihl(X, init, est, eps, t_max, rng);
    if (!have || res.final_objective < best.final_objective) {
      best = std::move(res);
      have = true;
    }
  }
  best.restarts_used = restarts;
  return best;
}

UnitVector ransac_normal(const Matrix& X, std::span<const double> weights, std::size_t trials,
                         double thresh, Rng& rng) {
  const std::size_t D = X.rows();
  const std::size_t N = X.cols();
  if (N < D - 1) throw std::invalid_argument("ransac_normal: fewer than D-1 points");
  if (weights.size() != N) throw std::invalid_argument("ransac_normal: weight count mismatch");
  double total_w = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("ransac_normal: negative weight");
    total_w += w;
  }
  if (total_w <= 0.0) throw std::invalid_argument("ransac_normal: all weights are zero");

  UnitVector best;
  double best_count = -1.0;
  Vec avail(weights.begin(), weights.end());
  std::vector<std::size_t> sample(D - 1);

  for (std::size_t t = 0; t < trials; ++t) {
    // D-1 distinct columns, drawn sequentially with probability ~ weight
    std::copy(weights.begin(), weights.end(), avail.begin());
    double mass = total_w;
    bool ok = true;
    for (std::size_t s = 0; s < D - 1; ++s) {
      if (mass <= 0.0) {
        ok = false;
        break;
      }
      double target = rng.uniform() * mass;
      std::size_t pick = N;
      for (std::size_t j = 0; j < N; ++j) {
        if (avail[j] == 0.0) continue;
        target -= avail[j];
        if (target < 0.0) {
          pick = j;
          break;
        }
      }
      if (pick == N) {  // roundoff walked past the end; take the last live slot
        for (std::size_t j = N; j-- > 0;)
          if (avail[j] > 0.0) {
            pick = j;
            break;
          }
        if (pick == N) {
          ok = false;
          break;
        }
      }
      sample[s] = pick;
      mass -= avail[pick];
      avail[pick] = 0.0;
    }
    if (!ok) break;

    Matrix sub(D, D - 1);
    for (std::size_t s = 0; s < D - 1; ++s) {
      auto src = X.col(sample[s]);
      std::copy(src.begin(), src.end(), sub.col(s).begin());
    }
    // degenerate samples (rank below D-1) consume the trial
    Matrix G(D - 1, D - 1);
    for (std::size_t i = 0; i + 1 < D; ++i)
      for (std::size_t j = 0; j + 1 < D; ++j) G(i, j) = dot(sub.col(i), sub.col(j));
    if (D > 1 && sym_eigen(G).values.front() <= 1e-18) continue;

    const UnitVector cand = smallest_eigvec(sub.gram()).first;
    double count = 0.0;
    for (std::size_t j = 0; j < N; ++j)
      if (std::abs(dot(X.col(j), cand.span())) <= thresh) count += weights[j];
    if (count > best_count) {
      best_count = count;
      best = cand;
    }
  }
  if (best_count < 0.0) throw std::runtime_error("ransac_normal: no non-degenerate sample found");
  return best.canonical_sign();
}

UnitVector svd_normal(const Matrix& X, std::span<const double> weights) {
  if (weights.size() != X.cols()) throw std::invalid_argument("svd_normal: weight count mismatch");
  double mass = 0.0;
  for (double w : weights) mass += std::abs(w);
  if (mass == 0.0) throw std::invalid_argument("svd_normal: weighted points are all zero");
  return smallest_eigvec(X.weighted_gram(weights)).first;
}

UnitVector reaper_normal(const Matrix& X, const SolverConfig& cfg) {
  return dpcp_irls(X, cfg).normal;
}

}  // namespace dpcp
