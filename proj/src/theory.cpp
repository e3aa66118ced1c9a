#include "dpcp/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dpcp {

namespace {

double sin_from_cos(double c) { return std::sqrt(std::max(0.0, 1.0 - c * c)); }

// Simpson integration of f over [lo, hi].
template <typename F>
double simpson(F&& f, double lo, double hi, std::size_t intervals) {
  if (intervals % 2 == 1) ++intervals;
  const double h = (hi - lo) / static_cast<double>(intervals);
  double s = f(lo) + f(hi);
  for (std::size_t i = 1; i < intervals; ++i)
    s += f(lo + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

double average_height(std::size_t D) {
  if (D < 2) throw std::invalid_argument("average_height: D must be at least 2");
  const double m = static_cast<double>(D - 1);  // the hyperplane sphere lives in R^(D-1)
  // mean of |x_1| over S^(m-1): Gamma(m/2) / (sqrt(pi) Gamma((m+1)/2))
  const double closed =
      std::exp(std::lgamma(m / 2.0) - std::lgamma((m + 1.0) / 2.0)) / std::sqrt(M_PI);
  if (D == 2) return 1.0;  // two-point sphere, the integral form below needs m >= 2

  const auto weight = [&](double phi) { return std::pow(std::sin(phi), m - 2.0); };
  const double num =
      simpson([&](double phi) { return std::abs(std::cos(phi)) * weight(phi); }, 0.0, M_PI, 4000);
  const double den = simpson(weight, 0.0, M_PI, 4000);
  const double quad = num / den;
  if (std::abs(quad - closed) > 1e-10)
    throw std::runtime_error("average_height: quadrature disagrees with the closed form");
  return closed;
}

double continuous_objective(const Arrangement& arr, const UnitVector& b) {
  if (b.dim() != arr.dim())
    throw std::invalid_argument("continuous_objective: dimension mismatch");
  const double c = average_height(arr.dim());
  double J = 0.0;
  for (std::size_t i = 0; i < arr.count(); ++i) {
    const double cosang = std::clamp(std::abs(dot(b.span(), arr.normal(i).span())), 0.0, 1.0);
    J += static_cast<double>(arr.weight(i)) * c * sin_from_cos(cosang);
  }
  return J;
}

double ContinuousConditions::dominance_threshold() const {
  return std::sqrt(alpha * alpha + beta * beta);
}

ContinuousConditions continuous_conditions(const Arrangement& arr) {
  const std::size_t n = arr.count();
  if (n < 2) throw std::invalid_argument("continuous_conditions: need at least two hyperplanes");

  ContinuousConditions out;
  const double N1 = arr.weight(0);

  double j_b1 = 0.0;      // sum_{i>1} N_i sin(theta_1i)
  double sum_sq = 0.0;    // sum_{i>1} N_i^2
  double sum_rest = 0.0;  // sum_{i>1} N_i
  for (std::size_t i = 1; i < n; ++i) {
    const double Ni = arr.weight(i);
    j_b1 += Ni * std::sin(arr.angle(0, i));
    sum_sq += Ni * Ni;
    sum_rest += Ni;
  }

  // |Gram| of the trailing weighted normals, diagonal included
  Matrix M(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const double cosang = i == j ? 1.0 : std::cos(arr.angle(i, j));
      M(i - 1, j - 1) = static_cast<double>(arr.weight(i)) * arr.weight(j) * cosang;
    }
  const double sigma_max = max_eigval(M);
  out.alpha = j_b1 - std::sqrt(std::max(0.0, sum_sq - sigma_max));

  double cross = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      cross += static_cast<double>(arr.weight(i)) * arr.weight(j) * std::cos(arr.angle(i, j));
  out.beta = std::sqrt(sum_sq + 2.0 * cross);

  double gamma = std::numeric_limits<double>::infinity();
  for (std::size_t ip = 1; ip < n; ++ip) {
    double j_bi = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (i != ip) j_bi += static_cast<double>(arr.weight(i)) * std::sin(arr.angle(ip, i));
    gamma = std::min(gamma, j_bi);
  }
  out.gamma = gamma - j_b1;

  out.sqrt2_bound = std::sqrt(2.0) * sum_rest;
  out.dominance_holds = N1 > out.dominance_threshold();
  out.uniqueness_holds = out.gamma > 0.0;
  return out;
}

namespace {

// chi_{i,b}: the cluster average signed toward the probe's halfspace.
Vec signed_average(const Matrix& cluster, std::span<const double> b) {
  const std::size_t D = cluster.rows();
  Vec chi(D, 0.0);
  for (std::size_t j = 0; j < cluster.cols(); ++j) {
    auto x = cluster.col(j);
    const double s = dot(x, b);
    if (s > 0.0)
      for (std::size_t d = 0; d < D; ++d) chi[d] += x[d];
    else if (s < 0.0)
      for (std::size_t d = 0; d < D; ++d) chi[d] -= x[d];
  }
  for (double& v : chi) v /= static_cast<double>(cluster.cols());
  return chi;
}

double uniformity_gap(const Matrix& cluster, const UnitVector& normal, double c,
                      std::span<const double> b) {
  const Vec chi = signed_average(cluster, b);
  const Vec h_hat = normalize(project_to_hyperplane(b, normal.span()));
  double s = 0.0;
  for (std::size_t d = 0; d < chi.size(); ++d) {
    const double r = chi[d] - c * h_hat[d];
    s += r * r;
  }
  return std::sqrt(s);
}

}  // namespace

double uniformity_epsilon(const Matrix& cluster, const UnitVector& normal, double c,
                          std::size_t num_probes, Rng& rng) {
  if (cluster.cols() == 0) throw std::invalid_argument("uniformity_epsilon: empty cluster");
  if (normal.dim() != cluster.rows())
    throw std::invalid_argument("uniformity_epsilon: normal dimension mismatch");
  const std::size_t D = cluster.rows();

  Vec best_b;
  double best = -1.0;
  for (std::size_t p = 0; p < std::max<std::size_t>(num_probes, 1); ++p) {
    Vec g(D);
    for (double& x : g) x = rng.gaussian();
    const Vec b = normalize(g);
    const double val = uniformity_gap(cluster, normal, c, b);
    if (val > best) {
      best = val;
      best_b = b;
    }
  }

  // 20 ascent steps of tangent pattern search from the best probe
  Vec b = best_b;
  double step = 0.3;
  for (int it = 0; it < 20; ++it) {
    bool improved = false;
    for (std::size_t d = 0; d < D && !improved; ++d) {
      Vec axis(D, 0.0);
      axis[d] = 1.0;
      Vec t = project_to_hyperplane(axis, b);
      const double tn = norm2(t);
      if (tn < 1e-12) continue;
      for (double& x : t) x /= tn;
      for (double sgn : {+1.0, -1.0}) {
        Vec cand(D);
        const double cs = std::cos(step), sn = std::sin(step) * sgn;
        for (std::size_t i = 0; i < D; ++i) cand[i] = cs * b[i] + sn * t[i];
        const double val = uniformity_gap(cluster, normal, c, cand);
        if (val > best) {
          best = val;
          b = cand;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

namespace {

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  double v = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    v *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (v > static_cast<double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(v);
}

struct ZonotopeReach {
  double value = 0.0;
  bool exact = true;
};

// Max over K-subsets and sign patterns of || sum s_j y_j ||.
ZonotopeReach zonotope_reach(const Matrix& Y, std::size_t K) {
  const std::size_t N = Y.cols();
  const std::size_t D = Y.rows();
  ZonotopeReach out;
  if (K == 0) return out;
  if (K > N) throw std::invalid_argument("zonotope_reach: subset larger than the cluster");

  const std::size_t work = binomial_capped(N, K, 1000000);
  const std::size_t sign_count = std::size_t{1} << (K - 1);
  if (work <= 1000000 / std::max<std::size_t>(sign_count, 1)) {
    // exact: iterate subsets in lexicographic order, first sign fixed positive
    std::vector<std::size_t> idx(K);
    std::iota(idx.begin(), idx.end(), 0);
    Vec acc(D);
    while (true) {
      for (std::size_t mask = 0; mask < sign_count; ++mask) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::size_t t = 0; t < K; ++t) {
          const double s = (t > 0 && (mask >> (t - 1)) & 1) ? -1.0 : 1.0;
          auto y = Y.col(idx[t]);
          for (std::size_t d = 0; d < D; ++d) acc[d] += s * y[d];
        }
        out.value = std::max(out.value, norm2(acc));
      }
      std::size_t t = K;
      while (t-- > 0) {
        if (idx[t] + (K - t) < N) {
          ++idx[t];
          for (std::size_t r = t + 1; r < K; ++r) idx[r] = idx[r - 1] + 1;
          break;
        }
        if (t == 0) return out;
      }
    }
  }

  // greedy bound: grow the most aligned signed sum from every start column
  out.exact = false;
  std::vector<char> used(N, 0);
  Vec acc(D);
  for (std::size_t start = 0; start < N; ++start) {
    std::fill(used.begin(), used.end(), 0);
    auto y0 = Y.col(start);
    std::copy(y0.begin(), y0.end(), acc.begin());
    used[start] = 1;
    for (std::size_t t = 1; t < K; ++t) {
      double best_gain = -1.0;
      std::size_t best_j = N;
      double best_sign = 1.0;
      for (std::size_t j = 0; j < N; ++j) {
        if (used[j]) continue;
        const double d = dot(acc, Y.col(j));
        const double sgn = d >= 0.0 ? 1.0 : -1.0;
        if (sgn * d > best_gain) {
          best_gain = sgn * d;
          best_j = j;
          best_sign = sgn;
        }
      }
      auto y = Y.col(best_j);
      for (std::size_t d = 0; d < D; ++d) acc[d] += best_sign * y[d];
      used[best_j] = 1;
    }
    out.value = std::max(out.value, norm2(acc));
  }
  return out;
}

}  // namespace

CircumradiusResult circumradius_R(const std::vector<Matrix>& clusters, std::size_t D) {
  const std::size_t n = clusters.size();
  if (n == 0) throw std::invalid_argument("circumradius_R: no clusters");
  if (D < 2) throw std::invalid_argument("circumradius_R: D must be at least 2");
  if (D - 1 > n * (D - 2))
    throw std::invalid_argument("circumradius_R: infeasible split, D-1 exceeds n*(D-2)");

  // per-cluster reach tables for K = 0 .. min(D-2, N_i)
  std::vector<std::vector<ZonotopeReach>> table(n);
  std::size_t feasible_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kmax = std::min<std::size_t>(D - 2, clusters[i].cols());
    feasible_total += kmax;
    table[i].resize(kmax + 1);
    for (std::size_t K = 0; K <= kmax; ++K) table[i][K] = zonotope_reach(clusters[i], K);
  }
  if (feasible_total < D - 1)
    throw std::invalid_argument("circumradius_R: clusters too small to supply D-1 points");

  // walk all compositions of D-1 into n parts within the per-cluster caps
  CircumradiusResult best;
  best.value = -1.0;
  std::vector<std::size_t> parts(n, 0);
  const auto recurse = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
    if (i + 1 == n) {
      if (remaining >= table[i].size()) return;
      parts[i] = remaining;
      double total = 0.0;
      bool exact = true;
      for (std::size_t t = 0; t < n; ++t) {
        total += table[t][parts[t]].value;
        if (parts[t] > 0) exact = exact && table[t][parts[t]].exact;
      }
      if (total > best.value) {
        best.value = total;
        best.exact = exact;
      }
      return;
    }
    const std::size_t cap = std::min(remaining, table[i].size() - 1);
    for (std::size_t K = 0; K <= cap; ++K) {
      parts[i] = K;
      self(self, i + 1, remaining - K);
    }
  };
  recurse(recurse, 0, D - 1);
  if (best.value < 0.0)
    throw std::invalid_argument("circumradius_R: no feasible composition of D-1");
  return best;
}

DiscreteConditions discrete_conditions_from(const Arrangement& arr, const Vec& epsilons,
                                            double R) {
  const std::size_t n = arr.count();
  if (epsilons.size() != n)
    throw std::invalid_argument("discrete_conditions: epsilon count mismatch");
  const ContinuousConditions cc = continuous_conditions(arr);

  DiscreteConditions out;
  out.c = average_height(arr.dim());
  out.epsilons = epsilons;
  out.R = R;
  const double inv_c = 1.0 / out.c;
  const double N1 = arr.weight(0);

  double eps_w_tail = 0.0;  // sum_{i>1} eps_i N_i
  double eps_w_all = 0.0;   // sum_i eps_i N_i
  for (std::size_t i = 0; i < n; ++i) {
    const double t = epsilons[i] * arr.weight(i);
    eps_w_all += t;
    if (i > 0) eps_w_tail += t;
  }
  out.alpha_bar = cc.alpha + inv_c * (epsilons[0] * N1 + 2.0 * eps_w_tail);
  out.beta_bar = cc.beta + inv_c * (R + eps_w_all);
  double gamma_corr = epsilons[0] * N1;
  if (n > 1) gamma_corr += epsilons[1] * arr.weight(1);
  for (std::size_t i = 2; i < n; ++i) gamma_corr += 2.0 * epsilons[i] * arr.weight(i);
  out.gamma_bar = cc.gamma - inv_c * gamma_corr;

  out.precondition_ok = out.c > std::sqrt(2.0) * epsilons[0];
  out.dominance_holds =
      N1 > std::sqrt(out.alpha_bar * out.alpha_bar + out.beta_bar * out.beta_bar);
  out.uniqueness_holds = out.gamma_bar > 0.0;
  return out;
}

namespace {

Vec estimate_epsilons(const Arrangement& arr, const std::vector<Matrix>& clusters,
                      std::size_t num_probes, double c, Rng& rng) {
  if (clusters.size() != arr.count())
    throw std::invalid_argument("theory: cluster count does not match the arrangement");
  Vec eps(arr.count());
  for (std::size_t i = 0; i < arr.count(); ++i)
    eps[i] = uniformity_epsilon(clusters[i], arr.normal(i), c, num_probes, rng);
  return eps;
}

}  // namespace

DiscreteConditions discrete_conditions(const Arrangement& arr,
                                       const std::vector<Matrix>& clusters,
                                       std::size_t num_probes, Rng& rng) {
  const double c = average_height(arr.dim());
  const Vec eps = estimate_epsilons(arr, clusters, num_probes, c, rng);
  const CircumradiusResult R = circumradius_R(clusters, arr.dim());
  DiscreteConditions out = discrete_conditions_from(arr, eps, R.value);
  out.epsilon_is_estimate = true;
  return out;
}

LPConditions lp_conditions_from(const Arrangement& arr, const Vec& epsilons, double R,
                                const UnitVector& n0) {
  const std::size_t n = arr.count();
  if (epsilons.size() != n) throw std::invalid_argument("lp_conditions: epsilon count mismatch");
  if (n0.dim() != arr.dim()) throw std::invalid_argument("lp_conditions: n0 dimension mismatch");
  if (n < 2) throw std::invalid_argument("lp_conditions: need at least two hyperplanes");

  const ContinuousConditions cc = continuous_conditions(arr);
  LPConditions out;
  out.c = average_height(arr.dim());
  const double inv_c = 1.0 / out.c;
  const double eps1 = epsilons[0];

  Vec theta0(n);
  for (std::size_t i = 0; i < n; ++i) theta0[i] = principal_angle(arr.normal(i), n0);
  out.theta_10 = theta0[0];
  out.theta_min_1 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < n; ++i) out.theta_min_1 = std::min(out.theta_min_1, arr.angle(0, i));

  out.precondition_ok = out.c > std::sqrt(5.0) * eps1;
  const double sin10 = std::sin(out.theta_10);
  const double branch1 = std::sin(out.theta_min_1) - 2.0 * eps1;
  const double branch2 =
      std::sqrt(std::max(0.0, 1.0 - (inv_c * eps1) * (inv_c * eps1))) - 2.0 * inv_c * eps1;
  out.angle_ok = sin10 < std::min(branch1, branch2);

  double eps_w_tail = 0.0;
  for (std::size_t i = 1; i < n; ++i) eps_w_tail += epsilons[i] * arr.weight(i);

  // mu: the per-normal linear requirement; a non-positive denominator means
  // the certificate cannot separate that normal, reported as an infinite mu
  double sum_sin0 = 0.0;
  for (std::size_t i = 1; i < n; ++i) sum_sin0 += arr.weight(i) * std::sin(theta0[i]);
  out.mu = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < n; ++j) {
    double numer = sum_sin0 + inv_c * epsilons[j] * arr.weight(j);
    for (std::size_t i = 1; i < n; ++i) {
      if (i == j) continue;
      numer += arr.weight(i) * (2.0 * inv_c * epsilons[i] - std::sin(arr.angle(i, j)));
    }
    const double denom = std::sin(arr.angle(0, j)) - sin10 - 2.0 * inv_c * eps1;
    if (denom <= 0.0) {
      out.mu = std::numeric_limits<double>::infinity();
      break;
    }
    out.mu = std::max(out.mu, numer / denom);
  }

  const double a_term = cc.alpha + 2.0 * inv_c * eps_w_tail;
  const double b_term = cc.beta + inv_c * R + inv_c * eps_w_tail;
  out.nu = 2.0 * inv_c * eps1 * b_term + 2.0 * (sin10 + 2.0 * inv_c * eps1) * a_term;
  out.rho = a_term * a_term + b_term * b_term;
  const double cos10 = std::cos(out.theta_10);
  out.tau_coeff =
      cos10 * cos10 - 4.0 * inv_c * eps1 * sin10 - 5.0 * (inv_c * eps1) * (inv_c * eps1);

  if (out.tau_coeff > 0.0 && std::isfinite(out.mu)) {
    const double root =
        (out.nu + std::sqrt(out.nu * out.nu + 4.0 * out.rho * out.tau_coeff)) /
        (2.0 * out.tau_coeff);
    out.N1_threshold = std::max(out.mu, root);
  } else {
    out.N1_threshold = std::numeric_limits<double>::infinity();
  }
  out.holds = out.precondition_ok && out.angle_ok &&
              static_cast<double>(arr.weight(0)) > out.N1_threshold;
  return out;
}

LPConditions lp_conditions(const Arrangement& arr, const std::vector<Matrix>& clusters,
                           const UnitVector& n0, std::size_t num_probes, Rng& rng) {
  const double c = average_height(arr.dim());
  const Vec eps = estimate_epsilons(arr, clusters, num_probes, c, rng);
  const CircumradiusResult R = circumradius_R(clusters, arr.dim());
  LPConditions out = lp_conditions_from(arr, eps, R.value, n0);
  out.epsilon_is_estimate = true;
  return out;
}

namespace {

GridArgmin refine_on_sphere(Vec b, double value, const std::function<double(const Vec&)>& f,
                            double initial_step, std::size_t D) {
  double step = initial_step;
  for (int it = 0; it < 30; ++it) {
    bool improved = false;
    for (std::size_t d = 0; d < D && !improved; ++d) {
      Vec axis(D, 0.0);
      axis[d] = 1.0;
      Vec t = project_to_hyperplane(axis, b);
      const double tn = norm2(t);
      if (tn < 1e-12) continue;
      for (double& x : t) x /= tn;
      for (double sgn : {+1.0, -1.0}) {
        Vec cand(D);
        const double cs = std::cos(step), sn = std::sin(step) * sgn;
        for (std::size_t i = 0; i < D; ++i) cand[i] = cs * b[i] + sn * t[i];
        const double val = f(cand);
        if (val < value) {
          value = val;
          b = cand;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {UnitVector::normalized(b), value};
}

}  // namespace

GridArgmin sphere_grid_argmin(std::size_t D, const std::function<double(const Vec&)>& f,
                              std::size_t resolution) {
  if (D != 2 && D != 3)
    throw std::invalid_argument("sphere_grid_argmin: exhaustive mode supports D in {2, 3}");
  if (resolution < 16) throw std::invalid_argument("sphere_grid_argmin: resolution too small");

  struct Scored {
    double value;
    std::size_t index;
    Vec point;
  };
  std::vector<Scored> best;  // kept sorted, at most 10
  const auto offer = [&](double val, std::size_t idx, const Vec& p) {
    if (best.size() == 10 && val >= best.back().value) return;
    Scored s{val, idx, p};
    const auto pos = std::lower_bound(best.begin(), best.end(), s, [](const auto& a, const auto& b) {
      return a.value < b.value || (a.value == b.value && a.index < b.index);
    });
    best.insert(pos, std::move(s));
    if (best.size() > 10) best.pop_back();
  };

  if (D == 2) {
    for (std::size_t i = 0; i < resolution; ++i) {
      const double phi = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(resolution);
      const Vec p{std::cos(phi), std::sin(phi)};
      offer(f(p), i, p);
    }
  } else {
    constexpr double kGoldenAngle = 2.399963229728653;
    for (std::size_t i = 0; i < resolution; ++i) {
      const double z =
          1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(resolution);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = kGoldenAngle * static_cast<double>(i);
      const Vec p{r * std::cos(phi), r * std::sin(phi), z};
      offer(f(p), i, p);
    }
  }

  const double spacing = D == 2 ? 2.0 * M_PI / static_cast<double>(resolution)
                                : std::sqrt(4.0 * M_PI / static_cast<double>(resolution));
  GridArgmin out;
  double best_val = std::numeric_limits<double>::infinity();
  for (const Scored& s : best) {
    GridArgmin r = refine_on_sphere(s.point, s.value, f, spacing, D);
    if (r.value < best_val) {
      best_val = r.value;
      out = std::move(r);
    }
  }
  return out;
}

GridArgmin circle_grid_argmin(const UnitVector& span_a, const UnitVector& span_b,
                              const std::function<double(const Vec&)>& f,
                              std::size_t resolution) {
  if (span_a.dim() != span_b.dim())
    throw std::invalid_argument("circle_grid_argmin: dimension mismatch");
  const std::size_t D = span_a.dim();
  const Vec e1(span_a.coords());
  Vec e2 = project_to_hyperplane(span_b.span(), e1);
  const double n2 = norm2(e2);
  if (n2 < 1e-10)
    throw std::invalid_argument("circle_grid_argmin: spanning directions are parallel");
  for (double& x : e2) x /= n2;

  const auto lift = [&](double cphi, double sphi) {
    Vec p(D);
    for (std::size_t d = 0; d < D; ++d) p[d] = cphi * e1[d] + sphi * e2[d];
    return p;
  };

  double best_val = std::numeric_limits<double>::infinity();
  double best_phi = 0.0;
  for (std::size_t i = 0; i < resolution; ++i) {
    const double phi = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(resolution);
    const double val = f(lift(std::cos(phi), std::sin(phi)));
    if (val < best_val) {
      best_val = val;
      best_phi = phi;
    }
  }
  double step = 2.0 * M_PI / static_cast<double>(resolution);
  for (int it = 0; it < 40; ++it) {
    bool improved = false;
    for (double sgn : {+1.0, -1.0}) {
      const double phi = best_phi + sgn * step;
      const double val = f(lift(std::cos(phi), std::sin(phi)));
      if (val < best_val) {
        best_val = val;
        best_phi = phi;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return {UnitVector::normalized(lift(std::cos(best_phi), std::sin(best_phi))), best_val};
}

}  // namespace dpcp
