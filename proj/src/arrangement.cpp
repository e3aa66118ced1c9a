#include "dpcp/arrangement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dpcp {

Arrangement::Arrangement(std::vector<UnitVector> normals, std::vector<int> weights)
    : normals_(std::move(normals)), weights_(std::move(weights)) {
  if (normals_.empty()) throw std::invalid_argument("Arrangement: needs at least one normal");
  if (weights_.size() != normals_.size())
    throw std::invalid_argument("Arrangement: weight count mismatch");
  const std::size_t D = normals_.front().dim();
  if (D < 2) throw std::invalid_argument("Arrangement: dimension must be at least 2");
  for (const auto& b : normals_) {
    if (b.dim() != D) throw std::invalid_argument("Arrangement: inconsistent dimensions");
    if (b.is_zero()) throw std::invalid_argument("Arrangement: zero normal");
  }
  for (std::size_t i = 0; i + 1 < weights_.size(); ++i)
    if (weights_[i] < weights_[i + 1])
      throw std::invalid_argument("Arrangement: weights must be non-increasing");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("Arrangement: weights must be positive");
  for (std::size_t i = 0; i < normals_.size(); ++i)
    for (std::size_t j = i + 1; j < normals_.size(); ++j)
      if (angle(i, j) <= 1e-6)
        throw std::invalid_argument("Arrangement: normals " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide up to sign");
}

double Arrangement::angle(std::size_t i, std::size_t j) const {
  return principal_angle(normals_[i], normals_[j]);
}

void SynthConfig::validate() const {
  if (D < 2) throw std::invalid_argument("SynthConfig: D must be at least 2");
  if (n < 1) throw std::invalid_argument("SynthConfig: n must be at least 1");
  if (!(balance_alpha > 0.0 && balance_alpha <= 1.0))
    throw std::invalid_argument("SynthConfig: balance_alpha must lie in (0,1]");
  if (!(noise_sigma >= 0.0)) throw std::invalid_argument("SynthConfig: noise_sigma must be >= 0");
  if (!(outlier_ratio >= 0.0 && outlier_ratio < 1.0))
    throw std::invalid_argument("SynthConfig: outlier_ratio must lie in [0,1)");
}

std::vector<int> cluster_sizes(std::size_t n, std::size_t total, double balance_alpha,
                               std::size_t D) {
  if (n < 1) throw std::invalid_argument("cluster_sizes: n must be at least 1");
  if (total < n) throw std::invalid_argument("cluster_sizes: total smaller than n");
  if (!(balance_alpha > 0.0 && balance_alpha <= 1.0))
    throw std::invalid_argument("cluster_sizes: balance_alpha must lie in (0,1]");

  double geom = 0.0;
  for (std::size_t i = 0; i < n; ++i) geom += std::pow(balance_alpha, static_cast<double>(i));
  const double n1_real = static_cast<double>(total) / geom;

  std::vector<int> sizes(n);
  sizes[0] = static_cast<int>(std::lround(n1_real));
  long long sum = sizes[0];
  for (std::size_t i = 1; i < n; ++i) {
    sizes[i] = static_cast<int>(
        std::lround(std::pow(balance_alpha, static_cast<double>(i)) * sizes[0]));
    sum += sizes[i];
  }
  // rounding residue goes to N_1; when shrinking N_1 would break dominance,
  // the deficit comes out of the smallest cluster instead
  long long residue = static_cast<long long>(total) - sum;
  while (residue > 0) {
    ++sizes[0];
    --residue;
  }
  while (residue < 0) {
    if (n == 1 || sizes[0] - 1 >= sizes[1])
      --sizes[0];
    else
      --sizes[n - 1];
    ++residue;
  }
  for (int s : sizes)
    if (s < static_cast<int>(D) - 1)
      throw std::invalid_argument(
          "cluster_sizes: a cluster of " + std::to_string(s) +
          " points cannot define a hyperplane in dimension " + std::to_string(D));
  return sizes;
}

namespace {

UnitVector random_unit(std::size_t D, Rng& rng) {
  Vec g(D);
  for (double& x : g) x = rng.gaussian();
  UnitVector u = UnitVector::normalized(g);
  if (u.is_zero()) throw std::runtime_error("random_unit: degenerate Gaussian draw");
  return u;
}

}  // namespace

Arrangement random_arrangement(std::size_t D, std::size_t n, Rng& rng) {
  if (D < 2 || n < 1) throw std::invalid_argument("random_arrangement: need D >= 2, n >= 1");
  constexpr double kMinAngle = 1e-3;
  std::vector<UnitVector> normals;
  int redraws = 0;
  while (normals.size() < n) {
    UnitVector cand = random_unit(D, rng);
    bool separated = true;
    for (const auto& b : normals)
      if (principal_angle(cand, b) < kMinAngle) {
        separated = false;
        break;
      }
    if (separated) {
      normals.push_back(std::move(cand));
    } else if (++redraws > 1000) {
      throw std::runtime_error("random_arrangement: exceeded 1000 redraws");
    }
  }
  return Arrangement(std::move(normals), std::vector<int>(n, 1));
}

double equiangular_angle(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("equiangular_angle: a must be positive");
  const double c = (2.0 * a + 3.0 * a * a) / (1.0 + 2.0 * a + 3.0 * a * a);
  return std::acos(c);
}

Arrangement equiangular_arrangement(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("equiangular_arrangement: a must be positive");
  const double mu = 1.0 / std::sqrt((1.0 + a) * (1.0 + a) + 2.0 * a * a);
  std::vector<UnitVector> normals;
  for (int i = 0; i < 3; ++i) {
    Vec b(3, mu * a);
    b[i] = mu * (1.0 + a);
    normals.emplace_back(UnitVector::normalized(b));
  }
  return Arrangement(std::move(normals), {1, 1, 1});
}

PointCloud synthesize(const Arrangement& arr, const SynthConfig& cfg, Rng& rng) {
  cfg.validate();
  if (arr.dim() != cfg.D)
    throw std::invalid_argument("synthesize: arrangement dimension does not match config");
  if (arr.count() != cfg.n)
    throw std::invalid_argument("synthesize: arrangement size does not match config");

  const std::size_t D = cfg.D;
  const std::vector<int> sizes = cluster_sizes(cfg.n, cfg.effective_total(), cfg.balance_alpha, D);

  std::size_t n_inlier = 0;
  for (int s : sizes) n_inlier += static_cast<std::size_t>(s);
  // outlier_ratio measures outliers against the final dataset size
  const std::size_t n_outlier =
      cfg.outlier_ratio == 0.0
          ? 0
          : static_cast<std::size_t>(std::ceil(cfg.outlier_ratio * static_cast<double>(n_inlier) /
                                               (1.0 - cfg.outlier_ratio)));
  const std::size_t N = n_inlier + n_outlier;

  Matrix pts(D, N);
  std::vector<int> labels(N, 0);
  std::size_t col = 0;
  for (std::size_t i = 0; i < arr.count(); ++i) {
    const auto& b = arr.normal(i);
    for (int p = 0; p < sizes[i]; ++p, ++col) {
      Vec g(D);
      for (double& x : g) x = rng.gaussian();
      Vec x = project_to_hyperplane(g, b.span());
      const double noise = cfg.noise_sigma > 0.0 ? cfg.noise_sigma * rng.gaussian() : 0.0;
      for (std::size_t d = 0; d < D; ++d) x[d] += noise * b[d];
      // normalization last keeps the noise direction exactly orthogonal
      Vec u = normalize(x);
      auto dst = pts.col(col);
      for (std::size_t d = 0; d < D; ++d) dst[d] = u[d];
      labels[col] = static_cast<int>(i) + 1;
    }
  }
  for (std::size_t p = 0; p < n_outlier; ++p, ++col) {
    Vec g(D);
    for (double& x : g) x = rng.gaussian();
    Vec u = normalize(g);
    auto dst = pts.col(col);
    for (std::size_t d = 0; d < D; ++d) dst[d] = u[d];
    labels[col] = 0;
  }

  // Fisher-Yates column shuffle, labels permuted identically
  for (std::size_t j = N; j-- > 1;) {
    const std::size_t k = static_cast<std::size_t>(rng.below(j + 1));
    if (k != j) {
      for (std::size_t d = 0; d < D; ++d) std::swap(pts(d, j), pts(d, k));
      std::swap(labels[j], labels[k]);
    }
  }
  return PointCloud{std::move(pts), std::move(labels)};
}

}  // namespace dpcp
