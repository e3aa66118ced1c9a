#pragma once

#include <cstdint>
#include <vector>

#include "dpcp/numerics.hpp"
#include "dpcp/rng.hpp"

// Ground-truth hyperplane-arrangement model and the synthetic data
// generator used by the benchmark harness.

namespace dpcp {

/// A union of hyperplanes through the origin: n unit normals with positive
/// integer weights sorted non-increasing (the first hyperplane is dominant).
/// Normals must be pairwise distinct up to sign.
class Arrangement {
 public:
  Arrangement(std::vector<UnitVector> normals, std::vector<int> weights);

  std::size_t dim() const { return normals_.front().dim(); }
  std::size_t count() const { return normals_.size(); }
  const UnitVector& normal(std::size_t i) const { return normals_[i]; }
  const std::vector<UnitVector>& normals() const { return normals_; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }

  /// Principal angle between normals i and j.
  double angle(std::size_t i, std::size_t j) const;

 private:
  std::vector<UnitVector> normals_;
  std::vector<int> weights_;
};

struct SynthConfig {
  std::size_t D = 3;
  std::size_t n = 2;
  std::size_t total_points = 0;  // 0 means the 300*n default
  double balance_alpha = 1.0;    // in (0, 1]
  double noise_sigma = 0.01;
  double outlier_ratio = 0.10;   // fraction of the final dataset
  std::uint64_t seed = 0;

  std::size_t effective_total() const { return total_points == 0 ? 300 * n : total_points; }
  void validate() const;
};

/// Point cloud with one unit-norm point per column. Labels, when present,
/// are 1-based cluster ids with 0 marking outliers.
struct PointCloud {
  Matrix points;
  std::vector<int> labels;  // empty when unlabeled

  std::size_t dim() const { return points.rows(); }
  std::size_t size() const { return points.cols(); }
  bool has_labels() const { return !labels.empty(); }
};

/// Cluster sizes N_1 >= ... >= N_n with N_i ~ alpha^(i-1) N_1 and exact sum.
/// N_1 gets the rounding residue so dominance is preserved. Throws if any
/// cluster ends up too small to pin down a hyperplane in dimension D.
std::vector<int> cluster_sizes(std::size_t n, std::size_t total, double balance_alpha,
                               std::size_t D = 2);

/// n random unit normals in dimension D, redrawn until pairwise principal
/// angles exceed 1e-3 rad. Weights are left at 1; callers set their own.
Arrangement random_arrangement(std::size_t D, std::size_t n, Rng& rng);

/// The three-plane equiangular family in R^3 parameterized by a > 0:
/// b_i = mu (1+a, a, a) and its coordinate rotations, all pairwise angles
/// equal with cos(theta) = (2a + 3a^2) / (1 + 2a + 3a^2).
Arrangement equiangular_arrangement(double a);

/// Pairwise angle of equiangular_arrangement(a), in radians.
double equiangular_angle(double a);

/// Synthesize a labeled point cloud: per cluster, Gaussian points projected
/// into the hyperplane with Gaussian noise of sigma along the normal, then
/// normalized to the sphere; outliers are normalized ambient Gaussians.
/// Column order is shuffled by the rng.
PointCloud synthesize(const Arrangement& arr, const SynthConfig& cfg, Rng& rng);

}  // namespace dpcp
