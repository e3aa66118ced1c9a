#include "doctest.h"

#include <cmath>

#include "dpcp/arrangement.hpp"
#include "dpcp/theory.hpp"

using namespace dpcp;

TEST_CASE("cluster sizes: balanced, unbalanced, single") {
  CHECK(cluster_sizes(2, 600, 1.0) == std::vector<int>{300, 300});
  // N1 = round(600/1.8) = 333, N2 = round(0.8 * 333) = 266, residue lifts N1
  CHECK(cluster_sizes(2, 600, 0.8) == std::vector<int>{334, 266});
  CHECK(cluster_sizes(1, 300, 0.6) == std::vector<int>{300});
}

TEST_CASE("cluster sizes: exact sum and ordering across the grid") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (double alpha : {0.6, 0.8, 1.0})
      for (std::size_t total : {n * 10, n * 300, std::size_t{10000}}) {
        const auto sizes = cluster_sizes(n, total, alpha);
        long long sum = 0;
        for (int s : sizes) sum += s;
        CHECK(sum == static_cast<long long>(total));
        for (std::size_t i = 0; i + 1 < n; ++i) CHECK(sizes[i] >= sizes[i + 1]);
      }
}

TEST_CASE("cluster sizes: too-small cluster is an error") {
  CHECK_THROWS(cluster_sizes(3, 12, 0.6, 10));  // trailing cluster below D-1 points
}

TEST_CASE("random arrangement: determinism and separation") {
  Rng r1(77), r2(77);
  const Arrangement a = random_arrangement(4, 2, r1);
  const Arrangement b = random_arrangement(4, 2, r2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t d = 0; d < 4; ++d) CHECK(a.normal(i)[d] == b.normal(i)[d]);
  CHECK(a.angle(0, 1) > 1e-3);

  Rng r3(5);
  const Arrangement single = random_arrangement(3, 1, r3);
  CHECK(single.count() == 1);
  CHECK(norm2(single.normal(0).span()) == doctest::Approx(1.0));
}

TEST_CASE("random arrangement: pairwise cosine matches the unit-Gaussian mean") {
  // |cos angle| between independent random directions in R^30 averages to
  // the mean of |x_1| on S^29
  const std::size_t D = 30;
  Rng rng(2024);
  double sum = 0.0;
  const int draws = 10000;
  for (int t = 0; t < draws; ++t) {
    const Arrangement arr = random_arrangement(D, 2, rng);
    sum += std::cos(arr.angle(0, 1));
  }
  const double expected =
      std::exp(std::lgamma(D / 2.0) - std::lgamma((D + 1) / 2.0)) / std::sqrt(M_PI);
  CHECK(sum / draws == doctest::Approx(expected).epsilon(0.03));
}

TEST_CASE("equiangular family: the 60-degree point and the formula") {
  const Arrangement at_third = equiangular_arrangement(1.0 / 3.0);
  CHECK(std::cos(at_third.angle(0, 1)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(equiangular_angle(1.0 / 3.0) == doctest::Approx(M_PI / 3.0).epsilon(1e-12));

  // a -> 0 approaches the orthogonal arrangement
  const Arrangement near_zero = equiangular_arrangement(1e-9);
  CHECK(near_zero.angle(0, 1) == doctest::Approx(M_PI / 2).epsilon(1e-6));
  CHECK(std::abs(near_zero.normal(0)[0]) == doctest::Approx(1.0).epsilon(1e-6));

  // a = 0.2: plug into the closed form and cross-check the built normals
  const double a = 0.2;
  const Arrangement arr = equiangular_arrangement(a);
  const double expect_cos = (2 * a + 3 * a * a) / (1 + 2 * a + 3 * a * a);
  CHECK(expect_cos == doctest::Approx(0.52 / 1.52).epsilon(1e-12));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(dot(arr.normal(i).span(), arr.normal(j).span()) ==
            doctest::Approx(expect_cos).epsilon(1e-12));

  CHECK_THROWS(equiangular_arrangement(0.0));
  CHECK_THROWS(equiangular_arrangement(-1.0));
}

TEST_CASE("equiangular family: all pairwise angles equal across a") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const double a = 1e-3 + 5.0 * rng.uniform();
    const Arrangement arr = equiangular_arrangement(a);
    const double t01 = arr.angle(0, 1);
    CHECK(std::abs(arr.angle(0, 2) - t01) <= 1e-12);
    CHECK(std::abs(arr.angle(1, 2) - t01) <= 1e-12);
  }
}

TEST_CASE("synthesize: noiseless points lie exactly on their hyperplanes") {
  Rng rng(101);
  const Arrangement arr = random_arrangement(4, 1, rng);
  SynthConfig cfg;
  cfg.D = 4;
  cfg.n = 1;
  cfg.total_points = 200;
  cfg.noise_sigma = 0.0;
  cfg.outlier_ratio = 0.0;
  const PointCloud cloud = synthesize(arr, cfg, rng);
  CHECK(cloud.size() == 200);
  for (std::size_t j = 0; j < cloud.size(); ++j) {
    CHECK(cloud.labels[j] == 1);
    CHECK(std::abs(dot(cloud.points.col(j), arr.normal(0).span())) <= 1e-12);
    CHECK(norm2(cloud.points.col(j)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("synthesize: residual scale matches the derived noise model") {
  // after normalization the residual is sigma*|g| / ||in-plane part||, and
  // 1/||p||^2 for a (D-1)-dimensional Gaussian has mean 1/(D-3)
  const std::size_t D = 30;
  Rng rng(555);
  const Arrangement arr = random_arrangement(D, 1, rng);
  SynthConfig cfg;
  cfg.D = D;
  cfg.n = 1;
  cfg.total_points = 10000;
  cfg.noise_sigma = 0.01;
  cfg.outlier_ratio = 0.0;
  const PointCloud cloud = synthesize(arr, cfg, rng);
  double ms = 0.0;
  for (std::size_t j = 0; j < cloud.size(); ++j) {
    const double r = dot(cloud.points.col(j), arr.normal(0).span());
    ms += r * r;
  }
  const double rms = std::sqrt(ms / static_cast<double>(cloud.size()));
  const double expected = cfg.noise_sigma / std::sqrt(static_cast<double>(D - 3));
  CHECK(rms == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("synthesize: outlier bookkeeping and label counts") {
  Rng rng(9);
  const Arrangement arr = random_arrangement(3, 1, rng);
  SynthConfig cfg;
  cfg.D = 3;
  cfg.n = 1;
  cfg.total_points = 300;
  cfg.outlier_ratio = 0.5;
  const PointCloud cloud = synthesize(arr, cfg, rng);
  std::size_t outliers = 0;
  for (int l : cloud.labels)
    if (l == 0) ++outliers;
  CHECK(outliers == 300);  // half of the final dataset
  CHECK(cloud.size() == 600);
}

TEST_CASE("synthesize: same seed gives a bit-identical cloud") {
  SynthConfig cfg;
  cfg.D = 5;
  cfg.n = 3;
  cfg.total_points = 120;
  cfg.seed = 31337;
  Rng ra(cfg.seed), rb(cfg.seed);
  const Arrangement arr_a = random_arrangement(5, 3, ra);
  const Arrangement arr_b = random_arrangement(5, 3, rb);
  const PointCloud a = synthesize(arr_a, cfg, ra);
  const PointCloud b = synthesize(arr_b, cfg, rb);
  REQUIRE(a.size() == b.size());
  CHECK(a.labels == b.labels);
  CHECK(a.points.data() == b.points.data());
}
