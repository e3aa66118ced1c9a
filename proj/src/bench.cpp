#include "dpcp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "dpcp/arrangement.hpp"
#include "dpcp/csv.hpp"

namespace dpcp {

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth, std::size_t n) {
  if (predicted.size() != truth.size())
    throw std::invalid_argument("accuracy: label vectors differ in length");
  if (n == 0 || n > 6) throw std::invalid_argument("accuracy: n must lie in 1..6");

  std::size_t inliers = 0;
  for (int t : truth)
    if (t != 0) ++inliers;
  if (inliers == 0) return 1.0;  // vacuous: no inlier can be mislabeled

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t best = 0;
  do {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < truth.size(); ++j) {
      if (truth[j] == 0) continue;
      const int p = predicted[j];
      if (p >= 1 && p <= static_cast<int>(n) && perm[static_cast<std::size_t>(p) - 1] == truth[j])
        ++hits;
    }
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(inliers);
}

const char* pipeline_name(Pipeline p) { return p == Pipeline::kShl ? "shl" : "ihl"; }

std::optional<Pipeline> parse_pipeline(const std::string& name) {
  if (name == "shl") return Pipeline::kShl;
  if (name == "ihl") return Pipeline::kIhl;
  return std::nullopt;
}

void GridConfig::validate() const {
  if (D_values.empty() || n_values.empty() || alpha_values.empty() || outlier_ratios.empty())
    throw std::invalid_argument("GridConfig: every parameter list must be non-empty");
  if (trials == 0) throw std::invalid_argument("GridConfig: trials must be at least 1");
  if (methods.empty()) throw std::invalid_argument("GridConfig: no methods selected");
  if (jobs == 0) throw std::invalid_argument("GridConfig: jobs must be at least 1");
}

namespace {

// Trial data seeds hash the cell content, not its position in the grid.
std::uint64_t cell_seed(std::uint64_t master, std::size_t D, std::size_t n, double alpha,
                        double ratio, std::size_t trial) {
  std::uint64_t h = derive_seed(master, static_cast<std::uint64_t>(D));
  h = derive_seed(h, static_cast<std::uint64_t>(n));
  h = derive_seed(h, std::bit_cast<std::uint64_t>(alpha));
  h = derive_seed(h, std::bit_cast<std::uint64_t>(ratio));
  return derive_seed(h, static_cast<std::uint64_t>(trial));
}

struct TrialTask {
  std::size_t row_index;
  std::size_t D, n;
  double alpha, ratio;
  std::size_t method_index;
  std::size_t trial;
};

struct TrialOutcome {
  double acc = 0.0;
  double seconds = 0.0;
  bool failed = false;
  std::string message;
};

}  // namespace

GridResult run_grid(const GridConfig& cfg) {
  cfg.validate();

  GridResult result;
  std::vector<TrialTask> tasks;
  for (std::size_t D : cfg.D_values)
    for (std::size_t n : cfg.n_values)
      for (double alpha : cfg.alpha_values)
        for (double ratio : cfg.outlier_ratios)
          for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
            GridRow row;
            row.D = D;
            row.n = n;
            row.alpha = alpha;
            row.outlier_ratio = ratio;
            row.method = estimator_name(cfg.methods[m].kind);
            row.pipeline = pipeline_name(cfg.pipeline);
            row.trials = cfg.trials;
            const std::size_t row_index = result.rows.size();
            result.rows.push_back(row);
            for (std::size_t t = 0; t < cfg.trials; ++t)
              tasks.push_back({row_index, D, n, alpha, ratio, m, t});
          }

  std::vector<TrialOutcome> outcomes(tasks.size());
  const auto run_task = [&](std::size_t ti) {
    const TrialTask& task = tasks[ti];
    TrialOutcome& outcome = outcomes[ti];
    try {
      const std::uint64_t data_seed =
          cell_seed(cfg.master_seed, task.D, task.n, task.alpha, task.ratio, task.trial);
      Rng data_rng(data_seed);
      const Arrangement arr = random_arrangement(task.D, task.n, data_rng);
      SynthConfig synth;
      synth.D = task.D;
      synth.n = task.n;
      synth.balance_alpha = task.alpha;
      synth.noise_sigma = cfg.noise_sigma;
      synth.outlier_ratio = task.ratio;
      const PointCloud cloud = synthesize(arr, synth, data_rng);

      const NormalEstimator& est = cfg.methods[task.method_index];
      // method-specific randomness is independent of the data stream
      const std::uint64_t method_seed = derive_seed(data_seed, 1000 + task.method_index);

      const auto start = std::chrono::steady_clock::now();
      ClusterResult clusters;
      if (cfg.pipeline == Pipeline::kShl) {
        Rng method_rng(method_seed);
        clusters = shl(cloud.points, task.n, est, method_rng);
      } else {
        clusters = ihl_restarts(cloud.points, task.n, est, cfg.ihl_eps, cfg.ihl_sweeps,
                                cfg.ihl_restarts, method_seed);
      }
      const auto stop = std::chrono::steady_clock::now();
      outcome.acc = accuracy(clusters.labels, cloud.labels, task.n);
      outcome.seconds = std::chrono::duration<double>(stop - start).count();
    } catch (const std::exception& e) {
      outcome.failed = true;
      outcome.acc = 0.0;
      outcome.message = e.what();
    }
  };

  if (cfg.jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const std::size_t count = std::min(cfg.jobs, tasks.size());
    workers.reserve(count);
    for (std::size_t w = 0; w < count; ++w)
      workers.emplace_back([&] {
        while (true) {
          const std::size_t ti = next.fetch_add(1);
          if (ti >= tasks.size()) break;
          run_task(ti);
        }
      });
    for (auto& th : workers) th.join();
  }

  // keyed aggregation: outcome slots are ordered by task construction, so
  // parallel and serial runs reduce identically
  std::vector<Vec> accs(result.rows.size());
  std::vector<double> times(result.rows.size(), 0.0);
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    const TrialTask& task = tasks[ti];
    accs[task.row_index].push_back(outcomes[ti].acc);
    times[task.row_index] += outcomes[ti].seconds;
    if (outcomes[ti].failed) {
      ++result.rows[task.row_index].errors;
      result.error_messages.push_back(result.rows[task.row_index].method + " trial " +
                                      std::to_string(task.trial) + ": " + outcomes[ti].message);
    }
  }
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    GridRow& row = result.rows[r];
    const Vec& a = accs[r];
    double mean = 0.0;
    for (double v : a) mean += v;
    mean /= static_cast<double>(a.size());
    double var = 0.0;
    for (double v : a) var += (v - mean) * (v - mean);
    var /= static_cast<double>(a.size());
    row.acc_mean = mean;
    row.acc_std = std::sqrt(var);
    row.runtime_mean_s = cfg.record_timings ? times[r] / static_cast<double>(a.size()) : 0.0;
  }
  return result;
}

void write_grid_csv(std::ostream& os, const GridResult& result) {
  os << "D,n,alpha,outlier_ratio,method,pipeline,trials,acc_mean,acc_std,runtime_mean_s\n";
  for (const GridRow& row : result.rows) {
    os << row.D << ',' << row.n << ',' << format_double(row.alpha) << ','
       << format_double(row.outlier_ratio) << ',' << row.method << ',' << row.pipeline << ','
       << row.trials << ',' << format_double(row.acc_mean) << ',' << format_double(row.acc_std)
       << ',' << format_double(row.runtime_mean_s) << '\n';
  }
}

}  // namespace dpcp
