#include "dpcp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dpcp {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr double kZeroResidualTol = 1e-8;

// Variable numbering, which is also the Bland order:
//   0 .. D-1        positive b parts
//   D .. 2D-1       negative b parts
//   2D + 2j         u_j   (positive residual part of column j)
//   2D + 2j + 1     v_j   (negative residual part of column j)
//
// Constraint rows: j = 0..N-1 residual rows (y_j.b - u_j + v_j = 0),
// row N the slice row (w_hat.b = 1). The basis always consists of k b-parts
// plus one sign-matched residual variable per row outside a k-row set S
// (the slice row is always in S), so every solve against the basis reduces
// to a k x k core with k <= D. The core inverse is rebuilt from the
// original data at every pivot, which keeps the iteration numerically
// fresh without incremental-update bookkeeping.
class SliceSimplex {
 public:
  SliceSimplex(const Matrix& Y, const UnitVector& anchor)
      : Y_(Y), w_(anchor.coords()), D_(Y.rows()), N_(Y.cols()), m_(N_ + 1) {
    uv_state_.assign(N_, 0);
    init_basis();
  }

  L1SliceSolution run() {
    const std::size_t max_pivots = 50 * (N_ + D_);
    std::size_t pivots = 0;
    while (true) {
      compute_multipliers();
      const std::size_t entering = pick_entering();
      if (entering == kNone) break;
      if (++pivots > max_pivots)
        throw std::runtime_error("solve_l1_slice: pivot cap exceeded (cycling guard)");
      pivot(entering);
    }
    return extract(pivots);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const Matrix& Y_;
  const Vec& w_;
  std::size_t D_, N_, m_;

  // basis description
  std::vector<std::size_t> basic_b_;  // b-part variable ids, one per row of S
  std::vector<std::size_t> S_;        // rows covered by b-parts (slice row always present)
  std::vector<int> uv_state_;         // per residual row: 0 none (row in S), +1 u basic, -1 v basic

  std::vector<double> core_inv_;      // k x k, column-major
  Vec z_b_;                           // values of the basic b-parts
  Vec unit_val_;                      // per row: value of its basic residual variable
  Vec pi_;                            // simplex multipliers

  double col_entry(std::size_t bvar, std::size_t row) const {
    const double sign = bvar < D_ ? 1.0 : -1.0;
    const std::size_t d = bvar < D_ ? bvar : bvar - D_;
    return sign * (row < N_ ? Y_(d, row) : w_[d]);
  }

  void init_basis() {
    std::size_t best = 0;
    for (std::size_t d = 1; d < D_; ++d)
      if (std::abs(w_[d]) > std::abs(w_[best])) best = d;
    if (std::abs(w_[best]) < 1e-14)
      throw std::invalid_argument("solve_l1_slice: anchor is numerically zero");
    basic_b_ = {w_[best] > 0.0 ? best : D_ + best};
    S_ = {N_};
    rebuild_core();
    refresh_values();
    for (std::size_t j = 0; j < N_; ++j) {
      const double r = residual(j);
      uv_state_[j] = r >= 0.0 ? +1 : -1;
    }
    refresh_values();
  }

  double residual(std::size_t row) const {
    double r = 0.0;
    for (std::size_t t = 0; t < basic_b_.size(); ++t)
      r += col_entry(basic_b_[t], row) * z_b_[t];
    return r;
  }

  void rebuild_core() {
    const std::size_t k = basic_b_.size();
    std::vector<double> core(k * k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < k; ++r) core[c * k + r] = col_entry(basic_b_[c], S_[r]);
    core_inv_.assign(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) core_inv_[i * k + i] = 1.0;
    // Gauss-Jordan with partial pivoting on the gathered core
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      for (std::size_t r = c + 1; r < k; ++r)
        if (std::abs(core[c * k + r]) > std::abs(core[c * k + p])) p = r;
      if (std::abs(core[c * k + p]) < 1e-13)
        throw std::runtime_error("solve_l1_slice: singular basis core");
      if (p != c)
        for (std::size_t cc = 0; cc < k; ++cc) {
          std::swap(core[cc * k + p], core[cc * k + c]);
          std::swap(core_inv_[cc * k + p], core_inv_[cc * k + c]);
        }
      const double inv = 1.0 / core[c * k + c];
      for (std::size_t cc = 0; cc < k; ++cc) {
        core[cc * k + c] *= inv;
        core_inv_[cc * k + c] *= inv;
      }
      for (std::size_t r = 0; r < k; ++r) {
        if (r == c) continue;
        const double f = core[c * k + r];
        if (f == 0.0) continue;
        for (std::size_t cc = 0; cc < k; ++cc) {
          core[cc * k + r] -= f * core[cc * k + c];
          core_inv_[cc * k + r] -= f * core_inv_[cc * k + c];
        }
      }
    }
  }

  // core_inv * a_S
  Vec core_solve(const Vec& a_S) const {
    const std::size_t k = basic_b_.size();
    Vec z(k, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
      const double f = a_S[c];
      if (f == 0.0) continue;
      for (std::size_t r = 0; r < k; ++r) z[r] += core_inv_[c * k + r] * f;
    }
    return z;
  }

  // core_inv^T * g
  Vec core_solve_transpose(const Vec& g) const {
    const std::size_t k = basic_b_.size();
    Vec z(k, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < k; ++c) s += core_inv_[r * k + c] * g[c];
      z[r] = s;
    }
    return z;
  }

  void refresh_values() {
    const std::size_t k = basic_b_.size();
    Vec rhs_S(k, 0.0);
    for (std::size_t r = 0; r < k; ++r)
      if (S_[r] == N_) rhs_S[r] = 1.0;
    z_b_ = core_solve(rhs_S);
    unit_val_.assign(N_, 0.0);
    for (std::size_t j = 0; j < N_; ++j) {
      if (uv_state_[j] == 0) continue;
      const double r = residual(j);
      unit_val_[j] = uv_state_[j] > 0 ? r : -r;
    }
  }

  void compute_multipliers() {
    const std::size_t k = basic_b_.size();
    pi_.assign(m_, 0.0);
    for (std::size_t j = 0; j < N_; ++j)
      if (uv_state_[j] != 0) pi_[j] = uv_state_[j] > 0 ? -1.0 : 1.0;
    Vec g(k, 0.0);
    for (std::size_t t = 0; t < k; ++t) {
      double s = 0.0;
      for (std::size_t j = 0; j < N_; ++j)
        if (uv_state_[j] != 0) s += col_entry(basic_b_[t], j) * pi_[j];
      g[t] = -s;
    }
    const Vec pi_S = core_solve_transpose(g);
    for (std::size_t r = 0; r < k; ++r) pi_[S_[r]] = pi_S[r];
  }

  bool b_part_basic(std::size_t var) const {
    return std::find(basic_b_.begin(), basic_b_.end(), var) != basic_b_.end();
  }

  std::size_t pick_entering() const {
    // Bland: first variable id with negative reduced cost
    Vec t(D_);  // pi . column(p_d); reduced costs are -t for p_d, +t for q_d
    for (std::size_t d = 0; d < D_; ++d) {
      double s = w_[d] * pi_[N_];
      for (std::size_t j = 0; j < N_; ++j) s += Y_(d, j) * pi_[j];
      t[d] = s;
    }
    for (std::size_t d = 0; d < D_; ++d)
      if (!b_part_basic(d) && -t[d] < -kReducedCostTol) return d;
    for (std::size_t d = 0; d < D_; ++d)
      if (!b_part_basic(D_ + d) && t[d] < -kReducedCostTol) return D_ + d;
    for (std::size_t j = 0; j < N_; ++j) {
      if (uv_state_[j] > 0) {
        if (1.0 - pi_[j] < -kReducedCostTol) return 2 * D_ + 2 * j + 1;  // v_j
      } else if (uv_state_[j] < 0) {
        if (1.0 + pi_[j] < -kReducedCostTol) return 2 * D_ + 2 * j;  // u_j
      } else {
        if (1.0 + pi_[j] < -kReducedCostTol) return 2 * D_ + 2 * j;
        if (1.0 - pi_[j] < -kReducedCostTol) return 2 * D_ + 2 * j + 1;
      }
    }
    return kNone;
  }

  void pivot(std::size_t entering) {
    const std::size_t k = basic_b_.size();

    // full entering column
    Vec a(m_, 0.0);
    bool entering_is_b = entering < 2 * D_;
    if (entering_is_b) {
      for (std::size_t row = 0; row < m_; ++row) a[row] = col_entry(entering, row);
    } else {
      const std::size_t j = (entering - 2 * D_) / 2;
      a[j] = (entering - 2 * D_) % 2 == 0 ? -1.0 : 1.0;
    }

    // direction through the basis
    Vec a_S(k);
    for (std::size_t r = 0; r < k; ++r) a_S[r] = a[S_[r]];
    const Vec d_b = core_solve(a_S);
    Vec coupled(m_, 0.0);
    for (std::size_t t = 0; t < k; ++t) {
      if (d_b[t] == 0.0) continue;
      for (std::size_t row = 0; row < m_; ++row)
        coupled[row] += col_entry(basic_b_[t], row) * d_b[t];
    }

    // ratio test over basic variables; two passes so the Bland tie-break
    // (smallest variable id among the minimum ratios) is unambiguous
    double theta = std::numeric_limits<double>::infinity();
    auto each_candidate = [&](auto&& fn) {
      for (std::size_t t = 0; t < k; ++t) fn(z_b_[t], d_b[t], basic_b_[t], 1, t);
      for (std::size_t j = 0; j < N_; ++j) {
        if (uv_state_[j] == 0) continue;
        // basic u_j has column -e_j, so its direction component flips sign
        const double dir = uv_state_[j] > 0 ? (coupled[j] - a[j]) : (a[j] - coupled[j]);
        const std::size_t var = 2 * D_ + 2 * j + (uv_state_[j] > 0 ? 0 : 1);
        fn(unit_val_[j], dir, var, 2, j);
      }
    };
    each_candidate([&](double value, double dir, std::size_t, int, std::size_t) {
      if (dir > kPivotTol) theta = std::min(theta, std::max(value, 0.0) / dir);
    });
    if (!std::isfinite(theta))
      throw std::runtime_error("solve_l1_slice: unbounded direction (internal error)");
    const double tie_window = theta + 1e-12 + 1e-9 * theta;
    std::size_t leave_var = kNone;
    int leave_kind = 0;         // 1 = b-part, 2 = unit
    std::size_t leave_pos = 0;  // index in basic_b_ or row id
    each_candidate([&](double value, double dir, std::size_t var, int kind, std::size_t pos) {
      if (dir <= kPivotTol) return;
      if (std::max(value, 0.0) / dir > tie_window) return;
      if (leave_var == kNone || var < leave_var) {
        leave_var = var;
        leave_kind = kind;
        leave_pos = pos;
      }
    });

    // structural update
    if (entering_is_b) {
      if (leave_kind == 1) {
        basic_b_[leave_pos] = entering;
      } else {
        basic_b_.push_back(entering);
        S_.push_back(leave_pos);
        uv_state_[leave_pos] = 0;
      }
    } else {
      const std::size_t q = (entering - 2 * D_) / 2;
      const int new_state = (entering - 2 * D_) % 2 == 0 ? +1 : -1;
      if (leave_kind == 1) {
        basic_b_.erase(basic_b_.begin() + static_cast<std::ptrdiff_t>(leave_pos));
        const auto it = std::find(S_.begin(), S_.end(), q);
        if (it == S_.end())
          throw std::runtime_error("solve_l1_slice: inconsistent basis structure");
        S_.erase(it);
        uv_state_[q] = new_state;
      } else {
        if (leave_pos != q) {
          // entering residual covers row q, leaving frees row leave_pos
          const auto it = std::find(S_.begin(), S_.end(), q);
          if (it == S_.end())
            throw std::runtime_error("solve_l1_slice: inconsistent basis structure");
          *it = leave_pos;
          uv_state_[leave_pos] = 0;
        }
        uv_state_[q] = new_state;
      }
    }
    rebuild_core();
    refresh_values();
  }

  L1SliceSolution extract(std::size_t pivots) const {
    L1SliceSolution out;
    out.pivots = pivots;
    out.b.assign(D_, 0.0);
    for (std::size_t t = 0; t < basic_b_.size(); ++t) {
      const std::size_t var = basic_b_[t];
      if (var < D_)
        out.b[var] += z_b_[t];
      else
        out.b[var - D_] -= z_b_[t];
    }
    Vec residuals = Y_.mult_transpose(out.b);
    out.objective = norm1(residuals);

    // vertex certificate: D-1 zero-residual columns, smallest indices first,
    // kept only while they stay linearly independent
    std::vector<std::size_t> zeros;
    for (std::size_t j = 0; j < N_; ++j)
      if (std::abs(residuals[j]) <= kZeroResidualTol) zeros.push_back(j);

    std::vector<Vec> ortho;  // Gram-Schmidt basis of the accepted columns
    for (std::size_t j : zeros) {
      if (out.certificate.active_indices.size() == D_ - 1) break;
      Vec cand(Y_.col(j).begin(), Y_.col(j).end());
      Vec res = cand;
      for (const Vec& q : ortho) {
        const double c = dot(res, q);
        for (std::size_t i = 0; i < res.size(); ++i) res[i] -= c * q[i];
      }
      const double nrm = norm2(res);
      if (nrm > 1e-8 * std::max(1.0, norm2(cand))) {
        for (double& x : res) x /= nrm;
        ortho.push_back(std::move(res));
        out.certificate.active_indices.push_back(j);
      }
    }
    out.certificate.independence_ok =
        out.certificate.active_indices.size() == D_ - 1 &&
        certificate_valid(Y_, out.b, out.certificate);
    return out;
  }
};

}  // namespace

bool certificate_valid(const Matrix& data, std::span<const double> b,
                       const VertexCertificate& cert) {
  const std::size_t D = data.rows();
  if (cert.active_indices.size() != D - 1) return false;
  for (std::size_t j : cert.active_indices) {
    if (j >= data.cols()) return false;
    if (std::abs(dot(data.col(j), b)) > kZeroResidualTol) return false;
  }
  // independence: smallest singular value of the cited columns above 1e-10
  Matrix sub(D, D - 1);
  for (std::size_t c = 0; c < cert.active_indices.size(); ++c) {
    auto src = data.col(cert.active_indices[c]);
    std::copy(src.begin(), src.end(), sub.col(c).begin());
  }
  Matrix G(D - 1, D - 1);
  for (std::size_t i = 0; i < D - 1; ++i)
    for (std::size_t j = 0; j < D - 1; ++j) G(i, j) = dot(sub.col(i), sub.col(j));
  const SymEigen eg = sym_eigen(G);
  return eg.values.front() > 1e-20;
}

L1SliceProblem::L1SliceProblem(Matrix data, UnitVector anchor) {
  if (data.rows() < 2) throw std::invalid_argument("L1SliceProblem: need dimension >= 2");
  if (anchor.dim() != data.rows())
    throw std::invalid_argument("L1SliceProblem: anchor dimension mismatch");
  if (anchor.is_zero()) throw std::invalid_argument("L1SliceProblem: anchor must be nonzero");
  if (!data.all_finite()) throw std::invalid_argument("L1SliceProblem: non-finite data");
  const auto [vec, lam] = smallest_eigvec(data.gram());
  (void)vec;
  if (std::sqrt(std::max(lam, 0.0)) <= 1e-10)
    throw std::invalid_argument("L1SliceProblem: data is rank-deficient");
  data_ = std::move(data);
  anchor_ = std::move(anchor);
}

L1SliceProblem L1SliceProblem::unchecked(Matrix data, UnitVector anchor) {
  L1SliceProblem p;
  if (anchor.dim() != data.rows())
    throw std::invalid_argument("L1SliceProblem: anchor dimension mismatch");
  p.data_ = std::move(data);
  p.anchor_ = std::move(anchor);
  return p;
}

L1SliceSolution solve_l1_slice(const L1SliceProblem& problem) {
  SliceSimplex simplex(problem.data(), problem.anchor());
  L1SliceSolution sol = simplex.run();
  const double slack = std::abs(dot(sol.b, problem.anchor().span()) - 1.0);
  if (slack > 1e-10)
    throw std::runtime_error("solve_l1_slice: slice constraint violated beyond tolerance");
  return sol;
}

}  // namespace dpcp
