#pragma once

#include <cstddef>
#include <vector>

#include "dpcp/numerics.hpp"

// Dense simplex solver for the slice subproblem
//     min ||Y^T b||_1   s.t.   b . w_hat = 1,
// the linear program driving the relaxed DPCP recursion, together with the
// vertex certificate (the solution is orthogonal to D-1 independent data
// columns).

namespace dpcp {

/// Proof that an LP solution sits at a basic feasible point: D-1 data
/// columns orthogonal to the returned b (within 1e-8) that are linearly
/// independent (smallest singular value of their span above 1e-10).
struct VertexCertificate {
  std::vector<std::size_t> active_indices;
  bool independence_ok = false;
};

/// Checks the certificate's own invariants against data and solution.
bool certificate_valid(const Matrix& data, std::span<const double> b,
                       const VertexCertificate& cert);

class L1SliceProblem {
 public:
  /// Validating constructor: requires rank(data) = D, checked via the
  /// smallest singular value (> 1e-10), and a unit anchor.
  L1SliceProblem(Matrix data, UnitVector anchor);

  /// Skips the rank check. The DPCP recursion legitimately feeds weighted
  /// matrices whose smallest singular value vanishes (points already on a
  /// recovered hyperplane get zero weight); the LP stays bounded because
  /// its objective is a 1-norm.
  static L1SliceProblem unchecked(Matrix data, UnitVector anchor);

  const Matrix& data() const { return data_; }
  const UnitVector& anchor() const { return anchor_; }

 private:
  L1SliceProblem() = default;
  Matrix data_;
  UnitVector anchor_;
};

struct L1SliceSolution {
  Vec b;                    // satisfies b . anchor = 1 within 1e-10
  double objective = 0.0;   // ||Y^T b||_1 at the optimum
  VertexCertificate certificate;
  std::size_t pivots = 0;
};

/// Two-phase dense simplex with Bland's anti-cycling rule. The residuals
/// split as u - v >= 0 pairs and b splits into positive and negative parts;
/// the initial basis is available in closed form (one b-component covering
/// the slice row, sign-matched residual variables elsewhere), so phase one
/// never needs artificial variables. Deterministic: identical input gives
/// identical output.
L1SliceSolution solve_l1_slice(const L1SliceProblem& problem);

}  // namespace dpcp
