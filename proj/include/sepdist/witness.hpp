#pragma once

// Entanglement witnesses and the generalized Bell inequality (GBI)
//   (rho|A) >= min_{S} (.|A) > (w|A).
// The optimal witness is built from the distance minimizer rho0:
//   A_max = (rho0 - w - (rho0|rho0 - w) 1) / |rho0 - w|_2.

#include "sepdist/distance_solver.hpp"

namespace sepdist {

inline constexpr double kTangencyTol = 1e-9;
/// Distance gap used when B(w) is derived from rho0.
inline constexpr double kTheoremGapTol = 1e-10;

struct Witness {
  HermitianOp op;
  /// min over separable states of (rho|A), with its minimizing product state.
  double sep_min;
  ProductState sep_argmin;
  /// (w|A) for the state the witness was built for.
  double state_value;
  /// |A - (Tr A / N) 1|_2 == 1.
  bool normalized;

  double violation() const { return sep_min - state_value; }
  bool certifies_entanglement() const { return violation() > 0.0; }
};

/// A_max from the formula above, for any dimension. Throws ZeroDirection
/// when rho0 == w.
HermitianOp a_max_operator(const HermitianOp& w, const HermitianOp& rho0);

/// Two-qubit A_max with its separable minimum evaluated by the product oracle.
Witness a_max(const DensityMatrix& w, const DensityMatrix& rho0, const OracleConfig& cfg = {});

/// |A - (Tr A / N) 1|_2.
double traceless_norm(const HermitianOp& a);

/// min_{S}(rho|A) - (w|A); positive means A detects w.
double gbi_violation(const DensityMatrix& w, const HermitianOp& a, const OracleConfig& cfg = {});

/// B(w) and D(w) computed side by side.
struct TheoremCheck {
  double b;
  double d;
  double residual;
  DistanceReport report;
  /// Absent when D(w) = 0 (rho0 == w leaves no direction).
  std::optional<Witness> witness;
};

/// B(w) through the A_max witnesses of the distance solver's iterates, solved
/// to a gap of at most kTheoremGapTol. The reported witness is A_max(rho0) of
/// the final minimizer. B is clipped below at 0, the value of A = alpha 1.
TheoremCheck check_theorem(const DensityMatrix& w, const SolverConfig& cfg = {});
double b_of_w(const DensityMatrix& w, const SolverConfig& cfg = {});

struct TangencyCheck {
  bool tangent;
  OracleResult certificate;
};

/// A is tangent to S iff its separable minimum is 0 (within kTangencyTol).
TangencyCheck is_tangent(const HermitianOp& a, const OracleConfig& cfg = {});

/// (rho_eps | 1 + s_A . s_B) for
///   rho_eps = (1 + n.s x 1 - 1 x n.s - (n n^T + eps)_ij s_i x s_j) / 4,
/// which equals -Tr(eps).
double witness_sensitivity(const Vec3& n, const Mat3& eps);

}  // namespace sepdist
