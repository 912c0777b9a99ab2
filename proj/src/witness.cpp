#include "sepdist/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sepdist {

HermitianOp a_max_operator(const HermitianOp& w, const HermitianOp& rho0) {
  const HermitianOp diff = rho0 - w;
  const double norm = hs_norm(diff);
  if (norm <= 1e-14) throw Error(ErrorCode::ZeroDirection, "rho0 coincides with w");
  const double shift = hs_inner(rho0, diff);
  return (diff - HermitianOp::identity(w.dim()) * shift) * (1.0 / norm);
}

double traceless_norm(const HermitianOp& a) {
  const double alpha = a.trace() / a.dim();
  return hs_norm(a - HermitianOp::identity(a.dim()) * alpha);
}

Witness a_max(const DensityMatrix& w, const DensityMatrix& rho0, const OracleConfig& cfg) {
  const HermitianOp op = a_max_operator(w.op(), rho0.op());
  const OracleResult sep = min_over_separable(op, cfg);
  return Witness{op, sep.value, sep.state, hs_inner(w.op(), op),
                 std::abs(traceless_norm(op) - 1.0) <= 1e-10};
}

double gbi_violation(const DensityMatrix& w, const HermitianOp& a, const OracleConfig& cfg) {
  return min_over_separable(a, cfg).value - hs_inner(w.op(), a);
}

TheoremCheck check_theorem(const DensityMatrix& w, const SolverConfig& cfg) {
  // A distance gap g leaves rho0 off by about sqrt(2 D g), and on a flat face of
  // the separable set that error enters min_S(A_max) at first order.
  SolverConfig tight = cfg;
  tight.tol = std::min(cfg.tol, kTheoremGapTol);
  DistanceReport report = distance(w, tight);
  const double d = report.distance;
  if (hs_norm(report.minimizer.op() - w.op()) <= 1e-14) {
    return {0.0, d, d, std::move(report), std::nullopt};
  }
  Witness wit = a_max(w, report.minimizer, cfg.oracle);
  // Every solver iterate rho_k defines its own A_max(rho_k), whose violation is
  // exactly the lower bound recorded at step k; B is the best of them.
  const double b = std::max({0.0, wit.violation(), report.lower_bound});
  return {b, d, std::abs(b - d), std::move(report), std::move(wit)};
}

double b_of_w(const DensityMatrix& w, const SolverConfig& cfg) { return check_theorem(w, cfg).b; }

TangencyCheck is_tangent(const HermitianOp& a, const OracleConfig& cfg) {
  const OracleResult r = min_over_separable(a, cfg);
  return {std::abs(r.value) <= kTangencyTol, r};
}

double witness_sensitivity(const Vec3& n, const Mat3& eps) {
  if (!n.allFinite() || std::abs(n.norm() - 1.0) > kUnitTol) {
    throw Error(ErrorCode::NotUnitVector, "n must be a unit vector");
  }
  if (!eps.allFinite()) throw Error(ErrorCode::NotAState, "eps has non-finite entries");
  PauliCoeffs2Q p;
  p.alpha = 0.25;
  p.a = n / 4.0;
  p.b = -n / 4.0;
  p.c = -(n * n.transpose() + eps) / 4.0;
  const HermitianOp rho = from_pauli(p);
  // eps moves the spectrum of the pure product at most by sum|eps_ij| / 4.
  const double floor = -eps.cwiseAbs().sum() / 4.0 - kPositivityTol;
  if (eigenvalues(rho)(0) < floor) {
    throw Error(ErrorCode::NotAState, "rho_eps leaves the first-order neighbourhood of a state");
  }
  PauliCoeffs2Q flip;
  flip.alpha = 1.0;
  flip.c = Mat3::Identity();
  return hs_inner(rho, from_pauli(flip));
}

}  // namespace sepdist
