#pragma once

// CHSH and Bell's original inequality, expressed as two-qubit observables
//   A_CHSH = a.s x (b - b').s + a'.s x (b + b').s
//   A_Bell = a.s x (b - b').s - b'.s x b.s
// and compared against the generalized Bell inequality with -s_A . s_B.

#include <string>
#include <vector>

#include "sepdist/product_oracle.hpp"

namespace sepdist {

struct ChshSetting {
  Vec3 a, a_prime, b, b_prime;
};

struct BellSetting {
  Vec3 a, b, b_prime;
};

/// T_ij = (rho | s_i x s_j).
Mat3 correlation_matrix(const HermitianOp& rho);

HermitianOp chsh_operator(const ChshSetting& s);
HermitianOp bell_operator(const BellSetting& s);

/// (rho | A) through the correlation matrix.
double chsh_value(const Mat3& correlations, const ChshSetting& s);
double bell_value(const Mat3& correlations, const BellSetting& s);

/// Closed forms for the singlet: -a.(b - b') - a'.(b + b') and -a.(b - b') + b'.b.
double chsh_singlet_value(const ChshSetting& s);
double bell_singlet_value(const BellSetting& s);

struct SettingSearch {
  int starts = 64;
  int max_iters = 20000;
  double tol = 1e-15;
  std::uint64_t seed = 0xC45;
};

struct ChshOptimum {
  double value;
  ChshSetting setting;
  /// Angles (a,b), (a',b), (a',b'), (a,b') in radians.
  std::array<double, 4> angles;
};

struct BellOptimum {
  double value;
  BellSetting setting;
  /// Angles (a,b'), (b',b), (a,b) in radians.
  std::array<double, 3> angles;
  double sep_anticorr_max;
  double sep_all_max;
};

/// Maximizes (rho | A_CHSH) over all settings for a fixed state.
ChshOptimum chsh_max_for_state(const DensityMatrix& rho, const SettingSearch& search = {});

/// Singlet optimum, canonicalized so a = +z and a' lies in the xz-plane.
ChshOptimum chsh_max_violation(const SettingSearch& search = {});

/// Singlet optimum of Bell's observable and the separable maxima of the
/// optimal operator, over anti-correlated (m = -n) and over all products.
BellOptimum bell_max_violation(const SettingSearch& search = {}, const OracleConfig& cfg = {});

struct SummaryRow {
  std::string observable;
  double sep_extremum;
  double singlet_value;
  double difference;
  double expected_difference;
};

/// GBI (-s_A . s_B), CHSH and Bell rows, each computed from scratch.
std::vector<SummaryRow> violation_summary(const SettingSearch& search = {},
                                          const OracleConfig& cfg = {});

double angle_between(const Vec3& u, const Vec3& v);

/// Rotation taking `first` to +z and `second` into the xz-plane (x >= 0).
Mat3 canonical_frame(const Vec3& first, const Vec3& second);

}  // namespace sepdist
