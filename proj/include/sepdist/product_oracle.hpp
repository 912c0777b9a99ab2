#pragma once

// Linear optimization over the separable set. Extrema of (rho|X) over S are
// attained on pure product states, where the objective reduces to
//   alpha + n.a + m.b + n^T C m
// for unit Bloch vectors n, m.

#include <cstdint>
#include <vector>

#include "sepdist/pauli_space.hpp"
#include "sepdist/states.hpp"

namespace sepdist {

struct OracleConfig {
  int restarts = 32;
  int max_iters = 500;
  double tol = 1e-13;
  std::uint64_t seed = 0x5EED;
  int grid_resolution = 200;
};

struct OracleResult {
  double value = 0.0;
  ProductState state{Vec3::UnitZ(), Vec3::UnitZ()};
  int restarts_used = 0;
  bool converged = false;
};

/// Reduced objective of a two-qubit direction X on pure product states.
struct BilinearForm {
  double alpha = 0.0;
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Mat3 c = Mat3::Zero();

  static BilinearForm from(const HermitianOp& x);
  static BilinearForm from(const PauliCoeffs2Q& p);

  double operator()(const Vec3& n, const Vec3& m) const {
    return alpha + n.dot(a) + m.dot(b) + n.dot(c * m);
  }
  BilinearForm negated() const { return {-alpha, -a, -b, -c}; }
};

OracleResult min_over_separable(const HermitianOp& x, const OracleConfig& cfg = {});
OracleResult max_over_separable(const HermitianOp& x, const OracleConfig& cfg = {});
OracleResult min_over_separable(const BilinearForm& form, const OracleConfig& cfg = {});

/// Maximum over the anti-correlated product states m = -n.
OracleResult max_over_anticorrelated(const HermitianOp& x, const OracleConfig& cfg = {});

/// Minimum on a Fibonacci grid of resolution^2 Alice directions, with Bob's
/// direction minimized in closed form for each grid point.
OracleResult grid_oracle_min(const HermitianOp& x, int resolution);
OracleResult grid_oracle_max(const HermitianOp& x, int resolution);

/// Near-uniform deterministic points on the unit sphere.
std::vector<Vec3> fibonacci_sphere(int count);

/// Objective values after each alternating (n, m) sweep of a minimizing
/// see-saw started at n0. Exposed for monotonicity checks.
std::vector<double> see_saw_trace(const BilinearForm& form, const Vec3& n0,
                                  const OracleConfig& cfg = {});

/// Single-threaded reference implementations of the parallel kernels above.
/// Results are bitwise identical to the parallel versions.
namespace serial {
OracleResult min_over_separable(const HermitianOp& x, const OracleConfig& cfg = {});
OracleResult grid_oracle_min(const HermitianOp& x, int resolution);
}  // namespace serial

}  // namespace sepdist
