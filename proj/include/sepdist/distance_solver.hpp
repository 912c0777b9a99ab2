#pragma once

// Hilbert-Schmidt distance from a two-qubit state to the separable set, with
// the two-sided variational certificate
//   min_{rho in S} (rho - w | u) <= D(w) <= |rho' - w|_2,  u = (rho' - w)/|rho' - w|_2.

#include <optional>
#include <vector>

#include "sepdist/product_oracle.hpp"
#include "sepdist/states.hpp"

namespace sepdist {

struct SolverConfig {
  double tol = 1e-7;
  int max_iters = 10000;
  OracleConfig oracle;
  bool trust_ppt = false;
};

struct WeightedProduct {
  ProductState state;
  double weight;
};

struct DistanceReport {
  double distance = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
  /// rho0 as an explicit convex combination of product states. Empty when the
  /// PPT fast path returned the input itself.
  std::vector<WeightedProduct> atoms;
  DensityMatrix minimizer;
  /// Bounds after each oracle call; upper is non-increasing.
  std::vector<double> upper_trace;
  std::vector<double> lower_trace;
};

DistanceReport distance(const DensityMatrix& w, const SolverConfig& cfg = {});

/// Bracket D(w) using a caller-supplied separable rho'. The lower end is
/// clipped at 0, where D is bounded below anyway; `raw_lower` keeps the
/// unclipped support value.
struct VariationalBounds {
  double lower;
  double upper;
  double raw_lower;
};

VariationalBounds variational_bounds(const DensityMatrix& w, const DensityMatrix& rho_prime,
                                     const OracleConfig& cfg = {});

/// One qubit with the separable set replaced by S_z = {(1 + l s_z)/2, |l| <= 1}.
struct SzDistance {
  double distance;
  double lambda_opt;
};

/// Closed form D = |(w_x, w_y)| / sqrt2 at lambda = w_z.
SzDistance distance_sz_model(const Vec3& w);

struct SzReport {
  double distance = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double lambda = 0.0;
  int iterations = 0;
  bool converged = false;
  DensityMatrix minimizer;
};

/// Same projection machinery as distance(), on S_z with extreme points l = +-1.
SzReport distance_sz_numeric(const Vec3& w, const SolverConfig& cfg = {});

DensityMatrix qubit_state(const Vec3& bloch);

}  // namespace sepdist
