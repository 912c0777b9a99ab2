#pragma once

// Table of closed-form reference values and the computations that reproduce
// them. Used by `sepdist reproduce` and the acceptance suite.

#include <functional>
#include <string>
#include <vector>

#include "sepdist/distance_solver.hpp"

namespace sepdist {

enum class Comparison { Equal, AtMost, AtLeast };

struct Claim {
  std::string id;     // e.g. "werner.D(0.8)"
  std::string group;  // werner, gbi, chsh, bell, sz, pauli, states, witness, geometry
  double reference;
  double tolerance;
  Comparison comparison;
  std::function<double()> compute;
};

struct ClaimResult {
  std::string id;
  std::string group;
  double reference;
  double computed;
  double delta;
  double tolerance;
  bool pass;
};

std::vector<Claim> reference_claims(const SolverConfig& cfg = {});

/// Runs the claims of group `filter`, or whose id starts with it (all when empty).
/// Claims are evaluated in parallel; results keep the table order.
std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims, const std::string& filter = "");

}  // namespace sepdist
