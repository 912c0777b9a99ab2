#pragma once

// Command-line front end. Exit codes: 0 success, 1 reproduction failure,
// 2 parse error, 3 invalid state, 4 convergence failure under --strict.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sepdist/io.hpp"

namespace sepdist {

inline constexpr const char* kToolVersion = "0.3.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitReproductionFailure = 1,
  kExitParseError = 2,
  kExitInvalidState = 3,
  kExitNotConverged = 4,
};

struct RunReport {
  std::string input;
  std::string kind;
  bool ppt;
  double min_pt_eigenvalue;
  DistanceReport distance;
  std::optional<Witness> witness;
  double b;
  double residual;
  std::optional<double> timing_ms;
  std::string tool_version;
  std::uint64_t seed;
};

Json run_report_to_json(const RunReport& r);
RunReport run_report_from_json(const Json& j);

/// Runs PPT, distance, A_max and B(w) for one state.
RunReport analyze(const StateSpec& spec, const SolverConfig& cfg, std::uint64_t seed);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepdist
