#pragma once

// JSON/CSV plumbing and the textual state shorthand used by the CLI:
//   werner:ALPHA  wc:C1,C2,C3  bell:K  product:NX,NY,NZ,MX,MY,MZ  PATH.json

#include <string>
#include <vector>

#include <json.hpp>

#include "sepdist/distance_solver.hpp"
#include "sepdist/witness.hpp"

namespace sepdist {

using Json = nlohmann::json;

/// Rounds to 12 significant digits and rejects NaN/Inf.
double json_number(double x);

Json operator_to_json(const HermitianOp& x);
Json pauli_to_json(const PauliCoeffs2Q& p);

/// Accepts {"dim","re","im"} or {"alpha","a","b","c"}. Throws ParseError.
HermitianOp operator_from_json(const Json& j);

struct StateSpec {
  enum class Kind { Werner, Wc, Bell, Product, MatrixFile };
  Kind kind;
  std::vector<double> params;
  std::string path;
  std::string text;  // the original argument
};

/// Throws ParseError naming the offending field.
StateSpec parse_state_spec(const std::string& text);

/// Throws NotAState / NotUnitVector for out-of-domain parameters and
/// ParseError for unreadable files.
DensityMatrix build_state(const StateSpec& spec);

std::string kind_name(StateSpec::Kind kind);

Json config_to_json(const SolverConfig& cfg);
/// Applies the keys present in `j` on top of `base`.
SolverConfig config_from_json(const Json& j, SolverConfig base = {});

Json distance_report_to_json(const DistanceReport& r);
Json witness_to_json(const Witness& w);

/// Inverses of the two above; to_json(from_json(j)) == j.
DistanceReport distance_report_from_json(const Json& j);
Witness witness_from_json(const Json& j);

}  // namespace sepdist
