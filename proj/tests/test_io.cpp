#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "sepdist/io.hpp"

using namespace sepdist;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::DimMismatch;
}

}  // namespace

TEST_CASE("state specs") {
  CHECK(hs_norm(build_state(parse_state_spec("werner:0.5")).op() - werner(0.5).op()) == 0.0);
  CHECK(hs_norm(build_state(parse_state_spec("wc:0.1,0.2,-0.3")).op() - w_c_state(Vec3(0.1, 0.2, -0.3)).op()) < 1e-15);
  CHECK(hs_norm(build_state(parse_state_spec("bell:2")).op() - bell_projectors()[2].op()) < 1e-15);
  const DensityMatrix p = build_state(parse_state_spec("product:0,0,1,1,0,0"));
  CHECK(hs_norm(p.op() - product_state(Vec3::UnitZ(), Vec3::UnitX()).op()) < 1e-15);
  CHECK(kind_name(parse_state_spec("werner:1").kind) == "werner");
}

TEST_CASE("state spec errors name the field") {
  for (const char* bad : {"werner:", "werner:abc", "wc:1,2", "bell:7", "product:1,0,0", "nonsense:1"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { build_state(parse_state_spec(bad)); }) == ErrorCode::ParseError);
  }
  try {
    parse_state_spec("werner:abc");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("werner.alpha") != std::string::npos);
  }
  CHECK(code_of([] { build_state(parse_state_spec("werner:1.5")); }) == ErrorCode::NotAState);
  CHECK(code_of([] { build_state(parse_state_spec("wc:0.4,0.4,0.4")); }) == ErrorCode::NotAState);
  CHECK(code_of([] { build_state(parse_state_spec("product:1,1,0,0,0,1")); }) == ErrorCode::NotUnitVector);
}

TEST_CASE("matrix files") {
  const std::string path = "io_test_state.json";
  {
    std::ofstream f(path);
    f << operator_to_json(werner(0.7).op()).dump();
  }
  CHECK(hs_norm(build_state(parse_state_spec(path)).op() - werner(0.7).op()) < 1e-11);
  CHECK(hs_norm(build_state(parse_state_spec("file:" + path)).op() - werner(0.7).op()) < 1e-11);
  {
    std::ofstream f(path);
    f << operator_to_json(HermitianOp::identity(4)).dump();
  }
  CHECK(code_of([&] { build_state(parse_state_spec(path)); }) == ErrorCode::NotAState);
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(code_of([&] { build_state(parse_state_spec(path)); }) == ErrorCode::ParseError);
  std::remove(path.c_str());
  CHECK(code_of([] { build_state(parse_state_spec("missing_file.json")); }) == ErrorCode::ParseError);
}

TEST_CASE("numbers") {
  CHECK(json_number(1.0 / 3.0) == 0.333333333333);
  CHECK(std::signbit(json_number(-0.0)) == false);
  CHECK_THROWS(json_number(std::numeric_limits<double>::infinity()));
  CHECK_THROWS(json_number(std::nan("")));
}

TEST_CASE("operator JSON in both forms") {
  Rng rng(derive_seed(7, 0));
  const HermitianOp x = random_hermitian(4, rng);
  CHECK(hs_norm(operator_from_json(operator_to_json(x)) - x) < 1e-11);
  CHECK(hs_norm(operator_from_json(pauli_to_json(to_pauli(x))) - x) < 1e-11);
  CHECK(code_of([] { operator_from_json(Json{{"dim", 4}}); }) == ErrorCode::ParseError);
}

TEST_CASE("config round-trip") {
  SolverConfig cfg;
  cfg.tol = 1e-9;
  cfg.max_iters = 77;
  cfg.trust_ppt = true;
  cfg.oracle.restarts = 5;
  cfg.oracle.seed = 1234;
  cfg.oracle.grid_resolution = 64;
  const SolverConfig back = config_from_json(config_to_json(cfg));
  CHECK(back.tol == cfg.tol);
  CHECK(back.max_iters == 77);
  CHECK(back.trust_ppt);
  CHECK(back.oracle.restarts == 5);
  CHECK(back.oracle.seed == 1234);
  CHECK(back.oracle.grid_resolution == 64);
  const SolverConfig partial = config_from_json(Json{{"tol", 1e-8}});
  CHECK(partial.tol == 1e-8);
  CHECK(partial.max_iters == SolverConfig{}.max_iters);
}

TEST_CASE("reports round-trip through JSON") {
  const TheoremCheck t = check_theorem(werner(0.9));
  const Json dj = distance_report_to_json(t.report);
  CHECK(distance_report_to_json(distance_report_from_json(dj)) == dj);
  REQUIRE(t.witness);
  const Json wj = witness_to_json(*t.witness);
  CHECK(witness_to_json(witness_from_json(wj)) == wj);
  CHECK(code_of([] { distance_report_from_json(Json::object()); }) == ErrorCode::ParseError);
}

TEST_CASE("round-trip on random states") {
  Rng rng(derive_seed(7, 1));
  for (int k = 0; k < 20; ++k) {
    const TheoremCheck t = check_theorem(random_state(4, rng));
    const Json dj = distance_report_to_json(t.report);
    CHECK(distance_report_to_json(distance_report_from_json(dj)) == dj);
    if (t.witness) {
      const Json wj = witness_to_json(*t.witness);
      CHECK(witness_to_json(witness_from_json(wj)) == wj);
    }
  }
}
