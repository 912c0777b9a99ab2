#include "sepdist/app.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sepdist/bell_classic.hpp"
#include "sepdist/geometry.hpp"
#include "sepdist/reproduce.hpp"

namespace sepdist {

namespace {

constexpr double kTheoremTol = 1e-5;
constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  std::optional<int> restarts;
  std::optional<int> max_iters;
  std::optional<int> grid;
  bool strict = false;
  bool trust_ppt = false;
  bool timing = false;
  std::string out;
  std::string config;
};

// Every module seed is split from the one root seed.
SolverConfig make_config(const GlobalOptions& g) {
  SolverConfig cfg;
  if (!g.config.empty()) {
    std::ifstream in(g.config);
    if (!in) throw Error(ErrorCode::ParseError, "config: cannot open '" + g.config + "'");
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
    }
    cfg = config_from_json(j, cfg);
  }
  cfg.oracle.seed = derive_seed(g.seed, 1);
  if (g.tol) cfg.tol = *g.tol;
  if (g.restarts) cfg.oracle.restarts = *g.restarts;
  if (g.max_iters) cfg.max_iters = *g.max_iters;
  if (g.grid) cfg.oracle.grid_resolution = *g.grid;
  if (g.trust_ppt) cfg.trust_ppt = true;
  return cfg;
}

SettingSearch make_search(const GlobalOptions& g) {
  SettingSearch s;
  s.seed = derive_seed(g.seed, 2);
  return s;
}

std::string fixed(double x, int sig = 12) {
  std::ostringstream os;
  os << std::setprecision(sig) << json_number(x);
  return os.str();
}

Vec3 planar(double degrees) {
  const double t = degrees * M_PI / 180.0;
  return Vec3(std::sin(t), 0.0, std::cos(t));
}

double degrees(double radians) { return radians * 180.0 / M_PI; }

std::vector<double> parse_angle_list(const std::string& s, std::size_t count) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "angles: '" + item + "' is not a number");
    }
  }
  if (out.size() != count)
    throw Error(ErrorCode::ParseError, "angles: expected " + std::to_string(count) + " values");
  return out;
}

Json vec_json(const Vec3& v) { return Json::array({json_number(v(0)), json_number(v(1)), json_number(v(2))}); }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int emit(const std::string& text) {
    if (g.out.empty()) {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
      return kExitOk;
    }
    std::ofstream f(g.out);
    if (!f) {
      err_ << "error: cannot write '" << g.out << "'\n";
      return kExitParseError;
    }
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
    return kExitOk;
  }

  int emit_json(const Json& j) { return emit(j.dump(2)); }

  int convergence(bool ok, const std::string& what) {
    if (ok) return kExitOk;
    err_ << "warning: " << what << '\n';
    return g.strict ? kExitNotConverged : kExitOk;
  }

  int cmd_analyze(const std::string& state) {
    const SolverConfig cfg = make_config(g);
    const StateSpec spec = parse_state_spec(state);
    const auto t0 = std::chrono::steady_clock::now();
    RunReport r = analyze(spec, cfg, g.seed);
    if (g.timing)
      r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    int code = kExitOk;
    if (g.json) {
      code = emit_json(run_report_to_json(r));
    } else {
      std::ostringstream os;
      os << "state      " << r.input << '\n'
         << "ppt        " << (r.ppt ? "true" : "false") << " (min PT eigenvalue "
         << fixed(r.min_pt_eigenvalue) << ")\n"
         << "D(w)       " << fixed(r.distance.distance) << '\n'
         << "bounds     [" << fixed(r.distance.lower_bound) << ", " << fixed(r.distance.upper_bound)
         << "] gap " << fixed(r.distance.gap, 3) << " after " << r.distance.iterations
         << " iterations\n"
         << "B(w)       " << fixed(r.b) << '\n'
         << "|B-D|      " << fixed(r.residual, 3) << '\n';
      if (r.timing_ms) os << "time_ms    " << fixed(*r.timing_ms, 4) << '\n';
      code = emit(os.str());
    }
    if (code != kExitOk) return code;
    code = convergence(r.distance.converged, "distance gap not reached within the iteration cap");
    if (code != kExitOk) return code;
    return convergence(r.residual < kTheoremTol, "|B - D| = " + fixed(r.residual, 3) + " exceeds 1e-5");
  }

  int cmd_distance(const std::string& state) {
    const SolverConfig cfg = make_config(g);
    const DensityMatrix w = build_state(parse_state_spec(state));
    const DistanceReport r = distance(w, cfg);
    int code;
    if (g.json) {
      code = emit_json(distance_report_to_json(r));
    } else {
      std::ostringstream os;
      os << "D(w)       " << fixed(r.distance) << '\n'
         << "bounds     [" << fixed(r.lower_bound) << ", " << fixed(r.upper_bound) << "]\n"
         << "gap        " << fixed(r.gap, 3) << '\n'
         << "iterations " << r.iterations << (r.converged ? "" : " (not converged)") << '\n'
         << "atoms      " << r.atoms.size() << '\n';
      for (const auto& a : r.atoms) {
        os << "  " << std::setw(16) << fixed(a.weight, 9) << "  n=(" << fixed(a.state.n()(0), 6) << ", "
           << fixed(a.state.n()(1), 6) << ", " << fixed(a.state.n()(2), 6) << ")  m=("
           << fixed(a.state.m()(0), 6) << ", " << fixed(a.state.m()(1), 6) << ", "
           << fixed(a.state.m()(2), 6) << ")\n";
      }
      code = emit(os.str());
    }
    if (code != kExitOk) return code;
    return convergence(r.converged, "distance gap not reached within the iteration cap");
  }

  int cmd_witness(const std::string& state) {
    const SolverConfig cfg = make_config(g);
    const DensityMatrix w = build_state(parse_state_spec(state));
    const TheoremCheck t = check_theorem(w, cfg);
    Json j{{"B", json_number(t.b)},
           {"D", json_number(t.d)},
           {"residual", json_number(t.residual)},
           {"converged", t.report.converged}};
    j["witness"] = t.witness ? witness_to_json(*t.witness) : Json(nullptr);
    int code;
    if (g.json) {
      code = emit_json(j);
    } else {
      std::ostringstream os;
      if (t.witness) {
        const PauliCoeffs2Q p = to_pauli(t.witness->op);
        os << "A_max pauli alpha " << fixed(p.alpha) << '\n';
        os << "  a = (" << fixed(p.a(0)) << ", " << fixed(p.a(1)) << ", " << fixed(p.a(2)) << ")\n";
        os << "  b = (" << fixed(p.b(0)) << ", " << fixed(p.b(1)) << ", " << fixed(p.b(2)) << ")\n";
        for (int i = 0; i < 3; ++i)
          os << "  c[" << i << "] = (" << fixed(p.c(i, 0)) << ", " << fixed(p.c(i, 1)) << ", "
             << fixed(p.c(i, 2)) << ")\n";
        os << "sep_min    " << fixed(t.witness->sep_min) << '\n'
           << "(w|A_max)  " << fixed(t.witness->state_value) << '\n'
           << "violation  " << fixed(t.witness->violation()) << '\n';
      } else {
        os << "no witness: the state is its own nearest separable state\n";
      }
      os << "B(w)       " << fixed(t.b) << '\n'
         << "D(w)       " << fixed(t.d) << '\n'
         << "|B-D|      " << fixed(t.residual, 3) << '\n';
      code = emit(os.str());
    }
    if (code != kExitOk) return code;
    return convergence(t.report.converged && t.residual < kTheoremTol, "B and D did not agree to 1e-5");
  }

  int cmd_bell(const std::string& which, const std::string& angles, bool optimize) {
    const SolverConfig cfg = make_config(g);
    const SettingSearch search = make_search(g);
    if (which == "summary") return bell_summary(search, cfg.oracle);
    if (which == "chsh") {
      ChshSetting s{planar(0), planar(270), planar(135), planar(45)};
      if (!angles.empty()) {
        const auto a = parse_angle_list(angles, 4);
        s = {planar(a[0]), planar(a[1]), planar(a[2]), planar(a[3])};
      }
      if (optimize) s = chsh_max_violation(search).setting;
      const HermitianOp op = chsh_operator(s);
      const double singlet = hs_inner(werner(1.0).op(), op);
      const double sep = max_over_separable(op, cfg.oracle).value;
      const std::array<double, 4> ang{angle_between(s.a, s.b), angle_between(s.a_prime, s.b),
                                      angle_between(s.a_prime, s.b_prime), angle_between(s.a, s.b_prime)};
      if (g.json) {
        return emit_json(Json{{"observable", "CHSH"},
                              {"setting", {{"a", vec_json(s.a)}, {"a_prime", vec_json(s.a_prime)},
                                           {"b", vec_json(s.b)}, {"b_prime", vec_json(s.b_prime)}}},
                              {"angles_deg", {json_number(degrees(ang[0])), json_number(degrees(ang[1])),
                                              json_number(degrees(ang[2])), json_number(degrees(ang[3]))}},
                              {"singlet_value", json_number(singlet)},
                              {"sep_max", json_number(sep)},
                              {"classical_bound", 2.0}});
      }
      std::ostringstream os;
      os << "CHSH  angles (a,b) (a',b) (a',b') (a,b') = " << fixed(degrees(ang[0]), 9) << ", "
         << fixed(degrees(ang[1]), 9) << ", " << fixed(degrees(ang[2]), 9) << ", "
         << fixed(degrees(ang[3]), 9) << " deg\n"
         << "singlet value     " << fixed(singlet) << '\n'
         << "separable maximum " << fixed(sep) << '\n';
      return emit(os.str());
    }
    if (which == "original") {
      BellSetting s{planar(0), planar(120), planar(60)};
      if (!angles.empty()) {
        const auto a = parse_angle_list(angles, 3);
        s = {planar(a[0]), planar(a[1]), planar(a[2])};
      }
      if (optimize) s = bell_max_violation(search, cfg.oracle).setting;
      const HermitianOp op = bell_operator(s);
      const double singlet = hs_inner(werner(1.0).op(), op);
      const double anti = max_over_anticorrelated(op, cfg.oracle).value;
      const double all = max_over_separable(op, cfg.oracle).value;
      const std::array<double, 3> ang{angle_between(s.a, s.b_prime), angle_between(s.b_prime, s.b),
                                      angle_between(s.a, s.b)};
      if (g.json) {
        return emit_json(Json{{"observable", "Bell"},
                              {"setting", {{"a", vec_json(s.a)}, {"b", vec_json(s.b)}, {"b_prime", vec_json(s.b_prime)}}},
                              {"angles_deg", {json_number(degrees(ang[0])), json_number(degrees(ang[1])),
                                              json_number(degrees(ang[2]))}},
                              {"singlet_value", json_number(singlet)},
                              {"sep_anticorr_max", json_number(anti)},
                              {"sep_all_max", json_number(all)},
                              {"classical_bound", 1.0}});
      }
      std::ostringstream os;
      os << "Bell  angles (a,b') (b',b) (a,b) = " << fixed(degrees(ang[0]), 9) << ", "
         << fixed(degrees(ang[1]), 9) << ", " << fixed(degrees(ang[2]), 9) << " deg\n"
         << "singlet value                " << fixed(singlet) << '\n'
         << "anti-correlated sep. maximum " << fixed(anti) << '\n'
         << "separable maximum            " << fixed(all) << '\n';
      return emit(os.str());
    }
    throw Error(ErrorCode::ParseError, "bell: expected chsh, original or summary");
  }

  int bell_summary(const SettingSearch& search, const OracleConfig& oracle) {
    const auto rows = violation_summary(search, oracle);
    bool ok = true;
    for (const auto& r : rows) ok = ok && std::abs(r.difference - r.expected_difference) < 1e-6;
    if (g.json) {
      Json j = Json::array();
      for (const auto& r : rows)
        j.push_back({{"observable", r.observable},
                     {"sep_extremum", json_number(r.sep_extremum)},
                     {"singlet_value", json_number(r.singlet_value)},
                     {"difference", json_number(r.difference)},
                     {"expected_difference", json_number(r.expected_difference)}});
      emit_json(j);
    } else {
      std::ostringstream os;
      os << std::left << std::setw(12) << "observable" << std::setw(18) << "separable" << std::setw(18)
         << "singlet" << "difference\n";
      for (const auto& r : rows)
        os << std::setw(12) << r.observable << std::setw(18) << fixed(r.sep_extremum, 10) << std::setw(18)
           << fixed(r.singlet_value, 10) << fixed(r.difference, 10) << '\n';
      emit(os.str());
    }
    return ok ? kExitOk : kExitReproductionFailure;
  }

  int cmd_geometry_sample(int resolution) {
    if (resolution < 2) throw Error(ErrorCode::ParseError, "resolution: must be at least 2");
    std::ostringstream os;
    write_samples_csv(os, sample_regions(resolution));
    return emit(os.str());
  }

  int cmd_geometry_mesh(const std::string& region, const std::string& format) {
    const Mesh mesh = export_mesh(parse_region(region));
    if (format == "json") return emit(mesh_to_json(mesh));
    if (format == "off") return emit(mesh_to_off(mesh));
    throw Error(ErrorCode::ParseError, "format: expected json or off");
  }

  int cmd_sweep(const std::string& family, double lo, double hi, int steps, const std::string& direction) {
    if (steps < 1) throw Error(ErrorCode::ParseError, "steps: must be at least 1");
    const SolverConfig cfg = make_config(g);
    Vec3 dir = Vec3::Ones().normalized();
    if (!direction.empty()) {
      const auto d = parse_angle_list(direction, 3);
      dir = Vec3(d[0], d[1], d[2]);
      if (dir.norm() == 0.0) throw Error(ErrorCode::ParseError, "direction: must be nonzero");
      dir.normalize();
    }
    std::function<DensityMatrix(double)> make;
    if (family == "werner") {
      make = [](double t) { return werner(t); };
    } else if (family == "wc-ray") {
      make = [dir](double t) { return w_c_state(t * dir); };
    } else {
      throw Error(ErrorCode::ParseError, "family: expected werner or wc-ray");
    }
    std::vector<double> params(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k)
      params[static_cast<std::size_t>(k)] = steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1);
    std::vector<DensityMatrix> states;
    for (double t : params) states.push_back(make(t));  // domain errors before any work

    struct Row {
      double d, b, lower, upper;
      bool ppt, converged;
    };
    std::vector<std::optional<Row>> rows(states.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < states.size(); ++k) {
      const TheoremCheck t = check_theorem(states[k], cfg);
      rows[k] = Row{t.d, t.b, t.report.lower_bound, t.report.upper_bound, is_ppt(states[k]), t.report.converged};
    }
    std::ostringstream os;
    os << std::setprecision(9) << "param,D,B,lower,upper,ppt\n";
    bool all_converged = true;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Row& r = *rows[k];
      all_converged = all_converged && r.converged;
      os << json_number(params[k]) << ',' << r.d << ',' << r.b << ',' << r.lower << ',' << r.upper << ','
         << int(r.ppt) << '\n';
    }
    const int code = emit(os.str());
    if (code != kExitOk) return code;
    return convergence(all_converged, "some sweep points did not reach the gap tolerance");
  }

  int cmd_reproduce(const std::string& filter) {
    const SolverConfig cfg = make_config(g);
    const auto results = run_claims(reference_claims(cfg), filter);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    if (g.json) {
      Json j = Json::array();
      for (const auto& r : results)
        j.push_back({{"claim", r.id},
                     {"group", r.group},
                     {"reference", json_number(r.reference)},
                     {"computed", json_number(r.computed)},
                     {"delta", json_number(r.delta)},
                     {"tolerance", json_number(r.tolerance)},
                     {"pass", r.pass}});
      emit_json(j);
    } else {
      std::ostringstream os;
      os << std::left << std::setw(38) << "claim" << std::setw(20) << "reference" << std::setw(20)
         << "computed" << std::setw(12) << "|delta|" << "pass\n";
      for (const auto& r : results)
        os << std::setw(38) << r.id << std::setw(20) << fixed(r.reference) << std::setw(20) << fixed(r.computed)
           << std::setw(12) << fixed(r.delta, 3) << (r.pass ? "yes" : "NO") << '\n';
      os << results.size() << " claims, " << (ok ? "all pass" : "FAILURES") << '\n';
      emit(os.str());
    }
    if (!ok) {
      for (const auto& r : results)
        if (!r.pass) err_ << "failed: " << r.id << '\n';
    }
    return ok ? kExitOk : kExitReproductionFailure;
  }

  GlobalOptions g;

 private:
  std::ostream& out_;
  std::ostream& err_;
};

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::UnknownRegion ? kExitParseError
                                                                             : kExitInvalidState;
}

}  // namespace

RunReport analyze(const StateSpec& spec, const SolverConfig& cfg, std::uint64_t seed) {
  const DensityMatrix w = build_state(spec);
  TheoremCheck t = check_theorem(w, cfg);
  return RunReport{spec.text,
                   kind_name(spec.kind),
                   is_ppt(w),
                   min_partial_transpose_eigenvalue(w),
                   std::move(t.report),
                   std::move(t.witness),
                   t.b,
                   t.residual,
                   std::nullopt,
                   kToolVersion,
                   seed};
}

Json run_report_to_json(const RunReport& r) {
  Json j{{"tool_version", r.tool_version},
         {"seed", r.seed},
         {"input", {{"spec", r.input}, {"kind", r.kind}}},
         {"ppt", r.ppt},
         {"min_pt_eigenvalue", json_number(r.min_pt_eigenvalue)},
         {"distance", distance_report_to_json(r.distance)},
         {"B", json_number(r.b)},
         {"residual", json_number(r.residual)}};
  j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  if (r.timing_ms) j["timing_ms"] = json_number(*r.timing_ms);
  return j;
}

RunReport run_report_from_json(const Json& j) {
  try {
    std::optional<Witness> wit;
    if (!j.at("witness").is_null()) wit = witness_from_json(j["witness"]);
    std::optional<double> timing;
    if (j.contains("timing_ms")) timing = j["timing_ms"].get<double>();
    return RunReport{j.at("input").at("spec").get<std::string>(),
                     j.at("input").at("kind").get<std::string>(),
                     j.at("ppt").get<bool>(),
                     j.at("min_pt_eigenvalue").get<double>(),
                     distance_report_from_json(j.at("distance")),
                     wit,
                     j.at("B").get<double>(),
                     j.at("residual").get<double>(),
                     timing,
                     j.at("tool_version").get<std::string>(),
                     j.at("seed").get<std::uint64_t>()};
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("run report: ") + e.what());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  GlobalOptions& g = runner.g;

  CLI::App app{"Hilbert-Schmidt distance to the separable two-qubit states, optimal witnesses and Bell inequalities",
               "sepdist"};
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--seed", g.seed, "Root seed");
  app.add_option("--tol", g.tol, "Gap tolerance of the distance solver");
  app.add_option("--restarts", g.restarts, "Random restarts of the product oracle");
  app.add_option("--max-iters", g.max_iters, "Iteration cap of the distance solver");
  app.add_option("--grid", g.grid, "Grid resolution of the brute-force oracle");
  app.add_flag("--strict", g.strict, "Treat convergence failures as errors (exit 4)");
  app.add_flag("--trust-ppt", g.trust_ppt, "Return D = 0 for PPT inputs without solving");
  app.add_flag("--timing", g.timing, "Include wall-clock timing in analyze output");
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.add_option("--config", g.config, "JSON file with solver/oracle settings");

  std::string state;
  auto* analyze_cmd = app.add_subcommand("analyze", "PPT, distance, optimal witness and B(w) for a state");
  analyze_cmd->add_option("state", state, "werner:A | wc:C1,C2,C3 | bell:K | product:NX,NY,NZ,MX,MY,MZ | FILE.json")
      ->required();
  auto* distance_cmd = app.add_subcommand("distance", "Distance to the separable set with certificate");
  distance_cmd->add_option("state", state)->required();
  auto* witness_cmd = app.add_subcommand("witness", "Optimal entanglement witness A_max");
  witness_cmd->add_option("state", state)->required();

  std::string which, angles;
  bool optimize = false;
  auto* bell_cmd = app.add_subcommand("bell", "CHSH, Bell's original inequality, violation summary");
  bell_cmd->add_option("which", which, "chsh | original | summary")
      ->required()
      ->check(CLI::IsMember({"chsh", "original", "summary"}));
  bell_cmd->add_option("--angles", angles, "Comma-separated in-plane angles in degrees");
  bell_cmd->add_flag("--optimize", optimize, "Optimize the setting for the singlet");

  int resolution = 21;
  std::string region = "pyramid", format = "json";
  auto* geometry_cmd = app.add_subcommand("geometry", "c-space tetrahedron/octahedron data");
  geometry_cmd->require_subcommand(1);
  auto* sample_cmd = geometry_cmd->add_subcommand("sample", "Classify a grid over [-1,1]^3 (CSV)");
  sample_cmd->add_option("--resolution", resolution, "Points per axis");
  auto* mesh_cmd = geometry_cmd->add_subcommand("mesh", "Export a region mesh");
  mesh_cmd->add_option("--region", region, "tetra | mirror | intersection | pyramid");
  mesh_cmd->add_option("--format", format, "json | off");

  std::string family = "werner", direction;
  double lo = -1.0 / 3.0, hi = 1.0;
  int steps = 41;
  auto* sweep_cmd = app.add_subcommand("sweep", "D and B along a one-parameter family (CSV)");
  sweep_cmd->add_option("--family", family, "werner | wc-ray");
  sweep_cmd->add_option("--lo", lo);
  sweep_cmd->add_option("--hi", hi);
  sweep_cmd->add_option("--steps", steps);
  sweep_cmd->add_option("--direction", direction, "wc-ray direction C1,C2,C3 (default 1,1,1)");

  std::string filter;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Check every closed-form reference value");
  reproduce_cmd->add_option("--filter", filter, "Only one group (werner, chsh, ...) or ids with this prefix");

  for (auto* sub : {analyze_cmd, distance_cmd, witness_cmd, bell_cmd, sweep_cmd, reproduce_cmd})
    sub->fallthrough();
  geometry_cmd->fallthrough();
  sample_cmd->fallthrough();
  mesh_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  try {
    if (*analyze_cmd) return runner.cmd_analyze(state);
    if (*distance_cmd) return runner.cmd_distance(state);
    if (*witness_cmd) return runner.cmd_witness(state);
    if (*bell_cmd) return runner.cmd_bell(which, angles, optimize);
    if (*sample_cmd) return runner.cmd_geometry_sample(resolution);
    if (*mesh_cmd) return runner.cmd_geometry_mesh(region, format);
    if (*sweep_cmd) return runner.cmd_sweep(family, lo, hi, steps, direction);
    if (*reproduce_cmd) return runner.cmd_reproduce(filter);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitParseError;
}

}  // namespace sepdist
