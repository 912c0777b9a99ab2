#include "sepdist/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sepdist {

namespace {

std::vector<double> parse_numbers(const std::string& list, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw Error(ErrorCode::ParseError, field + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  return out;
}

void require_count(const std::vector<double>& v, std::size_t n, const std::string& field) {
  if (v.size() != n) {
    throw Error(ErrorCode::ParseError,
                field + ": expected " + std::to_string(n) + " values, got " + std::to_string(v.size()));
  }
}

Vec3 vec3_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3) {
    throw Error(ErrorCode::ParseError, std::string(key) + ": expected an array of 3 numbers");
  }
  return Vec3(j[key][0].get<double>(), j[key][1].get<double>(), j[key][2].get<double>());
}

Json vec3_to_json(const Vec3& v) {
  return Json::array({json_number(v(0)), json_number(v(1)), json_number(v(2))});
}

}  // namespace

double json_number(double x) {
  if (!std::isfinite(x)) throw std::logic_error("non-finite value reached JSON output");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

Json operator_to_json(const HermitianOp& x) {
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < x.dim(); ++i) {
    Json rr = Json::array(), ri = Json::array();
    for (int j = 0; j < x.dim(); ++j) {
      rr.push_back(json_number(x(i, j).real()));
      ri.push_back(json_number(x(i, j).imag()));
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return Json{{"dim", x.dim()}, {"re", re}, {"im", im}};
}

Json pauli_to_json(const PauliCoeffs2Q& p) {
  Json c = Json::array();
  for (int i = 0; i < 3; ++i)
    c.push_back({json_number(p.c(i, 0)), json_number(p.c(i, 1)), json_number(p.c(i, 2))});
  return Json{{"alpha", json_number(p.alpha)}, {"a", vec3_to_json(p.a)}, {"b", vec3_to_json(p.b)}, {"c", c}};
}

HermitianOp operator_from_json(const Json& j) {
  try {
    if (j.contains("alpha")) {
      PauliCoeffs2Q p;
      p.alpha = j.at("alpha").get<double>();
      if (j.contains("a")) p.a = vec3_from_json(j, "a");
      if (j.contains("b")) p.b = vec3_from_json(j, "b");
      if (j.contains("c")) {
        const Json& c = j["c"];
        if (!c.is_array() || c.size() != 3) throw Error(ErrorCode::ParseError, "c: expected 3x3");
        for (int r = 0; r < 3; ++r) {
          if (!c[r].is_array() || c[r].size() != 3) throw Error(ErrorCode::ParseError, "c: expected 3x3");
          for (int k = 0; k < 3; ++k) p.c(r, k) = c[r][k].get<double>();
        }
      }
      return from_pauli(p);
    }
    const int dim = j.at("dim").get<int>();
    if (dim <= 0) throw Error(ErrorCode::ParseError, "dim: must be positive");
    const Json& re = j.at("re");
    const Json zero_im = Json::array();
    const Json& im = j.contains("im") ? j["im"] : zero_im;
    CMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      if (re.size() != static_cast<std::size_t>(dim) || re[r].size() != static_cast<std::size_t>(dim))
        throw Error(ErrorCode::ParseError, "re: expected a dim x dim array");
      for (int k = 0; k < dim; ++k) {
        const double imag = im.empty() ? 0.0 : im.at(r).at(k).get<double>();
        m(r, k) = Complex(re[r][k].get<double>(), imag);
      }
    }
    return HermitianOp(m);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("operator JSON: ") + e.what());
  }
}

StateSpec parse_state_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "state: empty specification");
    return {StateSpec::Kind::MatrixFile, {}, text, text};
  }
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "werner") {
    auto v = parse_numbers(rest, "werner.alpha");
    require_count(v, 1, "werner.alpha");
    return {StateSpec::Kind::Werner, v, {}, text};
  }
  if (kind == "wc") {
    auto v = parse_numbers(rest, "wc.c");
    require_count(v, 3, "wc.c");
    return {StateSpec::Kind::Wc, v, {}, text};
  }
  if (kind == "bell") {
    auto v = parse_numbers(rest, "bell.k");
    require_count(v, 1, "bell.k");
    if (v[0] != std::floor(v[0]) || v[0] < 0 || v[0] > 3)
      throw Error(ErrorCode::ParseError, "bell.k: must be one of 0, 1, 2, 3");
    return {StateSpec::Kind::Bell, v, {}, text};
  }
  if (kind == "product") {
    auto v = parse_numbers(rest, "product.nm");
    require_count(v, 6, "product.nm");
    return {StateSpec::Kind::Product, v, {}, text};
  }
  if (kind == "file") return {StateSpec::Kind::MatrixFile, {}, rest, text};
  throw Error(ErrorCode::ParseError, "state.kind: unknown kind '" + kind + "'");
}

DensityMatrix build_state(const StateSpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case StateSpec::Kind::Werner: return werner(p[0]);
    case StateSpec::Kind::Wc: return w_c_state(Vec3(p[0], p[1], p[2]));
    case StateSpec::Kind::Bell: return bell_projectors()[static_cast<std::size_t>(p[0])];
    case StateSpec::Kind::Product:
      return product_state(Vec3(p[0], p[1], p[2]), Vec3(p[3], p[4], p[5]));
    case StateSpec::Kind::MatrixFile: {
      std::ifstream in(spec.path);
      if (!in) throw Error(ErrorCode::ParseError, "state.file: cannot open '" + spec.path + "'");
      Json j;
      try {
        in >> j;
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, "state.file: " + std::string(e.what()));
      }
      HermitianOp op = [&] {
        try {
          return operator_from_json(j);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::NotHermitian) throw Error(ErrorCode::NotAState, e.what());
          throw;
        }
      }();
      if (op.dim() != 4) throw Error(ErrorCode::NotAState, "state.file: two-qubit (4x4) state required");
      return DensityMatrix(op);
    }
  }
  throw Error(ErrorCode::ParseError, "state.kind: unhandled");
}

std::string kind_name(StateSpec::Kind kind) {
  switch (kind) {
    case StateSpec::Kind::Werner: return "werner";
    case StateSpec::Kind::Wc: return "wc";
    case StateSpec::Kind::Bell: return "bell";
    case StateSpec::Kind::Product: return "product";
    case StateSpec::Kind::MatrixFile: return "matrix-file";
  }
  return "unknown";
}

Json config_to_json(const SolverConfig& cfg) {
  return Json{{"tol", cfg.tol},
              {"max_iters", cfg.max_iters},
              {"trust_ppt", cfg.trust_ppt},
              {"oracle",
               {{"restarts", cfg.oracle.restarts},
                {"max_iters", cfg.oracle.max_iters},
                {"tol", cfg.oracle.tol},
                {"seed", cfg.oracle.seed},
                {"grid_resolution", cfg.oracle.grid_resolution}}}};
}

SolverConfig config_from_json(const Json& j, SolverConfig base) {
  try {
    base.tol = j.value("tol", base.tol);
    base.max_iters = j.value("max_iters", base.max_iters);
    base.trust_ppt = j.value("trust_ppt", base.trust_ppt);
    if (j.contains("oracle")) {
      const Json& o = j["oracle"];
      base.oracle.restarts = o.value("restarts", base.oracle.restarts);
      base.oracle.max_iters = o.value("max_iters", base.oracle.max_iters);
      base.oracle.tol = o.value("tol", base.oracle.tol);
      base.oracle.seed = o.value("seed", base.oracle.seed);
      base.oracle.grid_resolution = o.value("grid_resolution", base.oracle.grid_resolution);
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
  return base;
}

Json distance_report_to_json(const DistanceReport& r) {
  Json atoms = Json::array();
  for (const auto& a : r.atoms) {
    atoms.push_back(
        {{"weight", json_number(a.weight)}, {"n", vec3_to_json(a.state.n())}, {"m", vec3_to_json(a.state.m())}});
  }
  return Json{{"distance", json_number(r.distance)},
              {"lower_bound", json_number(r.lower_bound)},
              {"upper_bound", json_number(r.upper_bound)},
              {"gap", json_number(r.gap)},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"minimizer", operator_to_json(r.minimizer.op())},
              {"atoms", atoms}};
}

Json witness_to_json(const Witness& w) {
  // Pauli form taken from the rounded matrix, so re-serializing is idempotent.
  const Json matrix = operator_to_json(w.op);
  return Json{{"matrix", matrix},
              {"sep_argmin", {{"n", vec3_to_json(w.sep_argmin.n())}, {"m", vec3_to_json(w.sep_argmin.m())}}},
              {"pauli", pauli_to_json(to_pauli(operator_from_json(matrix)))},
              {"sep_min", json_number(w.sep_min)},
              {"state_value", json_number(w.state_value)},
              {"violation", json_number(json_number(w.sep_min) - json_number(w.state_value))},
              {"normalized", w.normalized}};
}

namespace {

ProductState product_from_json(const Json& j) {
  const Vec3 n = vec3_from_json(j, "n");
  const Vec3 m = vec3_from_json(j, "m");
  if (std::abs(n.norm() - 1.0) > 1e-9 || std::abs(m.norm() - 1.0) > 1e-9)
    throw Error(ErrorCode::ParseError, "atom: n and m must be unit vectors");
  return ProductState::from_rounded(n, m);
}

}  // namespace

DistanceReport distance_report_from_json(const Json& j) {
  try {
    std::vector<WeightedProduct> atoms;
    for (const Json& a : j.at("atoms")) atoms.push_back({product_from_json(a), a.at("weight").get<double>()});
    return DistanceReport{j.at("distance").get<double>(),
                          j.at("lower_bound").get<double>(),
                          j.at("upper_bound").get<double>(),
                          j.at("gap").get<double>(),
                          j.at("iterations").get<int>(),
                          j.at("converged").get<bool>(),
                          atoms,
                          DensityMatrix(operator_from_json(j.at("minimizer"))),
                          {},
                          {}};
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("distance report: ") + e.what());
  }
}

Witness witness_from_json(const Json& j) {
  try {
    return Witness{operator_from_json(j.at("matrix")), j.at("sep_min").get<double>(),
                   product_from_json(j.at("sep_argmin")), j.at("state_value").get<double>(),
                   j.at("normalized").get<bool>()};
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("witness: ") + e.what());
  }
}

}  // namespace sepdist
