#include "sepdist/reproduce.hpp"

#include <cmath>
#include <cstdio>

#include "sepdist/bell_classic.hpp"
#include "sepdist/geometry.hpp"
#include "sepdist/witness.hpp"

namespace sepdist {

namespace {

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

HermitianOp sigma_dot_sigma(double scale) {
  PauliCoeffs2Q p;
  p.c = scale * Mat3::Identity();
  return from_pauli(p);
}

HermitianOp flip_operator() {
  PauliCoeffs2Q p;
  p.alpha = 0.25;
  p.c = 0.25 * Mat3::Identity();
  return from_pauli(p);
}

}  // namespace

std::vector<Claim> reference_claims(const SolverConfig& cfg) {
  const double s3 = std::sqrt(3.0);
  const double s2 = std::sqrt(2.0);
  std::vector<Claim> c;
  const auto eq = Comparison::Equal;

  c.push_back({"pauli.norm(sA.sB)", "pauli", 2.0 * s3, 1e-12, eq,
               [] { return hs_norm(sigma_dot_sigma(1.0)); }});
  c.push_back({"pauli.(w1|-sA.sB)", "pauli", 3.0, 1e-12, eq,
               [] { return hs_inner(werner(1.0).op(), sigma_dot_sigma(-1.0)); }});
  c.push_back({"states.purity(P0)", "states", 1.0, 1e-12, eq,
               [] { return bell_projectors()[0].purity(); }});
  c.push_back({"states.ppt(werner(1/3))", "states", 1.0, 0.0, eq,
               [] { return is_ppt(werner(1.0 / 3.0)) ? 1.0 : 0.0; }});
  c.push_back({"states.ppt(werner(1))", "states", 0.0, 0.0, eq,
               [] { return is_ppt(werner(1.0)) ? 1.0 : 0.0; }});
  c.push_back({"states.pt(flip)", "states", 0.0, 1e-12, eq, [] {
                 CMatrix expected = CMatrix::Zero(4, 4);
                 expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
                 return (partial_transpose_b(flip_operator()).matrix() - expected).norm();
               }});

  for (double alpha : {0.4, 0.5, 2.0 / 3.0, 0.8, 1.0}) {
    const double expected = s3 / 2.0 * (alpha - 1.0 / 3.0);
    c.push_back({fmt("werner.D(%.4g)", alpha), "werner", expected, 1e-6, eq,
                 [=] { return distance(werner(alpha), cfg).distance; }});
    c.push_back({fmt("werner.B(%.4g)", alpha), "werner", expected, 1e-6, eq,
                 [=] { return b_of_w(werner(alpha), cfg); }});
  }
  for (double alpha : {-1.0 / 3.0, 0.0, 0.2, 1.0 / 3.0}) {
    c.push_back({fmt("werner.D(%.4g)", alpha), "werner", 0.0, 1e-6, eq,
                 [=] { return distance(werner(alpha), cfg).distance; }});
  }
  // rho0 is only determined to about sqrt(2 D gap) along the face of S.
  c.push_back({"werner.rho0(1)=werner(1/3)", "werner", 0.0, 1e-5, eq, [=] {
                 return hs_norm(check_theorem(werner(1.0), cfg).report.minimizer.op() -
                                werner(1.0 / 3.0).op());
               }});
  // With the GBI written as (rho|A) >= min_S > (w|A) the singlet witness is
  // +sA.sB/2sqrt3; -sA.sB is the same inequality read as an upper bound.
  c.push_back({"witness.Amax(w1)=sA.sB/2sqrt3", "witness", 0.0, 1e-12, eq, [=] {
                 const HermitianOp a = a_max_operator(werner(1.0).op(), werner(1.0 / 3.0).op());
                 const HermitianOp traceless = a - HermitianOp::identity(4) * (a.trace() / 4.0);
                 return hs_norm(traceless - sigma_dot_sigma(1.0 / (2.0 * std::sqrt(3.0))));
               }});
  c.push_back({"witness.sep_min(flip)", "witness", 0.0, 1e-9, eq,
               [=] { return min_over_separable(flip_operator(), cfg.oracle).value; }});
  c.push_back({"witness.sensitivity(eps=0)", "witness", 0.0, 1e-15, eq,
               [] { return witness_sensitivity(Vec3::UnitZ(), Mat3::Zero()); }});

  c.push_back({"gbi.sep_max(-sA.sB)", "gbi", 1.0, 1e-9, eq,
               [=] { return max_over_separable(sigma_dot_sigma(-1.0), cfg.oracle).value; }});
  c.push_back({"gbi.singlet(-sA.sB)", "gbi", 3.0, 1e-9, eq,
               [] { return hs_inner(werner(1.0).op(), sigma_dot_sigma(-1.0)); }});

  c.push_back({"chsh.singlet_max", "chsh", 2.0 * s2, 1e-9, eq, [] { return chsh_max_violation().value; }});
  c.push_back({"chsh.sep_max", "chsh", s2, 1e-6, eq, [=] {
                 return max_over_separable(chsh_operator(chsh_max_violation().setting), cfg.oracle).value;
               }});
  c.push_back({"chsh.werner(0.5)_max<=2", "chsh", 2.0, 1e-9, Comparison::AtMost,
               [] { return chsh_max_for_state(werner(0.5)).value; }});

  c.push_back({"bell.singlet_max", "bell", 1.5, 1e-9, eq, [] { return bell_max_violation().value; }});
  c.push_back({"bell.sep_anticorr_max", "bell", 0.75, 1e-6, eq,
               [=] { return bell_max_violation({}, cfg.oracle).sep_anticorr_max; }});
  c.push_back({"bell.sep_all_max", "bell", s3 / 2.0, 1e-6, eq,
               [=] { return bell_max_violation({}, cfg.oracle).sep_all_max; }});

  c.push_back({"sz.D(1,0,0)", "sz", 1.0 / s2, 1e-8, eq,
               [=] { return distance_sz_numeric(Vec3(1, 0, 0), cfg).distance; }});
  c.push_back({"sz.D(0.6,0.8,0)", "sz", 1.0 / s2, 1e-8, eq,
               [=] { return distance_sz_numeric(Vec3(0.6, 0.8, 0), cfg).distance; }});
  c.push_back({"sz.D(0.3,0.4,0.5)", "sz", 0.5 / s2, 1e-8, eq,
               [=] { return distance_sz_numeric(Vec3(0.3, 0.4, 0.5), cfg).distance; }});

  c.push_back({"geometry.disagreements(21^3)", "geometry", 0.0, 0.0, eq, [] {
                 int bad = 0;
                 for (const auto& s : sample_regions(21)) {
                   const bool both = s.in_tetrahedron && s.in_mirror;
                   bool ppt = false;
                   if (s.in_tetrahedron) ppt = is_ppt(w_c_state(s.c));
                   if (both != s.separable || (s.in_tetrahedron && ppt != s.separable)) ++bad;
                 }
                 return static_cast<double>(bad);
               }});
  c.push_back({"geometry.octahedron_fraction(21^3)", "geometry", 1.0 / 6.0, 0.05 / 6.0, eq, [] {
                 const auto samples = sample_regions(21);
                 int sep = 0;
                 for (const auto& s : samples) sep += s.separable ? 1 : 0;
                 return static_cast<double>(sep) / static_cast<double>(samples.size());
               }});
  return c;
}

std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims, const std::string& filter) {
  std::vector<const Claim*> selected;
  for (const auto& cl : claims)
    if (filter.empty() || cl.group == filter || cl.id.rfind(filter, 0) == 0)
      selected.push_back(&cl);

  std::vector<ClaimResult> out(selected.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < selected.size(); ++k) {
    const Claim& cl = *selected[k];
    const double v = cl.compute();
    const double delta = std::abs(v - cl.reference);
    bool pass = false;
    switch (cl.comparison) {
      case Comparison::Equal: pass = delta <= cl.tolerance; break;
      case Comparison::AtMost: pass = v <= cl.reference + cl.tolerance; break;
      case Comparison::AtLeast: pass = v >= cl.reference - cl.tolerance; break;
    }
    out[k] = {cl.id, cl.group, cl.reference, v, delta, cl.tolerance, pass};
  }
  return out;
}

}  // namespace sepdist
