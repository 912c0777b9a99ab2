#include "sepdist/bell_classic.hpp"

#include <algorithm>
#include <cmath>

namespace sepdist {

namespace {

void require_unit(const Vec3& v) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitTol) {
    throw Error(ErrorCode::NotUnitVector, "setting directions must be unit vectors");
  }
}

HermitianOp correlation_operator(const Mat3& c) {
  PauliCoeffs2Q p;
  p.c = c;
  return from_pauli(p);
}

Vec3 unit_or(const Vec3& v, const Vec3& fallback) {
  const double n = v.norm();
  return n > 1e-300 ? Vec3(v / n) : fallback;
}

ChshOptimum chsh_search(const Mat3& t, const SettingSearch& search) {
  ChshOptimum best{-std::numeric_limits<double>::infinity(), {}, {}};
  std::vector<ChshOptimum> found(static_cast<std::size_t>(search.starts), best);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < search.starts; ++k) {
    Rng rng(derive_seed(search.seed, static_cast<std::uint64_t>(k)));
    ChshSetting s{random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng),
                  random_unit_vector(rng)};
    double value = chsh_value(t, s);
    for (int it = 0; it < search.max_iters; ++it) {
      // Each block is the exact maximizer of a linear function on the sphere.
      s.a = unit_or(t * (s.b - s.b_prime), s.a);
      s.a_prime = unit_or(t * (s.b + s.b_prime), s.a_prime);
      s.b = unit_or(t.transpose() * (s.a + s.a_prime), s.b);
      s.b_prime = unit_or(t.transpose() * (s.a_prime - s.a), s.b_prime);
      const double next = chsh_value(t, s);
      const double gain = next - value;
      value = next;
      if (gain < search.tol) break;
    }
    found[static_cast<std::size_t>(k)] = {value, s, {}};
  }
  for (const auto& f : found)
    if (f.value > best.value) best = f;
  const ChshSetting& s = best.setting;
  best.angles = {angle_between(s.a, s.b), angle_between(s.a_prime, s.b),
                 angle_between(s.a_prime, s.b_prime), angle_between(s.a, s.b_prime)};
  return best;
}

}  // namespace

Mat3 correlation_matrix(const HermitianOp& rho) { return 4.0 * to_pauli(rho).c; }

HermitianOp chsh_operator(const ChshSetting& s) {
  for (const Vec3* v : {&s.a, &s.a_prime, &s.b, &s.b_prime}) require_unit(*v);
  return correlation_operator(s.a * (s.b - s.b_prime).transpose() +
                              s.a_prime * (s.b + s.b_prime).transpose());
}

HermitianOp bell_operator(const BellSetting& s) {
  for (const Vec3* v : {&s.a, &s.b, &s.b_prime}) require_unit(*v);
  return correlation_operator(s.a * (s.b - s.b_prime).transpose() -
                              s.b_prime * s.b.transpose());
}

double chsh_value(const Mat3& t, const ChshSetting& s) {
  return s.a.dot(t * (s.b - s.b_prime)) + s.a_prime.dot(t * (s.b + s.b_prime));
}

double bell_value(const Mat3& t, const BellSetting& s) {
  return s.a.dot(t * (s.b - s.b_prime)) - s.b_prime.dot(t * s.b);
}

double chsh_singlet_value(const ChshSetting& s) {
  return -s.a.dot(s.b - s.b_prime) - s.a_prime.dot(s.b + s.b_prime);
}

double bell_singlet_value(const BellSetting& s) {
  return -s.a.dot(s.b - s.b_prime) + s.b_prime.dot(s.b);
}

double angle_between(const Vec3& u, const Vec3& v) {
  return std::acos(std::clamp(u.normalized().dot(v.normalized()), -1.0, 1.0));
}

Mat3 canonical_frame(const Vec3& first, const Vec3& second) {
  const Vec3 e3 = first.normalized();
  Vec3 e1 = second - second.dot(e3) * e3;
  if (e1.norm() < 1e-12) e1 = e3.unitOrthogonal();
  e1.normalize();
  const Vec3 e2 = e3.cross(e1);
  Mat3 r;
  r.row(0) = e1;
  r.row(1) = e2;
  r.row(2) = e3;
  return r;
}

ChshOptimum chsh_max_for_state(const DensityMatrix& rho, const SettingSearch& search) {
  return chsh_search(correlation_matrix(rho.op()), search);
}

ChshOptimum chsh_max_violation(const SettingSearch& search) {
  ChshOptimum opt = chsh_max_for_state(werner(1.0), search);
  const Mat3 r = canonical_frame(opt.setting.a, opt.setting.a_prime);
  opt.setting = {r * opt.setting.a, r * opt.setting.a_prime, r * opt.setting.b,
                 r * opt.setting.b_prime};
  return opt;
}

BellOptimum bell_max_violation(const SettingSearch& search, const OracleConfig& cfg) {
  const Mat3 t = correlation_matrix(werner(1.0).op());
  std::vector<std::pair<double, BellSetting>> found(static_cast<std::size_t>(search.starts));
#pragma omp parallel for schedule(static)
  for (int k = 0; k < search.starts; ++k) {
    Rng rng(derive_seed(search.seed, static_cast<std::uint64_t>(k)));
    BellSetting s{random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng)};
    double value = bell_value(t, s);
    for (int it = 0; it < search.max_iters; ++it) {
      s.a = unit_or(t * (s.b - s.b_prime), s.a);
      s.b = unit_or(t.transpose() * (s.a - s.b_prime), s.b);
      s.b_prime = unit_or(-(t.transpose() * s.a + t * s.b), s.b_prime);
      const double next = bell_value(t, s);
      const double gain = next - value;
      value = next;
      if (gain < search.tol) break;
    }
    found[static_cast<std::size_t>(k)] = {value, s};
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < found.size(); ++k)
    if (found[k].first > found[best].first) best = k;

  BellSetting s = found[best].second;
  const Mat3 r = canonical_frame(s.a, s.b);
  s = {r * s.a, r * s.b, r * s.b_prime};
  const HermitianOp op = bell_operator(s);
  return {found[best].first,
          s,
          {angle_between(s.a, s.b_prime), angle_between(s.b_prime, s.b), angle_between(s.a, s.b)},
          max_over_anticorrelated(op, cfg).value,
          max_over_separable(op, cfg).value};
}

std::vector<SummaryRow> violation_summary(const SettingSearch& search, const OracleConfig& cfg) {
  std::vector<SummaryRow> rows;

  PauliCoeffs2Q p;
  p.c = -Mat3::Identity();
  const HermitianOp gbi = from_pauli(p);
  const double gbi_sep = max_over_separable(gbi, cfg).value;
  const double gbi_singlet = hs_inner(werner(1.0).op(), gbi);
  rows.push_back({"GBI", gbi_sep, gbi_singlet, gbi_singlet - gbi_sep, 2.0});

  const ChshOptimum chsh = chsh_max_violation(search);
  const double chsh_sep = max_over_separable(chsh_operator(chsh.setting), cfg).value;
  rows.push_back({"CHSH", chsh_sep, chsh.value, chsh.value - chsh_sep, std::sqrt(2.0)});

  const BellOptimum bell = bell_max_violation(search, cfg);
  rows.push_back({"Bell", bell.sep_anticorr_max, bell.value, bell.value - bell.sep_anticorr_max,
                  0.75});
  return rows;
}

}  // namespace sepdist
