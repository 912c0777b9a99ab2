#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sepdist/states.hpp"

using namespace sepdist;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("Werner spectrum") {
  Rng rng(derive_seed(2, 5));
  std::uniform_real_distribution<double> u(-1.0 / 3.0, 1.0);
  std::vector<double> alphas{-1.0 / 3.0, 0.0, 0.2, 0.5, 1.0};
  for (int k = 0; k < 100; ++k) alphas.push_back(u(rng));
  for (double alpha : alphas) {
    const Eigen::VectorXd ev = eigenvalues(werner(alpha).op());
    Eigen::Vector4d expected((1.0 - alpha) / 4.0, (1.0 - alpha) / 4.0, (1.0 - alpha) / 4.0,
                             (1.0 + 3.0 * alpha) / 4.0);
    std::sort(expected.begin(), expected.end());
    CHECK((ev - expected).norm() < 1e-12);
  }
  CHECK(code_of([] { werner(1.2); }) == ErrorCode::NotAState);
  CHECK(code_of([] { werner(-0.4); }) == ErrorCode::NotAState);
}

TEST_CASE("Werner PPT threshold") {
  CHECK(is_ppt(werner(1.0 / 3.0)));
  CHECK_FALSE(is_ppt(werner(1.0 / 3.0 + 1e-6)));
  CHECK(is_ppt(werner(0.0)));
  CHECK(min_partial_transpose_eigenvalue(werner(1.0)) == doctest::Approx(-0.5));
  CHECK(werner(1.0).is_pure());
}

TEST_CASE("Bell projectors") {
  const auto p = bell_projectors();
  HermitianOp sum = HermitianOp::zero(4);
  for (int i = 0; i < 4; ++i) {
    CHECK(p[i].purity() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(is_ppt(p[i]));
    sum = sum + p[i].op();
    for (int j = i + 1; j < 4; ++j) CHECK(std::abs(hs_inner(p[i].op(), p[j].op())) < 1e-12);
  }
  CHECK(hs_norm(sum - HermitianOp::identity(4)) < 1e-12);
  CHECK(hs_norm(p[0].op() - werner(1.0).op()) < 1e-12);
}

TEST_CASE("w_c states: PPT iff sum |c| <= 1") {
  Rng rng(derive_seed(2, 0));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  while (checked < 10000) {
    const Vec3 c(u(rng), u(rng), u(rng));
    if (std::abs(c.cwiseAbs().sum() - 1.0) < 1e-6) continue;
    const double m1 = 1 - c(0) - c(1) - c(2), m2 = 1 - c(0) + c(1) + c(2), m3 = 1 + c(0) - c(1) + c(2),
                 m4 = 1 + c(0) + c(1) - c(2);
    if (std::min({m1, m2, m3, m4}) < 0.0) {
      CHECK(code_of([&] { w_c_state(c); }) == ErrorCode::NotAState);
      continue;
    }
    CHECK(is_ppt(w_c_state(c)) == (c.cwiseAbs().sum() <= 1.0));
    ++checked;
  }
}

TEST_CASE("equal mixture of opposite x products") {
  const DensityMatrix m = mix(product_state(Vec3::UnitX(), -Vec3::UnitX()), product_state(-Vec3::UnitX(), Vec3::UnitX()), 0.5);
  const CMatrix sxsx = kron(pauli(1), pauli(1));
  CHECK((m.op().matrix() - 0.25 * (CMatrix::Identity(4, 4) - sxsx)).norm() < 1e-14);
}

TEST_CASE("partial transpose is an involution and keeps the trace") {
  Rng rng(derive_seed(2, 1));
  for (int k = 0; k < 1000; ++k) {
    const HermitianOp x = random_hermitian(4, rng);
    CHECK(hs_norm(partial_transpose_b(partial_transpose_b(x)) - x) < 1e-14);
    CHECK(partial_transpose_b(x).trace() == doctest::Approx(x.trace()));
    CHECK(hs_norm(partial_transpose_b(x)) == doctest::Approx(hs_norm(x)));
  }
}

TEST_CASE("product states are separable, pure and match their coordinates") {
  Rng rng(derive_seed(2, 2));
  for (int k = 0; k < 100; ++k) {
    const ProductState s(random_unit_vector(rng), random_unit_vector(rng));
    const DensityMatrix rho = product_state(s);
    CHECK(rho.is_pure());
    CHECK(is_ppt(rho));
    CHECK((hs_coordinates(rho.op()) - Eigen::VectorXd(s.hs_coordinates())).norm() < 1e-12);
  }
  CHECK(code_of([] { ProductState(Vec3(1, 1, 0), Vec3::UnitZ()); }) == ErrorCode::NotUnitVector);
}

TEST_CASE("state validation") {
  CHECK(code_of([] { DensityMatrix(HermitianOp::identity(4)); }) == ErrorCode::NotAState);
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  CHECK(code_of([&] { DensityMatrix(HermitianOp(m)); }) == ErrorCode::NotAState);
  CHECK_FALSE(is_state(HermitianOp(m)));
  CHECK(is_state(werner(0.3).op()));
}

TEST_CASE("mixtures and random states") {
  Rng rng(derive_seed(2, 3));
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix a = random_state(4, rng), b = random_separable_state(rng);
    CHECK(is_ppt(b));
    const DensityMatrix m = mix(a, b, 0.3);
    CHECK(hs_norm(m.op() - (0.3 * a.op() + 0.7 * b.op())) < 1e-14);
    CHECK(a.purity() <= 1.0 + 1e-12);
  }
}

TEST_CASE("local unitaries preserve spectrum and PT spectrum") {
  Rng rng(derive_seed(2, 4));
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix w = random_state(4, rng);
    const DensityMatrix v = apply_local_unitary(w, random_unitary(2, rng), random_unitary(2, rng));
    CHECK((eigenvalues(w.op()) - eigenvalues(v.op())).norm() < 1e-12);
    CHECK(min_partial_transpose_eigenvalue(w) == doctest::Approx(min_partial_transpose_eigenvalue(v)).epsilon(1e-10));
    if (std::abs(min_partial_transpose_eigenvalue(w)) > 1e-9) CHECK(is_ppt(w) == is_ppt(v));
  }
}
