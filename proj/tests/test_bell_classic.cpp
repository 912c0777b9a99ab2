#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sepdist/bell_classic.hpp"
#include "sepdist/distance_solver.hpp"

using namespace sepdist;

namespace {

ChshSetting random_chsh(Rng& rng) {
  return {random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng)};
}

std::vector<double> sorted_degrees(std::vector<double> radians) {
  for (double& r : radians) r *= 180.0 / M_PI;
  std::sort(radians.begin(), radians.end());
  return radians;
}

Mat3 random_rotation(Rng& rng) {
  const Vec3 u = random_unit_vector(rng), v = random_unit_vector(rng);
  return canonical_frame(u, v);
}

}  // namespace

TEST_CASE("closed forms match the operator expectation") {
  Rng rng(derive_seed(6, 0));
  const HermitianOp singlet = werner(1.0).op();
  for (int k = 0; k < 1000; ++k) {
    const ChshSetting s = random_chsh(rng);
    REQUIRE(std::abs(chsh_singlet_value(s) - hs_inner(singlet, chsh_operator(s))) < 1e-10);
    const BellSetting b{s.a, s.b, s.b_prime};
    REQUIRE(std::abs(bell_singlet_value(b) - hs_inner(singlet, bell_operator(b))) < 1e-10);
  }
}

TEST_CASE("correlation matrix route") {
  Rng rng(derive_seed(6, 1));
  CHECK((correlation_matrix(werner(1.0).op()) + Mat3::Identity()).norm() < 1e-12);
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix rho = random_state(4, rng);
    const ChshSetting s = random_chsh(rng);
    CHECK(chsh_value(correlation_matrix(rho.op()), s) == doctest::Approx(hs_inner(rho.op(), chsh_operator(s))).epsilon(1e-12));
  }
}

TEST_CASE("rotation covariance of singlet values") {
  Rng rng(derive_seed(6, 2));
  for (int k = 0; k < 200; ++k) {
    const ChshSetting s = random_chsh(rng);
    const Mat3 r = random_rotation(rng);
    CHECK((r * r.transpose() - Mat3::Identity()).norm() < 1e-12);
    const ChshSetting t{r * s.a, r * s.a_prime, r * s.b, r * s.b_prime};
    CHECK(std::abs(chsh_singlet_value(s) - chsh_singlet_value(t)) < 1e-10);
  }
}

TEST_CASE("separable states obey the classical CHSH bound") {
  Rng rng(derive_seed(6, 3));
  for (int k = 0; k < 30; ++k) {
    const HermitianOp op = chsh_operator(random_chsh(rng));
    CHECK(max_over_separable(op).value <= 2.0 + 1e-12);
    CHECK(min_over_separable(op).value >= -2.0 - 1e-12);
  }
}

TEST_CASE("classical range on random separable states") {
  Rng rng(derive_seed(6, 4));
  for (int k = 0; k < 1000; ++k) {
    const double v = hs_inner(random_separable_state(rng).op(), chsh_operator(random_chsh(rng)));
    REQUIRE(std::abs(v) <= 2.0 + 1e-9);
  }
}

TEST_CASE("unit vectors are required") {
  CHECK_THROWS_AS(chsh_operator({Vec3::UnitZ(), Vec3(2, 0, 0), Vec3::UnitX(), Vec3::UnitZ()}), Error);
  CHECK_THROWS_AS(bell_operator({Vec3::Zero(), Vec3::UnitX(), Vec3::UnitZ()}), Error);
}

TEST_CASE("optimal CHSH setting") {
  const ChshOptimum opt = chsh_max_violation();
  CHECK(std::abs(opt.value - 2.0 * std::sqrt(2.0)) < 1e-9);
  const auto deg = sorted_degrees({opt.angles.begin(), opt.angles.end()});
  const double expected[] = {45.0, 135.0, 135.0, 135.0};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(deg[i] - expected[i]) < 1e-6);
  CHECK((opt.setting.a - Vec3::UnitZ()).norm() < 1e-12);
  CHECK(std::abs(opt.setting.a_prime(1)) < 1e-12);
  CHECK(max_over_separable(chsh_operator(opt.setting)).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("optimal Bell setting") {
  const BellOptimum opt = bell_max_violation();
  CHECK(std::abs(opt.value - 1.5) < 1e-9);
  const auto deg = sorted_degrees({opt.angles.begin(), opt.angles.end()});
  CHECK(std::abs(deg[0] - 60.0) < 1e-6);
  CHECK(std::abs(deg[1] - 60.0) < 1e-6);
  CHECK(std::abs(deg[2] - 120.0) < 1e-6);
  CHECK(std::abs(opt.sep_anticorr_max - 0.75) < 1e-6);
  CHECK(std::abs(opt.sep_all_max - std::sqrt(3.0) / 2.0) < 1e-6);
}

TEST_CASE("Werner(1/2) is entangled yet satisfies CHSH") {
  CHECK(chsh_max_for_state(werner(0.5)).value <= 2.0 + 1e-9);
  CHECK(chsh_max_for_state(werner(0.5)).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(chsh_max_for_state(werner(1.0)).value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("entangled Werner states below 1/sqrt2 satisfy CHSH") {
  for (double alpha : {0.34, 0.4, 0.5, 0.6, 0.7, 0.707}) {
    CAPTURE(alpha);
    CHECK(distance(werner(alpha)).distance > 0.0);
    CHECK(chsh_max_for_state(werner(alpha)).value <= 2.0 + 1e-9);
  }
}

TEST_CASE("violation summary") {
  const auto rows = violation_summary();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].observable == "GBI");
  CHECK(rows[0].difference == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rows[1].difference == doctest::Approx(2.0 * std::sqrt(2.0) - std::sqrt(2.0)).epsilon(1e-9));
  CHECK(rows[2].difference == doctest::Approx(0.75).epsilon(1e-6));
  for (const auto& r : rows) CHECK(std::abs(r.difference - r.expected_difference) < 1e-6);
}
