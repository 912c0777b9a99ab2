#include <doctest.h>

#include <cmath>

#include "sepdist/distance_solver.hpp"

using namespace sepdist;

namespace {

const double kSqrt3 = std::sqrt(3.0);

double werner_distance(double alpha) { return std::max(0.0, kSqrt3 / 2.0 * (alpha - 1.0 / 3.0)); }

}  // namespace

TEST_CASE("Werner line") {
  for (double alpha : {-1.0 / 3.0, 0.0, 0.2, 1.0 / 3.0, 0.4, 0.5, 2.0 / 3.0, 0.8, 1.0}) {
    CAPTURE(alpha);
    const DistanceReport r = distance(werner(alpha));
    CHECK(r.converged);
    CHECK(std::abs(r.distance - werner_distance(alpha)) < 1e-6);
  }
}

TEST_CASE("report is self-consistent") {
  Rng rng(derive_seed(4, 0));
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix w = random_state(4, rng);
    const DistanceReport r = distance(w);
    CHECK(r.converged);
    CHECK(r.lower_bound <= r.upper_bound);
    CHECK(r.gap < 1e-7);
    CHECK(r.distance == r.upper_bound);
    CHECK(std::abs(hs_norm(r.minimizer.op() - w.op()) - r.distance) < 1e-10);
    CHECK(is_ppt(r.minimizer));
    double total = 0.0;
    HermitianOp acc = HermitianOp::zero(4);
    for (const auto& a : r.atoms) {
      CHECK(a.weight > 0.0);
      total += a.weight;
      acc = acc + product_state(a.state).op() * a.weight;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hs_norm(acc - r.minimizer.op()) < 1e-12);
    REQUIRE(r.upper_trace.size() == r.lower_trace.size());
    for (std::size_t i = 1; i < r.upper_trace.size(); ++i) {
      CHECK(r.upper_trace[i] <= r.upper_trace[i - 1] + 1e-15);
      CHECK(r.lower_trace[i] >= r.lower_trace[i - 1]);
    }
    for (std::size_t i = 0; i < r.upper_trace.size(); ++i) {
      CHECK(r.lower_trace[i] <= r.distance + 1e-12);
      CHECK(r.distance <= r.upper_trace[i] + 1e-12);
    }
  }
}

TEST_CASE("separable inputs have zero distance") {
  Rng rng(derive_seed(4, 1));
  for (int k = 0; k < 20; ++k) {
    CHECK(distance(random_separable_state(rng)).distance < 1e-6);
    CHECK(distance(product_state(random_unit_vector(rng), random_unit_vector(rng))).distance < 1e-6);
  }
}

TEST_CASE("distance vanishes exactly on PPT states") {
  Rng rng(derive_seed(4, 2));
  for (int k = 0; k < 40; ++k) {
    const DensityMatrix w = random_state(4, rng);
    const double d = distance(w).distance;
    CHECK((d < 1e-6) == is_ppt(w));
    CHECK(d >= 0.0);
    CHECK(d <= std::sqrt(2.0));
  }
}

TEST_CASE("PPT fast path agrees with the solver") {
  Rng rng(derive_seed(4, 3));
  SolverConfig fast;
  fast.trust_ppt = true;
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix w = random_separable_state(rng);
    const DistanceReport f = distance(w, fast);
    CHECK(f.distance == 0.0);
    CHECK(f.atoms.empty());
    CHECK(hs_norm(f.minimizer.op() - w.op()) == 0.0);
    CHECK(distance(w).distance < 1e-6);
  }
  CHECK(distance(werner(1.0), fast).distance == doctest::Approx(1.0 / kSqrt3).epsilon(1e-8));
}

TEST_CASE("convexity, Lipschitz continuity, local-unitary invariance") {
  Rng rng(derive_seed(4, 4));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix a = random_state(4, rng), b = random_state(4, rng);
    const double t = unit(rng);
    const double da = distance(a).distance, db = distance(b).distance;
    const double dm = distance(mix(a, b, t)).distance;
    CHECK(dm <= t * da + (1.0 - t) * db + 1e-6);
    CHECK(std::abs(da - db) <= hs_norm(a.op() - b.op()) + 1e-6);
    const DensityMatrix u = apply_local_unitary(a, random_unitary(2, rng), random_unitary(2, rng));
    CHECK(std::abs(distance(u).distance - da) < 1e-6);
  }
}

TEST_CASE("variational bounds bracket the distance") {
  Rng rng(derive_seed(4, 5));
  const DensityMatrix w = werner(0.8);
  const double d = werner_distance(0.8);
  for (int k = 0; k < 20; ++k) {
    const VariationalBounds v = variational_bounds(w, random_separable_state(rng));
    CHECK(v.lower <= d + 1e-9);
    CHECK(v.upper >= d - 1e-9);
    CHECK(v.lower >= 0.0);
    CHECK(v.raw_lower <= v.lower);
  }
  const VariationalBounds exact = variational_bounds(w, werner(1.0 / 3.0));
  CHECK(exact.lower == doctest::Approx(d).epsilon(1e-9));
  CHECK(exact.upper == doctest::Approx(d).epsilon(1e-9));
  CHECK_THROWS_AS(variational_bounds(w, werner(0.5)), Error);
  CHECK_THROWS_AS(variational_bounds(werner(0.2), werner(0.2)), Error);
}

TEST_CASE("two-qubit inputs only") {
  CHECK_THROWS_AS(distance(qubit_state(Vec3::Zero())), Error);
}

TEST_CASE("one-spin model") {
  Rng rng(derive_seed(4, 6));
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  for (int k = 0; k < 30; ++k) {
    const Vec3 w = random_unit_vector(rng) * std::cbrt(radius(rng));
    const SzDistance exact = distance_sz_model(w);
    const SzReport num = distance_sz_numeric(w);
    CHECK(exact.distance == doctest::Approx(std::hypot(w(0), w(1)) / std::sqrt(2.0)));
    CHECK(exact.lambda_opt == w(2));
    CHECK(std::abs(num.distance - exact.distance) < 1e-8);
    CHECK(std::abs(num.lambda - exact.lambda_opt) < 1e-8);
  }
  CHECK(distance_sz_model(Vec3(0, 0, 0.3)).distance == 0.0);
  CHECK_THROWS_AS(distance_sz_model(Vec3(1, 1, 0)), Error);
  CHECK_THROWS_AS(qubit_state(Vec3(0, 0, 1.1)), Error);
}
