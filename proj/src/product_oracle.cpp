#include "sepdist/product_oracle.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sepdist {

namespace {

constexpr double kDegenerate = 1e-300;
constexpr int kAxisStarts = 6;

struct StartOutcome {
  double value;
  Vec3 n;
  Vec3 m;
  bool converged;
};

// Unit vector minimizing v . x, or `fallback` if v vanishes.
Vec3 minimizing_direction(const Vec3& v, const Vec3& fallback) {
  const double norm = v.norm();
  return norm > kDegenerate ? Vec3(-v / norm) : fallback;
}

Vec3 axis_start(int k) {
  Vec3 v = Vec3::Zero();
  v(k / 2) = (k % 2 == 0) ? 1.0 : -1.0;
  return v;
}

Vec3 start_direction(int k, std::uint64_t seed) {
  if (k < kAxisStarts) return axis_start(k);
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
  return random_unit_vector(rng);
}

// Riemannian Newton on g(n) = alpha + n.a - |b + C^T n|, the objective with m
// minimized out. The see-saw is linearly convergent and crawls when the two
// blocks are nearly degenerate; a few safeguarded Newton steps finish the job.
// Steps are kept only if they decrease g, so the result never gets worse.
void newton_polish(const BilinearForm& f, Vec3& n, Vec3& m) {
  constexpr int kNewtonSteps = 30;
  auto g = [&](const Vec3& x) { return f.alpha + x.dot(f.a) - (f.b + f.c.transpose() * x).norm(); };
  double value = g(n);
  for (int it = 0; it < kNewtonSteps; ++it) {
    const Vec3 v = f.b + f.c.transpose() * n;
    const double vn = v.norm();
    if (vn <= 1e-12) break;
    const Vec3 vh = v / vn;
    const Vec3 grad = f.a - f.c * vh;
    const Mat3 hess = -(f.c * (Mat3::Identity() - vh * vh.transpose()) * f.c.transpose()) / vn;
    const Vec3 e1 = n.unitOrthogonal();
    const Vec3 e2 = n.cross(e1);
    Eigen::Matrix<double, 3, 2> basis;
    basis << e1, e2;
    const Eigen::Vector2d g2 = basis.transpose() * grad;
    if (g2.norm() < 1e-15) break;
    const Eigen::Matrix2d h2 =
        basis.transpose() * hess * basis - n.dot(grad) * Eigen::Matrix2d::Identity();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(h2);
    if (eig.eigenvalues()(0) <= 1e-12) break;  // not locally convex: leave it to the see-saw
    const Vec3 step = -basis * h2.ldlt().solve(g2);
    const Vec3 next = (n + step).normalized();
    const double next_value = g(next);
    if (!(next_value < value)) break;
    n = next;
    value = next_value;
  }
  m = minimizing_direction(f.b + f.c.transpose() * n, m);
}

// Alternating exact minimization in n and m. Each half step minimizes a
// linear function over the sphere, so the objective never increases.
StartOutcome see_saw(const BilinearForm& f, const Vec3& n0, const OracleConfig& cfg,
                     std::vector<double>* trace) {
  Vec3 n = n0;
  Vec3 m = minimizing_direction(f.b + f.c.transpose() * n, Vec3::UnitZ());
  double value = f(n, m);
  if (trace) trace->push_back(value);
  bool converged = false;
  for (int it = 0; it < cfg.max_iters; ++it) {
    const Vec3 gn = f.a + f.c * m;
    if (gn.norm() <= kDegenerate) {
      converged = true;
      break;
    }
    n = -gn.normalized();
    m = minimizing_direction(f.b + f.c.transpose() * n, m);
    const double next = f(n, m);
    assert(next <= value + 1e-12);
    if (trace) trace->push_back(next);
    const double improvement = value - next;
    value = std::min(value, next);
    if (improvement < cfg.tol) {
      converged = true;
      break;
    }
  }
  newton_polish(f, n, m);
  return {f(n, m), n, m, converged};
}

// Best outcome; ties go to the lowest start index.
OracleResult reduce(const std::vector<StartOutcome>& outcomes, bool negate) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k)
    if (outcomes[k].value < outcomes[best].value) best = k;
  const StartOutcome& o = outcomes[best];
  OracleResult r{negate ? -o.value : o.value, ProductState(o.n, o.m),
                 static_cast<int>(outcomes.size()), o.converged};
  return r;
}

int start_count(const OracleConfig& cfg) { return kAxisStarts + std::max(0, cfg.restarts); }

OracleResult multistart_min(const BilinearForm& f, const OracleConfig& cfg, bool negate,
                            bool parallel) {
  const int total = start_count(cfg);
  std::vector<StartOutcome> outcomes(static_cast<std::size_t>(total));
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < total; ++k)
      outcomes[static_cast<std::size_t>(k)] = see_saw(f, start_direction(k, cfg.seed), cfg, nullptr);
  } else {
    for (int k = 0; k < total; ++k)
      outcomes[static_cast<std::size_t>(k)] = see_saw(f, start_direction(k, cfg.seed), cfg, nullptr);
  }
  return reduce(outcomes, negate);
}

struct GridBest {
  double value = std::numeric_limits<double>::infinity();
  int index = -1;
};

// Inner minimum over m for fixed n: alpha + n.a - |b + C^T n|.
double grid_value(const BilinearForm& f, const Vec3& n) {
  return f.alpha + n.dot(f.a) - (f.b + f.c.transpose() * n).norm();
}

OracleResult grid_result(const BilinearForm& f, const std::vector<Vec3>& grid, GridBest best,
                         bool negate) {
  const Vec3& n = grid[static_cast<std::size_t>(best.index)];
  const Vec3 m = minimizing_direction(f.b + f.c.transpose() * n, Vec3::UnitZ());
  const double value = f(n, m);
  return {negate ? -value : value, ProductState(n, m), 1, true};
}

OracleResult grid_min(const BilinearForm& f, int resolution, bool negate, bool parallel) {
  const std::vector<Vec3> grid = fibonacci_sphere(resolution * resolution);
  const int count = static_cast<int>(grid.size());
  GridBest best;
  if (parallel) {
#pragma omp parallel
    {
      GridBest local;
#pragma omp for schedule(static) nowait
      for (int k = 0; k < count; ++k) {
        const double v = grid_value(f, grid[static_cast<std::size_t>(k)]);
        if (v < local.value) local = {v, k};
      }
#pragma omp critical
      {
        if (local.value < best.value || (local.value == best.value && local.index < best.index))
          best = local;
      }
    }
  } else {
    for (int k = 0; k < count; ++k) {
      const double v = grid_value(f, grid[static_cast<std::size_t>(k)]);
      if (v < best.value) best = {v, k};
    }
  }
  return grid_result(f, grid, best, negate);
}

}  // namespace

BilinearForm BilinearForm::from(const HermitianOp& x) { return from(to_pauli(x)); }

BilinearForm BilinearForm::from(const PauliCoeffs2Q& p) { return {p.alpha, p.a, p.b, p.c}; }

OracleResult min_over_separable(const HermitianOp& x, const OracleConfig& cfg) {
  return multistart_min(BilinearForm::from(x), cfg, false, true);
}

OracleResult min_over_separable(const BilinearForm& form, const OracleConfig& cfg) {
  return multistart_min(form, cfg, false, true);
}

OracleResult max_over_separable(const HermitianOp& x, const OracleConfig& cfg) {
  return multistart_min(BilinearForm::from(x).negated(), cfg, true, true);
}

OracleResult max_over_anticorrelated(const HermitianOp& x, const OracleConfig& cfg) {
  const BilinearForm f = BilinearForm::from(x);
  // With m = -n the objective is alpha + n.l + n^T M n.
  const Vec3 l = f.a - f.b;
  const Mat3 quad = -0.5 * (f.c + f.c.transpose());
  const double shift = quad.norm();
  const Mat3 shifted = quad + shift * Mat3::Identity();
  auto objective = [&](const Vec3& n) { return f.alpha + n.dot(l) + n.dot(quad * n); };

  const int total = start_count(cfg);
  std::vector<StartOutcome> outcomes(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (int k = 0; k < total; ++k) {
    Vec3 n = start_direction(k, cfg.seed);
    double value = objective(n);
    bool converged = false;
    for (int it = 0; it < cfg.max_iters; ++it) {
      // Maximizer of the linear minorant of the convex part on the sphere.
      const Vec3 g = l + 2.0 * shifted * n;
      if (g.norm() <= kDegenerate) {
        converged = true;
        break;
      }
      n = g.normalized();
      const double next = objective(n);
      assert(next >= value - 1e-12);
      const double improvement = next - value;
      value = std::max(value, next);
      if (improvement < cfg.tol) {
        converged = true;
        break;
      }
    }
    // Stored negated so reduce() picks the maximum.
    outcomes[static_cast<std::size_t>(k)] = {-objective(n), n, -n, converged};
  }
  return reduce(outcomes, true);
}

OracleResult grid_oracle_min(const HermitianOp& x, int resolution) {
  if (resolution < 8) throw std::invalid_argument("grid resolution must be at least 8");
  return grid_min(BilinearForm::from(x), resolution, false, true);
}

OracleResult grid_oracle_max(const HermitianOp& x, int resolution) {
  if (resolution < 8) throw std::invalid_argument("grid resolution must be at least 8");
  return grid_min(BilinearForm::from(x).negated(), resolution, true, true);
}

std::vector<Vec3> fibonacci_sphere(int count) {
  std::vector<Vec3> points;
  points.reserve(static_cast<std::size_t>(count));
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * k;
    points.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return points;
}

std::vector<double> see_saw_trace(const BilinearForm& form, const Vec3& n0,
                                  const OracleConfig& cfg) {
  std::vector<double> trace;
  see_saw(form, n0, cfg, &trace);
  return trace;
}

namespace serial {

OracleResult min_over_separable(const HermitianOp& x, const OracleConfig& cfg) {
  return multistart_min(BilinearForm::from(x), cfg, false, false);
}

OracleResult grid_oracle_min(const HermitianOp& x, int resolution) {
  if (resolution < 8) throw std::invalid_argument("grid resolution must be at least 8");
  return grid_min(BilinearForm::from(x), resolution, false, false);
}

}  // namespace serial

}  // namespace sepdist
