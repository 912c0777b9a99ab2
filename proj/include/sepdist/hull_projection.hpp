#pragma once

// Minimum-norm-point projection onto the convex hull of a set given only by a
// linear minimization oracle (Gilbert's setting). Each major step queries the
// oracle along the current residual, which also yields the certified lower
// bound  min_p <p - target, u>,  u = residual / |residual|.  The active atoms
// are then re-weighted by exact affine minimization over the corral (Wolfe),
// falling back to Gilbert's closed-form line search if that ever fails to
// decrease the residual.

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace sepdist {

template <class Atom>
struct HullPoint {
  Atom atom;
  Eigen::VectorXd coords;
};

struct ProjectionSettings {
  double tol = 1e-7;
  int max_iters = 10000;
};

template <class Atom>
struct ProjectionResult {
  std::vector<HullPoint<Atom>> atoms;
  std::vector<double> weights;
  Eigen::VectorXd point;
  double upper = 0.0;
  double lower = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> upper_trace;
  std::vector<double> lower_trace;
};

namespace detail {

constexpr double kWeightFloor = 1e-14;

// Weights mu with sum 1 minimizing |sum mu_i p_i|.
inline Eigen::VectorXd affine_minimizer(const Eigen::MatrixXd& points) {
  const Eigen::Index k = points.cols();
  Eigen::VectorXd mu(k);
  if (k == 1) {
    mu(0) = 1.0;
    return mu;
  }
  const Eigen::MatrixXd diffs = points.rightCols(k - 1).colwise() - points.col(0);
  const Eigen::VectorXd y = diffs.completeOrthogonalDecomposition().solve(-points.col(0));
  mu(0) = 1.0 - y.sum();
  mu.tail(k - 1) = y;
  return mu;
}

}  // namespace detail

/// Projects `target` onto conv{oracle atoms}. `oracle(direction)` must return
/// the atom minimizing <coords, direction>. Initial weights must sum to 1.
template <class Atom, class Oracle>
ProjectionResult<Atom> project_onto_hull(const Eigen::VectorXd& target,
                                         std::vector<HullPoint<Atom>> atoms,
                                         std::vector<double> weights, Oracle&& oracle,
                                         const ProjectionSettings& settings) {
  ProjectionResult<Atom> out;
  auto residual_of = [&](const std::vector<double>& wts) {
    Eigen::VectorXd r = -target;
    for (std::size_t i = 0; i < atoms.size(); ++i) r += wts[i] * atoms[i].coords;
    return r;
  };

  Eigen::VectorXd x = residual_of(weights);
  double best_lower = 0.0;
  int it = 0;
  for (; it < settings.max_iters; ++it) {
    const double upper = x.norm();
    if (upper <= 1e-15) {
      out.upper_trace.push_back(upper);
      out.lower_trace.push_back(0.0);
      out.converged = true;
      break;
    }
    HullPoint<Atom> q = oracle(x);
    const Eigen::VectorXd qp = q.coords - target;
    const double support = qp.dot(x);
    best_lower = std::max(best_lower, support / upper);
    out.upper_trace.push_back(upper);
    out.lower_trace.push_back(best_lower);
    if (upper - best_lower < settings.tol) {
      out.converged = true;
      break;
    }
    // No atom improves on the current point; further steps cannot help.
    if (upper * upper - support <= 1e-15 * upper * upper) break;

    const std::vector<HullPoint<Atom>> prev_atoms = atoms;
    const std::vector<double> prev_weights = weights;
    atoms.push_back(q);
    weights.push_back(0.0);

    // Minor cycles: move to the affine minimizer of the corral, dropping
    // atoms whose weights hit zero on the way.
    for (std::size_t minor = 0; minor <= prev_atoms.size() + 2; ++minor) {
      Eigen::MatrixXd pts(target.size(), static_cast<Eigen::Index>(atoms.size()));
      for (std::size_t i = 0; i < atoms.size(); ++i)
        pts.col(static_cast<Eigen::Index>(i)) = atoms[i].coords - target;
      const Eigen::VectorXd mu = detail::affine_minimizer(pts);
      if (!mu.allFinite()) break;
      if ((mu.array() > detail::kWeightFloor).all()) {
        for (std::size_t i = 0; i < atoms.size(); ++i) weights[i] = mu(static_cast<Eigen::Index>(i));
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        const double mi = mu(static_cast<Eigen::Index>(i));
        if (mi <= detail::kWeightFloor && weights[i] - mi > 0.0)
          theta = std::min(theta, weights[i] / (weights[i] - mi));
      }
      for (std::size_t i = 0; i < atoms.size(); ++i)
        weights[i] = (1.0 - theta) * weights[i] + theta * mu(static_cast<Eigen::Index>(i));
      std::size_t keep = 0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (weights[i] > detail::kWeightFloor) {
          atoms[keep] = std::move(atoms[i]);
          weights[keep] = weights[i];
          ++keep;
        }
      }
      atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(keep), atoms.end());
      weights.resize(keep);
    }
    double total = 0.0;
    for (double& wgt : weights) total += (wgt = std::max(wgt, 0.0));
    for (double& wgt : weights) wgt /= total;

    Eigen::VectorXd next = residual_of(weights);
    if (!(next.norm() < upper)) {
      // Gilbert line search from the previous point toward q.
      atoms = prev_atoms;
      weights = prev_weights;
      const Eigen::VectorXd step = qp - x;
      const double t = std::clamp(-x.dot(step) / step.squaredNorm(), 0.0, 1.0);
      for (double& wgt : weights) wgt *= 1.0 - t;
      atoms.push_back(std::move(q));
      weights.push_back(t);
      next = x + t * step;
    }
    x = next;
  }
  out.iterations = it;
  out.upper = x.norm();
  out.lower = std::min(best_lower, out.upper);
  out.atoms = std::move(atoms);
  out.weights = std::move(weights);
  out.point = target + x;
  return out;
}

}  // namespace sepdist
