#include "sepdist/distance_solver.hpp"

#include <cmath>
#include <string>

#include "sepdist/hull_projection.hpp"

namespace sepdist {

namespace {

BilinearForm form_from_coordinates(const Eigen::VectorXd& v) {
  // Coordinates are 2 * (alpha, b | a, c) in the s_i x s_j / 2 basis.
  BilinearForm f;
  f.alpha = v(0) / 2.0;
  for (int i = 0; i < 3; ++i) {
    f.a(i) = v(4 * (i + 1)) / 2.0;
    f.b(i) = v(i + 1) / 2.0;
    for (int j = 0; j < 3; ++j) f.c(i, j) = v(4 * (i + 1) + j + 1) / 2.0;
  }
  return f;
}

HullPoint<ProductState> hull_point(const ProductState& s) {
  return {s, Eigen::VectorXd(s.hs_coordinates())};
}

HermitianOp combine(const std::vector<WeightedProduct>& atoms) {
  HermitianOp acc = HermitianOp::zero(4);
  for (const auto& a : atoms) acc = acc + from_pauli(a.state.pauli()) * a.weight;
  return acc;
}

}  // namespace

DistanceReport distance(const DensityMatrix& w, const SolverConfig& cfg) {
  if (w.dim() != 4) throw Error(ErrorCode::DimMismatch, "distance needs a two-qubit state");

  if (cfg.trust_ppt && is_ppt(w)) {
    return DistanceReport{0.0, 0.0, 0.0, 0.0, 0, true, {}, w, {0.0}, {0.0}};
  }

  // Start at 1/4 as the uniform mixture of the four z-basis products.
  std::vector<HullPoint<ProductState>> init;
  for (double sn : {1.0, -1.0})
    for (double sm : {1.0, -1.0})
      init.push_back(hull_point(ProductState(sn * Vec3::UnitZ(), sm * Vec3::UnitZ())));
  std::vector<double> weights(init.size(), 0.25);

  auto oracle = [&](const Eigen::VectorXd& direction) {
    const BilinearForm f = form_from_coordinates(direction);
    return hull_point(min_over_separable(f, cfg.oracle).state);
  };

  const auto result = project_onto_hull<ProductState>(
      hs_coordinates(w.op()), std::move(init), std::move(weights), oracle,
      ProjectionSettings{cfg.tol, cfg.max_iters});

  std::vector<WeightedProduct> atoms;
  atoms.reserve(result.atoms.size());
  for (std::size_t i = 0; i < result.atoms.size(); ++i)
    atoms.push_back({result.atoms[i].atom, result.weights[i]});

  DistanceReport report{result.upper,
                        result.lower,
                        result.upper,
                        result.upper - result.lower,
                        result.iterations,
                        result.converged,
                        atoms,
                        DensityMatrix(combine(atoms)),
                        result.upper_trace,
                        result.lower_trace};
  return report;
}

VariationalBounds variational_bounds(const DensityMatrix& w, const DensityMatrix& rho_prime,
                                     const OracleConfig& cfg) {
  if (!is_ppt(rho_prime)) {
    throw Error(ErrorCode::NotSeparable, "rho' has a non-positive partial transpose");
  }
  const HermitianOp diff = rho_prime.op() - w.op();
  const double upper = hs_norm(diff);
  if (upper <= 1e-14) throw Error(ErrorCode::ZeroDirection, "rho' coincides with w");
  const HermitianOp unit = diff * (1.0 / upper);
  const double raw = min_over_separable(unit, cfg).value - hs_inner(w.op(), unit);
  return {std::max(raw, 0.0), upper, raw};
}

SzDistance distance_sz_model(const Vec3& w) {
  if (!w.allFinite() || w.norm() > 1.0 + 1e-12) {
    throw Error(ErrorCode::NotAState, "Bloch vector norm " + std::to_string(w.norm()) + " > 1");
  }
  return {std::hypot(w(0), w(1)) / std::sqrt(2.0), w(2)};
}

DensityMatrix qubit_state(const Vec3& bloch) {
  if (!bloch.allFinite() || bloch.norm() > 1.0 + 1e-12) {
    throw Error(ErrorCode::NotAState,
                "Bloch vector norm " + std::to_string(bloch.norm()) + " > 1");
  }
  Eigen::Matrix2cd m = 0.5 * pauli(0);
  for (int i = 0; i < 3; ++i) m += 0.5 * bloch(i) * pauli(i + 1);
  return DensityMatrix(HermitianOp(m));
}

SzReport distance_sz_numeric(const Vec3& w, const SolverConfig& cfg) {
  const DensityMatrix target = qubit_state(w);
  auto pole = [](double lambda) {
    return HullPoint<double>{lambda, hs_coordinates(qubit_state(Vec3(0, 0, lambda)).op())};
  };
  // The s_z coordinate (index 3) decides which pole minimizes <p, direction>.
  auto oracle = [&](const Eigen::VectorXd& direction) {
    return pole(direction(3) > 0.0 ? -1.0 : 1.0);
  };
  const auto result = project_onto_hull<double>(hs_coordinates(target.op()),
                                                {pole(1.0), pole(-1.0)}, {0.5, 0.5}, oracle,
                                                ProjectionSettings{cfg.tol, cfg.max_iters});
  double lambda = 0.0;
  for (std::size_t i = 0; i < result.atoms.size(); ++i)
    lambda += result.weights[i] * result.atoms[i].atom;
  return {result.upper,     result.lower,     result.upper,
          lambda,           result.iterations, result.converged,
          qubit_state(Vec3(0, 0, lambda))};
}

}  // namespace sepdist
