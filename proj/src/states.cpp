#include "sepdist/states.hpp"

#include <cmath>
#include <string>

namespace sepdist {

namespace {

void require_unit(const Vec3& v, const char* name, double tol = kUnitTol) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > tol) {
    throw Error(ErrorCode::NotUnitVector,
                std::string(name) + " has norm " + std::to_string(v.norm()));
  }
}

void require_two_qubit(const HermitianOp& x) {
  if (x.dim() != 4) throw Error(ErrorCode::DimMismatch, "two-qubit (4x4) operator required");
}

}  // namespace

bool is_state(const HermitianOp& op) {
  if (std::abs(op.trace() - 1.0) > kTraceTol) return false;
  return eigenvalues(op)(0) >= -kPositivityTol;
}

DensityMatrix::DensityMatrix(const HermitianOp& op) : op_(op) {
  const double tr = op.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorCode::NotAState, "trace is " + std::to_string(tr));
  }
  const double lo = eigenvalues(op)(0);
  if (lo < -kPositivityTol) {
    throw Error(ErrorCode::NotAState, "smallest eigenvalue is " + std::to_string(lo));
  }
}

double DensityMatrix::purity() const { return hs_inner(op_, op_); }

ProductState::ProductState(const Vec3& n, const Vec3& m) : n_(n), m_(m) {
  require_unit(n, "n");
  require_unit(m, "m");
}

ProductState ProductState::from_rounded(const Vec3& n, const Vec3& m) {
  require_unit(n, "n", 1e-9);
  require_unit(m, "m", 1e-9);
  ProductState s(Vec3::UnitZ(), Vec3::UnitZ());
  s.n_ = n;
  s.m_ = m;
  return s;
}

PauliCoeffs2Q ProductState::pauli() const {
  PauliCoeffs2Q p;
  p.alpha = 0.25;
  p.a = n_ / 4.0;
  p.b = m_ / 4.0;
  p.c = n_ * m_.transpose() / 4.0;
  return p;
}

Eigen::Matrix<double, 16, 1> ProductState::hs_coordinates() const {
  Eigen::Vector4d left(1.0, n_(0), n_(1), n_(2));
  Eigen::Vector4d right(1.0, m_(0), m_(1), m_(2));
  Eigen::Matrix<double, 16, 1> v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v(4 * i + j) = 0.5 * left(i) * right(j);
  return v;
}

DensityMatrix product_state(const Vec3& n, const Vec3& m) {
  return product_state(ProductState(n, m));
}

DensityMatrix product_state(const ProductState& s) { return DensityMatrix(from_pauli(s.pauli())); }

DensityMatrix werner(double alpha) {
  if (!std::isfinite(alpha) || alpha < -1.0 / 3.0 - 1e-12 || alpha > 1.0 + 1e-12) {
    throw Error(ErrorCode::NotAState,
                "Werner parameter " + std::to_string(alpha) + " outside [-1/3, 1]");
  }
  PauliCoeffs2Q p;
  p.alpha = 0.25;
  p.c = -alpha / 4.0 * Mat3::Identity();
  return DensityMatrix(from_pauli(p));
}

DensityMatrix w_c_state(const Vec3& c) {
  PauliCoeffs2Q p;
  p.alpha = 0.25;
  p.c = (c / 4.0).asDiagonal();
  const HermitianOp op = from_pauli(p);
  if (!c.allFinite() || !is_state(op)) {
    throw Error(ErrorCode::NotAState, "c lies outside the Bell tetrahedron");
  }
  return DensityMatrix(op);
}

std::array<DensityMatrix, 4> bell_projectors() {
  return {w_c_state(Vec3(-1, -1, -1)), w_c_state(Vec3(-1, 1, 1)), w_c_state(Vec3(1, -1, 1)),
          w_c_state(Vec3(1, 1, -1))};
}

DensityMatrix mix(const DensityMatrix& rho1, const DensityMatrix& rho2, double t) {
  return DensityMatrix(rho1.op() * t + rho2.op() * (1.0 - t));
}

HermitianOp partial_transpose_b(const HermitianOp& x) {
  require_two_qubit(x);
  CMatrix out(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) out(2 * a + b, 2 * ap + bp) = x(2 * a + bp, 2 * ap + b);
  return HermitianOp(out);
}

double min_partial_transpose_eigenvalue(const DensityMatrix& w) {
  return eigenvalues(partial_transpose_b(w.op()))(0);
}

bool is_ppt(const DensityMatrix& w) {
  return min_partial_transpose_eigenvalue(w) >= -kPositivityTol;
}

DensityMatrix apply_local_unitary(const DensityMatrix& w, const CMatrix& ua, const CMatrix& ub) {
  require_two_qubit(w.op());
  return DensityMatrix(conjugate(w.op(), kron(ua, ub)));
}

DensityMatrix random_state(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::VectorXcd psi(dim);
  for (int k = 0; k < dim; ++k) psi(k) = Complex(normal(rng), normal(rng));
  psi.normalize();
  const double p = uniform(rng);
  CMatrix rho = p * psi * psi.adjoint() + (1.0 - p) / dim * CMatrix::Identity(dim, dim);
  return DensityMatrix(HermitianOp(0.5 * (rho + rho.adjoint())));
}

DensityMatrix random_separable_state(Rng& rng, int count) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd weights(count);
  for (int k = 0; k < count; ++k) weights(k) = expo(rng);
  weights /= weights.sum();
  HermitianOp acc = HermitianOp::zero(4);
  for (int k = 0; k < count; ++k) {
    acc = acc + from_pauli(ProductState(random_unit_vector(rng), random_unit_vector(rng)).pauli()) *
                    weights(k);
  }
  return DensityMatrix(acc);
}

}  // namespace sepdist
