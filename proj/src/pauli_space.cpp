#include "sepdist/pauli_space.hpp"

#include <cmath>
#include <string>

namespace sepdist {

namespace {

void require_same_dim(const HermitianOp& x, const HermitianOp& y) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::DimMismatch,
                "operands have dimensions " + std::to_string(x.dim()) + " and " +
                    std::to_string(y.dim()));
  }
}

const std::array<Eigen::Matrix2cd, 4>& pauli_table() {
  static const std::array<Eigen::Matrix2cd, 4> table = [] {
    const Complex i(0.0, 1.0);
    std::array<Eigen::Matrix2cd, 4> t;
    t[0] << 1, 0, 0, 1;
    t[1] << 0, 1, 1, 0;
    t[2] << 0, -i, i, 0;
    t[3] << 1, 0, 0, -1;
    return t;
  }();
  return table;
}

const std::array<Eigen::Matrix4cd, 16>& two_qubit_basis() {
  static const std::array<Eigen::Matrix4cd, 16> table = [] {
    std::array<Eigen::Matrix4cd, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[4 * i + j] = kron(pauli(i), pauli(j));
    return t;
  }();
  return table;
}

// Tr(x * p) for Hermitian p without forming the product.
double trace_product(const CMatrix& x, const CMatrix& p) {
  return (x.transpose().cwiseProduct(p)).sum().real();
}

}  // namespace

HermitianOp::HermitianOp(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimMismatch, "operator must be a non-empty square matrix");
  }
  const CMatrix adj = m.adjoint();
  const double skew = (m - adj).cwiseAbs().maxCoeff();
  if (!std::isfinite(skew) || skew > kHermiticityTol) {
    throw Error(ErrorCode::NotHermitian,
                "max |x - x^dagger| = " + std::to_string(skew) + " exceeds tolerance");
  }
  m_ = 0.5 * (m + adj);
}

HermitianOp HermitianOp::zero(int dim) {
  return HermitianOp(CMatrix::Zero(dim, dim), Trusted{});
}

HermitianOp HermitianOp::identity(int dim) {
  return HermitianOp(CMatrix::Identity(dim, dim), Trusted{});
}

HermitianOp HermitianOp::operator+(const HermitianOp& o) const {
  require_same_dim(*this, o);
  return HermitianOp(m_ + o.m_, Trusted{});
}

HermitianOp HermitianOp::operator-(const HermitianOp& o) const {
  require_same_dim(*this, o);
  return HermitianOp(m_ - o.m_, Trusted{});
}

HermitianOp HermitianOp::operator-() const { return HermitianOp(-m_, Trusted{}); }

HermitianOp HermitianOp::operator*(double s) const { return HermitianOp(s * m_, Trusted{}); }

double hs_inner(const HermitianOp& x, const HermitianOp& y) {
  require_same_dim(x, y);
  return trace_product(x.matrix(), y.matrix());
}

double hs_norm(const HermitianOp& x) { return x.matrix().norm(); }

double PauliCoeffs2Q::squared_norm() const {
  return alpha * alpha + a.squaredNorm() + b.squaredNorm() + c.squaredNorm();
}

PauliCoeffs2Q to_pauli(const HermitianOp& x) {
  if (x.dim() != 4) {
    throw Error(ErrorCode::DimMismatch, "Pauli coefficients need a 4x4 operator");
  }
  const auto& basis = two_qubit_basis();
  PauliCoeffs2Q p;
  p.alpha = trace_product(x.matrix(), basis[0]) / 4.0;
  for (int i = 0; i < 3; ++i) {
    p.a(i) = trace_product(x.matrix(), basis[4 * (i + 1)]) / 4.0;
    p.b(i) = trace_product(x.matrix(), basis[i + 1]) / 4.0;
    for (int j = 0; j < 3; ++j)
      p.c(i, j) = trace_product(x.matrix(), basis[4 * (i + 1) + j + 1]) / 4.0;
  }
  return p;
}

HermitianOp from_pauli(const PauliCoeffs2Q& p) {
  const auto& basis = two_qubit_basis();
  Eigen::Matrix4cd m = p.alpha * basis[0];
  for (int i = 0; i < 3; ++i) {
    m += p.a(i) * basis[4 * (i + 1)];
    m += p.b(i) * basis[i + 1];
    for (int j = 0; j < 3; ++j) m += p.c(i, j) * basis[4 * (i + 1) + j + 1];
  }
  return HermitianOp(m);
}

const Eigen::Matrix2cd& pauli(int i) { return pauli_table().at(static_cast<std::size_t>(i)); }

CMatrix kron(const CMatrix& x, const CMatrix& y) {
  CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

Eigen::VectorXd hs_coordinates(const HermitianOp& x) {
  if (x.dim() == 2) {
    Eigen::VectorXd v(4);
    for (int i = 0; i < 4; ++i) v(i) = trace_product(x.matrix(), pauli(i)) / std::sqrt(2.0);
    return v;
  }
  if (x.dim() == 4) {
    const auto& basis = two_qubit_basis();
    Eigen::VectorXd v(16);
    for (int k = 0; k < 16; ++k) v(k) = trace_product(x.matrix(), basis[k]) / 2.0;
    return v;
  }
  throw Error(ErrorCode::DimMismatch, "HS coordinates defined for dim 2 and 4 only");
}

HermitianOp from_hs_coordinates(const Eigen::VectorXd& v) {
  if (v.size() == 4) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 4; ++i) m += (v(i) / std::sqrt(2.0)) * pauli(i);
    return HermitianOp(m);
  }
  if (v.size() == 16) {
    const auto& basis = two_qubit_basis();
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 16; ++k) m += (v(k) / 2.0) * basis[k];
    return HermitianOp(m);
  }
  throw Error(ErrorCode::DimMismatch, "coordinate vector must have 4 or 16 entries");
}

Eigen::VectorXd eigenvalues(const HermitianOp& x) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(x.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

HermitianOp conjugate(const HermitianOp& x, const CMatrix& u) {
  if (u.rows() != x.dim() || u.cols() != x.dim()) {
    throw Error(ErrorCode::DimMismatch, "unitary and operator dimensions differ");
  }
  CMatrix m = u * x.matrix() * u.adjoint();
  return HermitianOp(0.5 * (m + m.adjoint()));
}

CMatrix unitary_from_generator(const HermitianOp& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
  const Eigen::VectorXd& evals = solver.eigenvalues();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) phases(k) = std::polar(1.0, evals(k));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace sepdist
