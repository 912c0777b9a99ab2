#pragma once

// Real Hilbert-Schmidt space of Hermitian operators, with Pauli coordinates
// for one and two qubits.

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sepdist/error.hpp"

namespace sepdist {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kHermiticityTol = 1e-12;

/// N x N Hermitian matrix, immutable after construction.
///
/// Construction symmetrizes (x + x^dagger)/2 when the input is Hermitian to
/// within kHermiticityTol and throws NotHermitian otherwise.
class HermitianOp {
 public:
  explicit HermitianOp(const CMatrix& m);

  static HermitianOp zero(int dim);
  static HermitianOp identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  HermitianOp operator+(const HermitianOp& o) const;
  HermitianOp operator-(const HermitianOp& o) const;
  HermitianOp operator-() const;
  HermitianOp operator*(double s) const;
  friend HermitianOp operator*(double s, const HermitianOp& x) { return x * s; }

  double trace() const { return m_.trace().real(); }

 private:
  struct Trusted {};
  HermitianOp(CMatrix m, Trusted) : m_(std::move(m)) {}

  CMatrix m_;
};

/// Tr(x y). Throws DimMismatch when dimensions differ.
double hs_inner(const HermitianOp& x, const HermitianOp& y);
double hs_norm(const HermitianOp& x);

/// Coefficients of A = alpha 1 + a_i s_i x 1 + b_i 1 x s_i + c_ij s_i x s_j.
struct PauliCoeffs2Q {
  double alpha = 0.0;
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Mat3 c = Mat3::Zero();

  /// alpha^2 + |a|^2 + |b|^2 + |c|_F^2, which equals ||A||_2^2 / 4.
  double squared_norm() const;
};

PauliCoeffs2Q to_pauli(const HermitianOp& x);
HermitianOp from_pauli(const PauliCoeffs2Q& p);

/// Single-qubit Pauli matrices, index 0 is the identity.
const Eigen::Matrix2cd& pauli(int i);

CMatrix kron(const CMatrix& x, const CMatrix& y);

/// Coordinates in the orthonormal basis {s_i / sqrt2} (dim 2) or
/// {s_i x s_j / 2} (dim 4), index order i*4 + j. Norm equals hs_norm.
Eigen::VectorXd hs_coordinates(const HermitianOp& x);
HermitianOp from_hs_coordinates(const Eigen::VectorXd& v);

/// Ascending eigenvalues.
Eigen::VectorXd eigenvalues(const HermitianOp& x);

/// U x U^dagger.
HermitianOp conjugate(const HermitianOp& x, const CMatrix& u);

/// exp(i H) for Hermitian H.
CMatrix unitary_from_generator(const HermitianOp& h);

}  // namespace sepdist
