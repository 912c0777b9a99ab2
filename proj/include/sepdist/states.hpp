#pragma once

// Density matrices, the named two-qubit families and the PPT test.

#include <array>

#include "sepdist/pauli_space.hpp"
#include "sepdist/random.hpp"

namespace sepdist {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kUnitTol = 1e-12;

/// Hermitian operator with unit trace and no eigenvalue below -kPositivityTol.
class DensityMatrix {
 public:
  explicit DensityMatrix(const HermitianOp& op);

  const HermitianOp& op() const { return op_; }
  int dim() const { return op_.dim(); }

  /// Tr(rho^2) = ||rho||_2^2.
  double purity() const;
  bool is_pure(double tol = 1e-10) const { return std::abs(purity() - 1.0) <= tol; }

 private:
  HermitianOp op_;
};

/// Pair of unit Bloch vectors for Alice (n) and Bob (m).
class ProductState {
 public:
  ProductState(const Vec3& n, const Vec3& m);
  /// For vectors read back from 12-digit output: norms within 1e-9 of 1 are
  /// accepted and kept as given, so re-serialization reproduces the input.
  static ProductState from_rounded(const Vec3& n, const Vec3& m);

  const Vec3& n() const { return n_; }
  const Vec3& m() const { return m_; }

  /// Pauli coefficients alpha = 1/4, a = n/4, b = m/4, c = n m^T / 4.
  PauliCoeffs2Q pauli() const;

  /// Same as hs_coordinates(product_state(n, m)) without building a matrix.
  Eigen::Matrix<double, 16, 1> hs_coordinates() const;

 private:
  Vec3 n_;
  Vec3 m_;
};

bool is_state(const HermitianOp& op);

DensityMatrix product_state(const Vec3& n, const Vec3& m);
DensityMatrix product_state(const ProductState& s);

/// (1 - alpha s_A . s_B) / 4, defined for -1/3 <= alpha <= 1.
DensityMatrix werner(double alpha);

/// (1 + sum_i c_i s_A^i x s_B^i) / 4; throws NotAState outside the tetrahedron.
DensityMatrix w_c_state(const Vec3& c);

/// P0 (singlet) .. P3, each a w_c vertex.
std::array<DensityMatrix, 4> bell_projectors();

/// t rho1 + (1 - t) rho2 for t in [0, 1].
DensityMatrix mix(const DensityMatrix& rho1, const DensityMatrix& rho2, double t);

/// Transpose of Bob's factor; involution, trace preserving.
HermitianOp partial_transpose_b(const HermitianOp& x);

double min_partial_transpose_eigenvalue(const DensityMatrix& w);
bool is_ppt(const DensityMatrix& w);

/// U_A x U_B w (U_A x U_B)^dagger.
DensityMatrix apply_local_unitary(const DensityMatrix& w, const CMatrix& ua, const CMatrix& ub);

/// Haar-like pure state mixed with the maximally mixed state at a uniform
/// random weight.
DensityMatrix random_state(int dim, Rng& rng);

/// Convex mixture of `count` random product states with Dirichlet-like weights.
DensityMatrix random_separable_state(Rng& rng, int count = 4);

}  // namespace sepdist
