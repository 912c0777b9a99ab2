#include "sepdist/random.hpp"

namespace sepdist {

Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> normal;
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

HermitianOp random_hermitian(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  CMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = normal(rng);
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng)) / std::sqrt(2.0);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianOp(m);
}

CMatrix random_unitary(int dim, Rng& rng, double spread) {
  return unitary_from_generator(random_hermitian(dim, rng) * spread);
}

}  // namespace sepdist
