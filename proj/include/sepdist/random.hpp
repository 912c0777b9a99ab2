#pragma once

#include <cstdint>
#include <random>

#include "sepdist/pauli_space.hpp"

namespace sepdist {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; derives independent child seeds from one root seed.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Vec3 random_unit_vector(Rng& rng);

/// Hermitian matrix with independent standard normal entries (GUE-like).
HermitianOp random_hermitian(int dim, Rng& rng);

/// exp(iH) with H from random_hermitian scaled by `spread`.
CMatrix random_unitary(int dim, Rng& rng, double spread = 3.0);

}  // namespace sepdist
