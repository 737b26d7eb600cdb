#pragma once

#include <vector>

#include "glat/gamma_lattice.hpp"

namespace glat {

/// Character of Z[G/D]: value at g is the number of cosets xD with g x D = x D.
RationalCharacter induced_trivial_character(const GroupPtr& g, const Subgroup& d);

/// r * chi_M + sum n_i chi_i = sum m_i chi_i, chi_i induced from the trivial
/// character of reps[i]; min(n_i, m_i) = 0 and r minimal.
struct ArtinSolution {
  BigInt r;
  std::vector<Subgroup> reps;
  std::vector<BigInt> n;
  std::vector<BigInt> m;
};

ArtinSolution artin_decompose(const GammaLattice& m);

struct OnoResult {
  ArtinSolution artin;
  std::size_t r = 1;
  GammaLattice M0;
  GammaLattice M1;
  /// M1 -> M^r + M0
  LatticeEmbedding embedding;
  BigInt index;
  EmbeddingSearchMethod method = EmbeddingSearchMethod::Identity;
};

/// Direct sum of Z[G/reps[i]]^{mult[i]} in the order of reps.
GammaLattice permutation_sum(const GroupPtr& g, const std::vector<Subgroup>& reps,
                             const std::vector<BigInt>& mult);

OnoResult ono_construct(const GammaLattice& m, const EmbeddingSearchOptions& opts = {});

}  // namespace glat
