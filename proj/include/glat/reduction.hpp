#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glat/artin_ono.hpp"

namespace glat {

BigInt existence_m(const BigInt& n, const BigInt& d);

/// Finite abelian group ⊕ Z/d_i with a group acting through integer matrices
/// on the invariant-factor coordinates; row i is reduced mod d_i.
struct FiniteAbelianWithAction {
  FiniteAbelianGroup structure;
  GroupPtr acting_group;
  std::vector<IntMatrix> action;
};

/// Each matrix is well defined and invertible on the quotient, and g -> action(g)
/// is multiplicative.
bool is_valid_quotient_action(const FiniteAbelianWithAction& a);

struct OnoTorusData {
  OnoResult ono;
  GammaLattice S_hat;  // T^r + M0
  GammaLattice Q_hat;  // M1
  LatticeEmbedding iso;  // Q_hat -> S_hat
};

OnoTorusData ono_f_torus(const GammaLattice& t_hat, const EmbeddingSearchOptions& opts = {});

/// Cokernel of m * iso.matrix with the action of iso.target transported to it.
/// Throws NotFiniteIndex unless the matrix is square and nonsingular.
FiniteAbelianWithAction isogeny_kernel(const LatticeEmbedding& iso, const BigInt& m);

/// e * iso^{-1} as an embedding target -> source, e the cokernel exponent.
LatticeEmbedding reverse_isogeny(const LatticeEmbedding& iso);

struct ReductionInput {
  SemidirectProduct sp;  // H^f x| Gamma
  GammaLattice T_hat;    // over sp.group
  GammaLattice Gtor_hat; // over Gamma
  std::optional<BigInt> d;
};

struct ReductionReport {
  OnoTorusData torus;
  BigInt n;
  BigInt d;
  BigInt m;
  FiniteAbelianWithAction A;
  OnoResult ono_prime;
  LatticeEmbedding reversed;
  FiniteAbelianWithAction A_prime;
  BigInt kernel_order_of_F;
  std::vector<std::string> narrative;  // exactly five entries, steps 0..4
};

ReductionReport reduce_stabilizer(const ReductionInput& input, const EmbeddingSearchOptions& opts = {});

}  // namespace glat
