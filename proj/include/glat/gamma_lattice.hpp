#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glat/finite_group.hpp"
#include "glat/int_matrix.hpp"
#include "glat/normal_form.hpp"

namespace glat {

/// Free finite-rank Z-module with an action of a finite group by unimodular
/// integer matrices, stored for every group element.
class GammaLattice {
 public:
  GammaLattice() = default;

  /// Takes a full action table (one matrix per element) and verifies that it
  /// is a homomorphism into GL_n(Z). `verify = false` is for tables that are
  /// correct by construction.
  static GammaLattice from_table(GroupPtr group, std::size_t rank, std::vector<IntMatrix> action,
                                 bool verify = true);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& action(ElementId g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const { return action_; }

  /// Same group table and identical matrices.
  friend bool operator==(const GammaLattice& a, const GammaLattice& b);

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> action_;
};

/// Class function with rational values, one per conjugacy class in the
/// order of FiniteGroup::conjugacy_classes().
struct RationalCharacter {
  GroupPtr group;
  std::vector<Rational> values;

  RationalCharacter& operator+=(const RationalCharacter& other);
  friend bool operator==(const RationalCharacter& a, const RationalCharacter& b) {
    return a.values == b.values;
  }
  /// Integer vector of values; throws InvalidArgument if some value is not integral.
  IntVector as_integers() const;
};

RationalCharacter operator+(RationalCharacter a, const RationalCharacter& b);
RationalCharacter operator*(const BigInt& k, RationalCharacter a);

/// Equivariant injective map source -> target, matrix is target.rank x source.rank.
struct LatticeEmbedding {
  GammaLattice source;
  GammaLattice target;
  IntMatrix matrix;
  FiniteAbelianGroup cokernel;  // torsion part of the cokernel
  std::size_t cokernel_free_rank = 0;

  bool finite_index() const { return source.rank() == target.rank(); }
  BigInt index() const { return cokernel.order(); }
};

/// Validates equivariance on every element and injectivity; computes the cokernel.
LatticeEmbedding make_embedding(GammaLattice source, GammaLattice target, IntMatrix matrix);
/// Matrix * A_source(g) == A_target(g) * Matrix for every g.
bool is_equivariant(const GammaLattice& source, const GammaLattice& target, const IntMatrix& m);

// ---------------------------------------------------------------------------
// Construction.

/// One matrix per group generator, extended along the BFS words and verified.
/// Throws NotUnimodular, NotAHomomorphism or InvalidArgument (shape).
GammaLattice lattice_from_action(GroupPtr group, std::size_t rank,
                                 const std::vector<IntMatrix>& generator_matrices);
GammaLattice trivial_lattice(GroupPtr group, std::size_t rank);
GammaLattice zero_lattice(GroupPtr group);

RationalCharacter character(const GammaLattice& m);

GammaLattice direct_sum(const GammaLattice& a, const GammaLattice& b);
GammaLattice power(const GammaLattice& m, std::size_t r);

/// Permutation lattice Z[G/H] on left cosets ordered by minimal representative.
GammaLattice induced_lattice(GroupPtr group, const Subgroup& h);
/// Left cosets of h, each sorted, ordered by minimal element.
std::vector<std::vector<ElementId>> left_cosets(const FiniteGroup& g, const Subgroup& h);

/// Pull back along phi: H -> G.
GammaLattice restrict_action(const GammaLattice& m, const GroupHom& phi);
/// Action of Gamma through the twisted section s_x.
GammaLattice twist(const GammaLattice& m, const SemidirectProduct& sp, const Cocycle& x);

/// action(g) = transpose(action(g^{-1})).
GammaLattice dual(const GammaLattice& m);

/// Z-basis (HNF-canonical) of Hom_G(M, N) as N.rank x M.rank matrices.
std::vector<IntMatrix> intertwiner_basis(const GammaLattice& m, const GammaLattice& n);

enum class EmbeddingSearchMethod {
  Identity,   // actions coincide
  Box,        // exhaustive search of a coefficient box
  Greedy,     // deterministic rank-greedy combination
  Randomized  // seeded random fallback
};

std::string_view to_string(EmbeddingSearchMethod m);

struct EmbeddingSearchOptions {
  long initial_box = 3;
  long max_box = 24;
  /// Exhaustive box search is run only when (2*box+1)^k fits in this budget.
  std::uint64_t box_budget = 20000;
  std::size_t random_draws = 512;
  /// When false, needing the random fallback raises SeedlessViolation.
  bool allow_random = true;
  std::uint64_t seed = 0x5eed'1a77'1ce5ULL;
};

struct FiniteIndexEmbedding {
  LatticeEmbedding embedding;
  EmbeddingSearchMethod method = EmbeddingSearchMethod::Identity;
};

/// Invertible integer intertwiner between lattices with equal characters.
/// Among candidates found, minimises (|det|, entrywise key) where entries are
/// compared by absolute value, positive before negative.
FiniteIndexEmbedding equivariant_finite_index_embedding(const GammaLattice& m1,
                                                        const GammaLattice& m2,
                                                        const EmbeddingSearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Permutation-lattice recognition.

enum class Verdict { Yes, No, Unknown };
std::string_view to_string(Verdict v);

struct PermutationRecognition {
  Verdict verdict = Verdict::Unknown;
  /// For Yes: columns form a Z-basis permuted by every action matrix.
  IntMatrix basis;
  std::string reason;
};

struct RecognitionOptions {
  long coord_bound = 2;
  std::uint64_t node_budget = 200000;
  std::size_t max_decompositions = 64;
};

PermutationRecognition is_permutation_lattice(const GammaLattice& m,
                                              const RecognitionOptions& opts = {});

/// Order of H^1(<h>, M) for the cyclic subgroup generated by h.
BigInt cyclic_h1_order(const GammaLattice& m, ElementId h);

}  // namespace glat
