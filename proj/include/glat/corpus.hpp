#pragma once

#include <string>
#include <vector>

#include "glat/reduction.hpp"

namespace glat {

GroupPtr cyclic_group(std::size_t n);
GroupPtr klein_group();
GroupPtr symmetric_group(std::size_t n);
GroupPtr alternating_group(std::size_t n);
/// Symmetries of the regular n-gon, order 2n, acting on its vertices.
GroupPtr dihedral_group(std::size_t n);

/// Sum-zero sublattice of Z^points for a permutation group, on the basis
/// e_i - e_{i+1}.
GammaLattice augmentation_lattice(const GroupPtr& g);

struct CorpusLattice {
  std::string name;
  GammaLattice lattice;
};

/// Small lattices over groups of order at most 12, sorted by name.
std::vector<CorpusLattice> builtin_lattices();

struct CorpusReduction {
  std::string name;
  ReductionInput input;
};

/// The three worked reduction inputs, sorted by name.
std::vector<CorpusReduction> builtin_reductions();

}  // namespace glat
