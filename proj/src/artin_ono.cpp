#include "glat/artin_ono.hpp"

#include <algorithm>

#include "glat/error.hpp"

namespace glat {

RationalCharacter induced_trivial_character(const GroupPtr& g, const Subgroup& d) {
  if (!is_subgroup(*g, d)) fail(ErrorCode::NotASubgroup, "not a subgroup");
  const auto cosets = left_cosets(*g, d);
  RationalCharacter chi{g, {}};
  for (const auto& cls : g->conjugacy_classes()) {
    long fixed = 0;
    for (const auto& c : cosets)
      if (std::binary_search(c.begin(), c.end(), g->mul(cls.front(), c.front()))) ++fixed;
    chi.values.emplace_back(fixed);
  }
  return chi;
}

ArtinSolution artin_decompose(const GammaLattice& m) {
  const GroupPtr& g = m.group();
  ArtinSolution out;
  out.reps = cyclic_subgroup_class_reps(*g);
  const std::size_t k = out.reps.size();
  out.n.assign(k, 0);
  out.m.assign(k, 0);
  if (m.rank() == 0) {
    out.r = 1;
    return out;
  }
  std::vector<IntVector> basis;
  for (const auto& d : out.reps) basis.push_back(induced_trivial_character(g, d).as_integers());
  MinimalMultiplier mm;
  try {
    mm = minimal_multiplier(character(m).as_integers(), basis);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInRationalSpan) throw;
    fail(ErrorCode::InternalContradiction,
         "character is outside the span of characters induced from cyclic subgroups");
  }
  out.r = mm.r;
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(mm.coeffs[i]) > 0) out.m[i] = mm.coeffs[i];
    if (sgn(mm.coeffs[i]) < 0) out.n[i] = -mm.coeffs[i];
  }
  return out;
}

GammaLattice permutation_sum(const GroupPtr& g, const std::vector<Subgroup>& reps,
                             const std::vector<BigInt>& mult) {
  GammaLattice out = zero_lattice(g);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (sgn(mult[i]) == 0) continue;
    if (!mult[i].fits_ulong_p()) fail(ErrorCode::InvalidArgument, "multiplicity too large");
    out = direct_sum(out, power(induced_lattice(g, reps[i]), mult[i].get_ui()));
  }
  return out;
}

OnoResult ono_construct(const GammaLattice& m, const EmbeddingSearchOptions& opts) {
  OnoResult out;
  out.artin = artin_decompose(m);
  if (!out.artin.r.fits_ulong_p()) fail(ErrorCode::InvalidArgument, "multiplier too large");
  out.r = out.artin.r.get_ui();
  out.M0 = permutation_sum(m.group(), out.artin.reps, out.artin.n);
  out.M1 = permutation_sum(m.group(), out.artin.reps, out.artin.m);
  GammaLattice target = direct_sum(power(m, out.r), out.M0);
  FiniteIndexEmbedding fe = equivariant_finite_index_embedding(out.M1, target, opts);
  out.embedding = std::move(fe.embedding);
  out.method = fe.method;
  out.index = out.embedding.index();
  return out;
}

}  // namespace glat
