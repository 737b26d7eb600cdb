#include "glat/corpus.hpp"

#include <algorithm>

#include "glat/error.hpp"

namespace glat {
namespace {

Permutation cycle_perm(std::size_t points, std::vector<std::vector<std::size_t>> cycles) {
  Permutation p(points);
  for (std::size_t i = 0; i < points; ++i) p[i] = i;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  return p;
}

GammaLattice from_gens(const GroupPtr& g, std::size_t rank, std::vector<IntMatrix> mats) {
  return lattice_from_action(g, rank, mats);
}

}  // namespace

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclic group of order 0");
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  return make_group(group_from_generators({cycle_perm(n, {c})}));
}

GroupPtr klein_group() {
  return make_group(group_from_generators({cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 2}, {1, 3}})}));
}

GroupPtr symmetric_group(std::size_t n) {
  if (n < 2) return cyclic_group(1);
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  return make_group(group_from_generators({cycle_perm(n, {c}), cycle_perm(n, {{0, 1}})}));
}

GroupPtr alternating_group(std::size_t n) {
  if (n < 3) return cyclic_group(1);
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) gens.push_back(cycle_perm(n, {{0, 1, k}}));
  return make_group(group_from_generators(gens));
}

GroupPtr dihedral_group(std::size_t n) {
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  std::vector<std::vector<std::size_t>> refl;
  for (std::size_t i = 1; i < n - i; ++i) refl.push_back({i, n - i});
  return make_group(group_from_generators({cycle_perm(n, {c}), cycle_perm(n, refl)}));
}

GammaLattice augmentation_lattice(const GroupPtr& g) {
  if (g->permutations().empty())
    fail(ErrorCode::InvalidArgument, "augmentation lattice needs a permutation group");
  const std::size_t points = g->permutations()[0].size();
  const std::size_t n = points - 1;
  std::vector<IntMatrix> mats;
  for (ElementId s : g->generators()) {
    const Permutation& p = g->permutations()[s];
    IntMatrix a(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      // e_{p(k)} - e_{p(k+1)} in the basis v_t = e_t - e_{t+1}
      const std::size_t x = p[k], y = p[k + 1];
      const long sign = x < y ? 1 : -1;
      for (std::size_t t = std::min(x, y); t < std::max(x, y); ++t) a(t, k) += sign;
    }
    mats.push_back(std::move(a));
  }
  return lattice_from_action(g, n, mats);
}

std::vector<CorpusLattice> builtin_lattices() {
  const GroupPtr c1 = cyclic_group(1), c2 = cyclic_group(2), c3 = cyclic_group(3),
                 c4 = cyclic_group(4), v4 = klein_group(), s3 = symmetric_group(3),
                 d4 = dihedral_group(4), a4 = alternating_group(4), d6 = dihedral_group(6);

  const GammaLattice c2_sign = from_gens(c2, 1, {IntMatrix{{-1}}});
  const GammaLattice c2_regular = induced_lattice(c2, {0});
  const GammaLattice s3_sign = from_gens(s3, 1, {IntMatrix{{1}}, IntMatrix{{-1}}});
  const GammaLattice s3_standard = augmentation_lattice(s3);
  // Stabiliser of the point 2, generated by the transposition (0 1).
  const Subgroup s3_c2 = generated_subgroup(*s3, std::vector<ElementId>{s3->generators()[1]});

  std::vector<CorpusLattice> out{
      {"a4_augmentation", augmentation_lattice(a4)},
      {"c1_trivial", trivial_lattice(c1, 1)},
      {"c2_regular", c2_regular},
      {"c2_sign", c2_sign},
      {"c2_sign_trivial_regular",
       direct_sum(direct_sum(c2_sign, trivial_lattice(c2, 1)), c2_regular)},
      {"c2_trivial", trivial_lattice(c2, 1)},
      {"c2xc2_signs", from_gens(v4, 2, {IntMatrix{{-1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, -1}}})},
      {"c3_augmentation", augmentation_lattice(c3)},
      {"c3_regular", induced_lattice(c3, {0})},
      {"c4_rotation", from_gens(c4, 2, {IntMatrix{{0, -1}, {1, 0}}})},
      {"c4_sign", from_gens(c4, 1, {IntMatrix{{-1}}})},
      {"d4_standard", from_gens(d4, 2, {IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{1, 0}, {0, -1}}})},
      {"d6_hexagonal", from_gens(d6, 2, {IntMatrix{{0, -1}, {1, 1}}, IntMatrix{{1, 1}, {0, -1}}})},
      {"s3_cosets_of_c2", induced_lattice(s3, s3_c2)},
      {"s3_sign", s3_sign},
      {"s3_standard", s3_standard},
      {"s3_standard_sign", direct_sum(s3_standard, s3_sign)},
      {"s3_zero", zero_lattice(s3)},
  };
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

std::vector<CorpusReduction> builtin_reductions() {
  const GroupPtr c1 = cyclic_group(1), c2 = cyclic_group(2);
  std::vector<CorpusReduction> out;
  {
    SemidirectProduct sp = semidirect_product(GroupAction::trivial(c1, c1));
    GammaLattice t = zero_lattice(sp.group);
    out.push_back({"degenerate", ReductionInput{sp, t, zero_lattice(c1), BigInt(1)}});
  }
  {
    SemidirectProduct sp = semidirect_product(GroupAction::trivial(c1, c2));
    std::vector<IntMatrix> gens;
    for (ElementId s : sp.group->generators())
      gens.push_back(sp.projection[s] == 0 && s != 0 ? IntMatrix{{-1}} : IntMatrix{{1}});
    GammaLattice t = lattice_from_action(sp.group, 1, gens);
    out.push_back({"hf_c2_sign", ReductionInput{sp, t, zero_lattice(c1), BigInt(1)}});
  }
  {
    SemidirectProduct sp = semidirect_product(GroupAction::trivial(c2, c1));
    GammaLattice gtor = lattice_from_action(c2, 1, {IntMatrix{{-1}}});
    out.push_back({"gamma_c2_sign", ReductionInput{sp, zero_lattice(sp.group), gtor, BigInt(2)}});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace glat
