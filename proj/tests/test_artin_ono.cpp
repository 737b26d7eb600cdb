#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glat/artin_ono.hpp"
#include "glat/corpus.hpp"
#include "glat/error.hpp"
#include "oracles.hpp"

using namespace glat;

namespace {

std::vector<long> longs(const std::vector<BigInt>& xs) {
  std::vector<long> out;
  for (const auto& x : xs) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("induced trivial characters") {
  for (const auto& g : {cyclic_group(4), symmetric_group(3), alternating_group(4)}) {
    const auto whole = all_subgroups(*g).back();
    for (const auto& v : induced_trivial_character(g, whole).as_integers()) CHECK(v == 1);
    const auto reg = induced_trivial_character(g, {0}).as_integers();
    CHECK(reg[0] == static_cast<long>(g->order()));
    for (std::size_t c = 1; c < reg.size(); ++c) CHECK(reg[c] == 0);
    for (const auto& d : all_subgroups(*g))
      CHECK(induced_trivial_character(g, d) == character(induced_lattice(g, d)));
  }
  const auto s3 = symmetric_group(3);
  ElementId t = 1;
  while (s3->element_order(t) != 2) ++t;
  const Subgroup h = generated_subgroup(*s3, std::vector<ElementId>{t});
  const auto chi = induced_trivial_character(s3, h).as_integers();
  // classes: identity, 3-cycles, transpositions
  CHECK(chi == IntVector{3, 0, 1});
  CHECK_THROWS_AS(induced_trivial_character(s3, Subgroup{0, 1, 2, 3}), Error);
}

TEST_CASE("artin decomposition examples") {
  const auto c2 = cyclic_group(2);
  auto a = artin_decompose(trivial_lattice(c2, 1));
  CHECK(a.r == 1);
  CHECK(longs(a.m) == std::vector<long>{0, 1});
  CHECK(longs(a.n) == std::vector<long>{0, 0});

  a = artin_decompose(lattice_from_action(c2, 1, {IntMatrix{{-1}}}));
  CHECK(a.r == 1);
  CHECK(longs(a.m) == std::vector<long>{1, 0});
  CHECK(longs(a.n) == std::vector<long>{0, 1});

  a = artin_decompose(zero_lattice(symmetric_group(3)));
  CHECK(a.r == 1);
  for (const auto& x : a.m) CHECK(x == 0);
  for (const auto& x : a.n) CHECK(x == 0);
}

TEST_CASE("artin multiplier agrees with brute force on small cases") {
  int compared = 0;
  for (const auto& [name, m] : builtin_lattices()) {
    if (m.group()->order() > 8 || m.rank() > 3) continue;
    INFO(name);
    const auto a = artin_decompose(m);
    std::vector<IntVector> basis;
    for (const auto& d : a.reps) basis.push_back(induced_trivial_character(m.group(), d).as_integers());
    const long brute = oracle::brute_artin_r(character(m).as_integers(), basis,
                                             static_cast<long>(m.group()->order()));
    CHECK(a.r == brute);
    ++compared;
  }
  CHECK(compared >= 10);
}

TEST_CASE("trivial lattice of a noncyclic group needs a multiplier") {
  // For C2 x C2 the trivial character is (1,1,1,1) = (sum of the three
  // order-2 induced characters - regular) / 2.
  const auto v4 = klein_group();
  const auto a = artin_decompose(trivial_lattice(v4, 1));
  CHECK(a.r == 2);
  std::vector<IntVector> basis;
  for (const auto& d : a.reps) basis.push_back(induced_trivial_character(v4, d).as_integers());
  CHECK(oracle::brute_artin_r(IntVector{1, 1, 1, 1}, basis, 4) == 2);
}

TEST_CASE("ono construction examples") {
  const auto c2 = cyclic_group(2);
  auto o = ono_construct(trivial_lattice(c2, 1));
  CHECK(o.r == 1);
  CHECK(o.M0.rank() == 0);
  CHECK(o.M1.rank() == 1);
  CHECK(o.embedding.matrix == IntMatrix({{1}}));
  CHECK(o.index == 1);

  o = ono_construct(lattice_from_action(c2, 1, {IntMatrix{{-1}}}));
  CHECK(o.r == 1);
  CHECK(o.M0 == trivial_lattice(c2, 1));
  CHECK(o.M1 == induced_lattice(c2, {0}));
  CHECK(o.embedding.matrix == IntMatrix({{1, -1}, {1, 1}}));
  CHECK(o.index == 2);
  const auto e = oracle::coset_bfs(o.embedding.matrix);
  CHECK(e.elements.size() == 2);

  o = ono_construct(zero_lattice(c2));
  CHECK(o.r == 1);
  CHECK(o.M0.rank() == 0);
  CHECK(o.M1.rank() == 0);
  CHECK(o.index == 1);
}

TEST_CASE("ono construction over a semidirect product gives permutation parts") {
  const auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  const auto auts = automorphisms(*c3);
  const auto sp = semidirect_product(GroupAction::from_generator_automorphisms(c2, c3, {auts[1]}));
  // Sign character of F_Gamma (order 6): trivial on F, -1 on the section.
  std::vector<IntMatrix> gens;
  for (ElementId s : sp.group->generators())
    gens.push_back(sp.projection[s] == 0 ? IntMatrix{{1}} : IntMatrix{{-1}});
  const auto m = lattice_from_action(sp.group, 1, gens);
  const auto o = ono_construct(m);
  CHECK(is_permutation_lattice(o.M0).verdict == Verdict::Yes);
  CHECK(is_permutation_lattice(o.M1).verdict == Verdict::Yes);
  CHECK(is_equivariant(o.embedding.source, o.embedding.target, o.embedding.matrix));
}

TEST_CASE("ono embeddings of the corpus are sound") {
  for (const auto& [name, m] : builtin_lattices()) {
    INFO(name);
    const auto o = ono_construct(m);
    CHECK(o.embedding.matrix.is_square());
    CHECK(abs(oracle::det(o.embedding.matrix)) == o.index);
    const auto lhs = BigInt(static_cast<unsigned long>(o.r)) * character(m) + character(o.M0);
    CHECK(lhs == character(o.M1));
    for (ElementId g = 0; g < m.group()->order(); ++g)
      CHECK(o.embedding.matrix * o.M1.action(g) == o.embedding.target.action(g) * o.embedding.matrix);
    if (o.index <= 512) {
      const auto e = oracle::coset_bfs(o.embedding.matrix);
      CHECK(BigInt(static_cast<unsigned long>(e.elements.size())) == o.index);
    }
  }
}
