#include "glat/gamma_lattice.hpp"

#include <algorithm>

#include "glat/error.hpp"

namespace glat {
namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (a != b && !a->same_table(*b))
    fail(ErrorCode::GroupMismatch, std::string(what) + ": lattices are over different groups");
}

}  // namespace

GammaLattice GammaLattice::from_table(GroupPtr group, std::size_t rank,
                                      std::vector<IntMatrix> action, bool verify) {
  if (action.size() != group->order())
    fail(ErrorCode::InvalidArgument, "one action matrix per group element required");
  for (const auto& a : action)
    if (a.rows() != rank || a.cols() != rank)
      fail(ErrorCode::InvalidArgument, "action matrix has wrong shape");
  if (verify) {
    if (!action[0].is_identity())
      fail(ErrorCode::NotAHomomorphism, "identity does not act trivially");
    // Multiplicativity against generators on the right, for every element,
    // implies multiplicativity everywhere by induction on word length.
    for (ElementId g = 0; g < group->order(); ++g)
      for (ElementId s : group->generators())
        if (action[group->mul(g, s)] != action[g] * action[s])
          fail(ErrorCode::NotAHomomorphism, "action is not a homomorphism at (" +
                                                std::to_string(g) + ", " + std::to_string(s) + ")");
    for (const auto& a : action)
      if (!is_unimodular(a)) fail(ErrorCode::NotUnimodular, "action matrix is not unimodular");
  }
  GammaLattice m;
  m.group_ = std::move(group);
  m.rank_ = rank;
  m.action_ = std::move(action);
  return m;
}

bool operator==(const GammaLattice& a, const GammaLattice& b) {
  if (a.rank_ != b.rank_) return false;
  if (a.group_ != b.group_ && !a.group_->same_table(*b.group_)) return false;
  return a.action_ == b.action_;
}

GammaLattice lattice_from_action(GroupPtr group, std::size_t rank,
                                 const std::vector<IntMatrix>& generator_matrices) {
  const auto& gens = group->generators();
  if (generator_matrices.size() != gens.size())
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(gens.size()) +
                                         " generator matrices, got " +
                                         std::to_string(generator_matrices.size()));
  for (const auto& a : generator_matrices) {
    if (a.rows() != rank || a.cols() != rank)
      fail(ErrorCode::InvalidArgument, "generator matrix has wrong shape");
    if (!is_unimodular(a)) fail(ErrorCode::NotUnimodular, "generator matrix is not unimodular");
  }
  std::vector<IntMatrix> action(group->order());
  action[0] = IntMatrix::identity(rank);
  for (ElementId e : group->bfs_order()) {
    if (e == 0) continue;
    action[e] = action[group->word_parent(e)] * generator_matrices[group->word_generator(e)];
  }
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (action[gens[j]] != generator_matrices[j])
      fail(ErrorCode::NotAHomomorphism,
           "generator " + std::to_string(j) + " is inconsistent with the group relations");
  return GammaLattice::from_table(std::move(group), rank, std::move(action), true);
}

GammaLattice trivial_lattice(GroupPtr group, std::size_t rank) {
  std::vector<IntMatrix> action(group->order(), IntMatrix::identity(rank));
  return GammaLattice::from_table(std::move(group), rank, std::move(action), false);
}

GammaLattice zero_lattice(GroupPtr group) { return trivial_lattice(std::move(group), 0); }

RationalCharacter& RationalCharacter::operator+=(const RationalCharacter& other) {
  if (values.size() != other.values.size())
    fail(ErrorCode::GroupMismatch, "characters of different groups");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
  return *this;
}

IntVector RationalCharacter::as_integers() const {
  IntVector out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (v.get_den() != 1) fail(ErrorCode::InvalidArgument, "character value is not integral");
    out.push_back(v.get_num());
  }
  return out;
}

RationalCharacter operator+(RationalCharacter a, const RationalCharacter& b) { return a += b; }

RationalCharacter operator*(const BigInt& k, RationalCharacter a) {
  for (auto& v : a.values) v *= k;
  return a;
}

RationalCharacter character(const GammaLattice& m) {
  const FiniteGroup& g = *m.group();
  RationalCharacter chi{m.group(), {}};
  for (const auto& cls : g.conjugacy_classes()) {
    auto trace = [&](ElementId e) {
      BigInt t = 0;
      for (std::size_t i = 0; i < m.rank(); ++i) t += m.action(e)(i, i);
      return t;
    };
    const BigInt t0 = trace(cls.front());
    for (ElementId e : cls)
      if (trace(e) != t0)
        fail(ErrorCode::InternalContradiction, "trace is not constant on a conjugacy class");
    chi.values.emplace_back(t0);
  }
  return chi;
}

GammaLattice direct_sum(const GammaLattice& a, const GammaLattice& b) {
  require_same_group(a.group(), b.group(), "direct_sum");
  std::vector<IntMatrix> action;
  action.reserve(a.group()->order());
  for (ElementId g = 0; g < a.group()->order(); ++g)
    action.push_back(block_diagonal(a.action(g), b.action(g)));
  return GammaLattice::from_table(a.group(), a.rank() + b.rank(), std::move(action), false);
}

GammaLattice power(const GammaLattice& m, std::size_t r) {
  GammaLattice out = zero_lattice(m.group());
  for (std::size_t i = 0; i < r; ++i) out = direct_sum(out, m);
  return out;
}

std::vector<std::vector<ElementId>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> covered(g.order(), false);
  std::vector<std::vector<ElementId>> cosets;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    std::vector<ElementId> c;
    for (ElementId y : h) c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    for (ElementId y : c) covered[y] = true;
    cosets.push_back(std::move(c));
  }
  return cosets;
}

GammaLattice induced_lattice(GroupPtr group, const Subgroup& h) {
  if (!is_subgroup(*group, h)) fail(ErrorCode::NotASubgroup, "not a subgroup");
  const FiniteGroup& g = *group;
  const auto cosets = left_cosets(g, h);
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t c = 0; c < cosets.size(); ++c)
    for (ElementId x : cosets[c]) coset_of[x] = c;
  const std::size_t n = cosets.size();
  std::vector<IntMatrix> action;
  action.reserve(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    IntMatrix p(n, n);
    for (std::size_t c = 0; c < n; ++c) p(coset_of[g.mul(x, cosets[c].front())], c) = 1;
    action.push_back(std::move(p));
  }
  return GammaLattice::from_table(std::move(group), n, std::move(action), false);
}

GammaLattice restrict_action(const GammaLattice& m, const GroupHom& phi) {
  require_same_group(phi.target, m.group(), "restrict_action");
  std::vector<IntMatrix> action;
  action.reserve(phi.source->order());
  for (ElementId h = 0; h < phi.source->order(); ++h) action.push_back(m.action(phi(h)));
  return GammaLattice::from_table(phi.source, m.rank(), std::move(action), false);
}

GammaLattice twist(const GammaLattice& m, const SemidirectProduct& sp, const Cocycle& x) {
  require_same_group(m.group(), sp.group, "twist");
  return restrict_action(m, twisted_section(sp, x));
}

GammaLattice dual(const GammaLattice& m) {
  const FiniteGroup& g = *m.group();
  std::vector<IntMatrix> action;
  action.reserve(g.order());
  for (ElementId x = 0; x < g.order(); ++x) action.push_back(m.action(g.inv(x)).transpose());
  return GammaLattice::from_table(m.group(), m.rank(), std::move(action), false);
}

bool is_equivariant(const GammaLattice& source, const GammaLattice& target, const IntMatrix& m) {
  if (m.rows() != target.rank() || m.cols() != source.rank()) return false;
  for (ElementId g = 0; g < source.group()->order(); ++g)
    if (m * source.action(g) != target.action(g) * m) return false;
  return true;
}

LatticeEmbedding make_embedding(GammaLattice source, GammaLattice target, IntMatrix matrix) {
  require_same_group(source.group(), target.group(), "embedding");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    fail(ErrorCode::InvalidArgument, "embedding matrix has wrong shape");
  if (!is_equivariant(source, target, matrix))
    fail(ErrorCode::InvalidArgument, "embedding matrix is not equivariant");
  if (rank(matrix) != source.rank())
    fail(ErrorCode::InvalidArgument, "embedding matrix is not injective");
  CokernelInfo coker = cokernel_structure(matrix);
  return LatticeEmbedding{std::move(source), std::move(target), std::move(matrix),
                          std::move(coker.torsion), coker.free_rank};
}

}  // namespace glat
