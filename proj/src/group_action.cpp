#include <algorithm>
#include <set>

#include "glat/error.hpp"
#include "glat/finite_group.hpp"

namespace glat {
namespace {

bool is_automorphism(const FiniteGroup& f, const ElementId* row) {
  const std::size_t n = f.order();
  std::vector<bool> hit(n, false);
  for (ElementId x = 0; x < n; ++x) {
    if (row[x] >= n || hit[row[x]]) return false;
    hit[row[x]] = true;
  }
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (row[f.mul(a, b)] != f.mul(row[a], row[b])) return false;
  return true;
}

std::vector<ElementId> extend_action(const FiniteGroup& actor, std::size_t target_order,
                                     const std::vector<std::vector<ElementId>>& gen_auts) {
  std::vector<ElementId> table(actor.order() * target_order);
  for (ElementId f = 0; f < target_order; ++f) table[f] = f;
  for (ElementId e : actor.bfs_order()) {
    if (e == 0) continue;
    const ElementId* parent = &table[actor.word_parent(e) * target_order];
    const auto& gen = gen_auts[actor.word_generator(e)];
    // act(parent * s, f) = act(parent, act(s, f))
    for (ElementId f = 0; f < target_order; ++f) table[e * target_order + f] = parent[gen[f]];
  }
  return table;
}

}  // namespace

GroupAction GroupAction::from_table(GroupPtr actor, GroupPtr target, std::vector<ElementId> table) {
  const std::size_t na = actor->order(), nf = target->order();
  if (table.size() != na * nf) fail(ErrorCode::NotAHomomorphism, "action table has wrong size");
  for (ElementId g = 0; g < na; ++g)
    if (!is_automorphism(*target, &table[g * nf]))
      fail(ErrorCode::NotAHomomorphism,
           "actor element " + std::to_string(g) + " does not act by an automorphism");
  for (ElementId a = 0; a < na; ++a)
    for (ElementId b = 0; b < na; ++b)
      for (ElementId f = 0; f < nf; ++f)
        if (table[actor->mul(a, b) * nf + f] != table[a * nf + table[b * nf + f]])
          fail(ErrorCode::NotAHomomorphism, "action is not a homomorphism at (" +
                                                std::to_string(a) + ", " + std::to_string(b) + ")");
  GroupAction act;
  act.actor_ = std::move(actor);
  act.target_ = std::move(target);
  act.table_ = std::move(table);
  return act;
}

GroupAction GroupAction::from_generator_automorphisms(
    GroupPtr actor, GroupPtr target,
    const std::vector<std::vector<ElementId>>& generator_automorphisms) {
  if (generator_automorphisms.size() != actor->generators().size())
    fail(ErrorCode::NotAHomomorphism, "one automorphism per actor generator required");
  for (const auto& a : generator_automorphisms)
    if (a.size() != target->order() || !is_automorphism(*target, a.data()))
      fail(ErrorCode::NotAHomomorphism, "generator image is not an automorphism of the target");
  auto table = extend_action(*actor, target->order(), generator_automorphisms);
  return from_table(std::move(actor), std::move(target), std::move(table));
}

GroupAction GroupAction::trivial(GroupPtr actor, GroupPtr target) {
  const std::size_t na = actor->order(), nf = target->order();
  std::vector<ElementId> table(na * nf);
  for (ElementId g = 0; g < na; ++g)
    for (ElementId f = 0; f < nf; ++f) table[g * nf + f] = f;
  GroupAction act;
  act.actor_ = std::move(actor);
  act.target_ = std::move(target);
  act.table_ = std::move(table);
  return act;
}

bool GroupAction::same_as(const GroupAction& other) const {
  return actor_->same_table(*other.actor_) && target_->same_table(*other.target_) &&
         table_ == other.table_;
}

std::vector<GroupAction> enumerate_actions(GroupPtr actor, GroupPtr target) {
  const auto auts = automorphisms(*target);
  const std::size_t ngen = actor->generators().size();
  const std::size_t nf = target->order();
  std::set<std::vector<ElementId>> tables;
  std::vector<std::size_t> choice(ngen, 0);
  for (;;) {
    std::vector<std::vector<ElementId>> gen_auts;
    for (auto c : choice) gen_auts.push_back(auts[c]);
    auto table = extend_action(*actor, nf, gen_auts);
    bool ok = true;
    for (ElementId a = 0; a < actor->order() && ok; ++a)
      for (ElementId b = 0; b < actor->order() && ok; ++b)
        for (ElementId f = 0; f < nf && ok; ++f)
          if (table[actor->mul(a, b) * nf + f] != table[a * nf + table[b * nf + f]]) ok = false;
    if (ok) tables.insert(std::move(table));

    std::size_t k = 0;
    while (k < ngen && ++choice[k] == auts.size()) choice[k++] = 0;
    if (k == ngen) break;
  }
  std::vector<GroupAction> out;
  for (const auto& t : tables) out.push_back(GroupAction::from_table(actor, target, t));
  return out;
}

SemidirectProduct semidirect_product(const GroupAction& action) {
  const FiniteGroup& f = *action.target();
  const FiniteGroup& gamma = *action.actor();
  const std::size_t nf = f.order(), ng = gamma.order(), n = nf * ng;
  std::vector<std::uint32_t> mul(n * n);
  for (ElementId g1 = 0; g1 < ng; ++g1)
    for (ElementId f1 = 0; f1 < nf; ++f1)
      for (ElementId g2 = 0; g2 < ng; ++g2)
        for (ElementId f2 = 0; f2 < nf; ++f2) {
          const ElementId fp = f.mul(f1, action.act(g1, f2));
          const ElementId gp = gamma.mul(g1, g2);
          mul[(g1 * nf + f1) * n + (g2 * nf + f2)] = static_cast<std::uint32_t>(gp * nf + fp);
        }
  std::vector<ElementId> gens;
  for (auto s : f.generators()) gens.push_back(s);
  for (auto s : gamma.generators()) gens.push_back(s * nf);
  std::vector<std::string> labels(n);
  for (ElementId g = 0; g < ng; ++g)
    for (ElementId x = 0; x < nf; ++x)
      labels[g * nf + x] = "(" + f.label(x) + "," + gamma.label(g) + ")";

  SemidirectProduct sp{action,
                       make_group(FiniteGroup::from_table(n, std::move(mul), std::move(gens),
                                                          std::move(labels))),
                       {}, {}, {}};
  for (ElementId x = 0; x < nf; ++x) sp.f_embedding.push_back(x);
  for (ElementId g = 0; g < ng; ++g) sp.section.push_back(g * nf);
  for (ElementId e = 0; e < n; ++e) sp.projection.push_back(e / nf);
  return sp;
}

GroupHom SemidirectProduct::section_hom() const {
  return GroupHom{action.actor(), group, section};
}

CocycleCheck validate_cocycle(const Cocycle& x) {
  const FiniteGroup& gamma = *x.action.actor();
  const FiniteGroup& f = *x.action.target();
  CocycleCheck out;
  if (x.values.size() != gamma.order()) {
    out.valid = false;
    out.violation = std::make_pair(ElementId{0}, ElementId{0});
    return out;
  }
  for (ElementId s = 0; s < gamma.order(); ++s)
    for (ElementId t = 0; t < gamma.order(); ++t) {
      const ElementId lhs = x.values[gamma.mul(s, t)];
      const ElementId rhs = f.mul(x.values[s], x.action.act(s, x.values[t]));
      if (lhs != rhs) {
        out.valid = false;
        out.violation = std::make_pair(s, t);
        return out;
      }
    }
  return out;
}

Cocycle cocycle_from_generator_values(const GroupAction& action,
                                      const std::vector<ElementId>& generator_values) {
  const FiniteGroup& gamma = *action.actor();
  const FiniteGroup& f = *action.target();
  if (generator_values.size() != gamma.generators().size())
    fail(ErrorCode::InvalidCocycle, "one cocycle value per actor generator required");
  for (auto v : generator_values)
    if (v >= f.order()) fail(ErrorCode::InvalidCocycle, "cocycle value out of range");
  Cocycle x{action, std::vector<ElementId>(gamma.order(), 0)};
  for (ElementId e : gamma.bfs_order()) {
    if (e == 0) continue;
    const ElementId p = gamma.word_parent(e);
    // x_{p s} = x_p * p(x_s)
    x.values[e] = f.mul(x.values[p], action.act(p, generator_values[gamma.word_generator(e)]));
  }
  auto check = validate_cocycle(x);
  if (!check.valid)
    fail(ErrorCode::InvalidCocycle,
         "cocycle law fails at (" + std::to_string(check.violation->first) + ", " +
             std::to_string(check.violation->second) + ")");
  // Generator values must be reproduced (a generator may repeat an earlier element).
  for (std::size_t j = 0; j < generator_values.size(); ++j)
    if (x.values[gamma.generators()[j]] != generator_values[j])
      fail(ErrorCode::InvalidCocycle, "generator values are inconsistent");
  return x;
}

Cocycle trivial_cocycle(const GroupAction& action) {
  return Cocycle{action, std::vector<ElementId>(action.actor()->order(), 0)};
}

std::vector<Cocycle> enumerate_cocycles(const GroupAction& action) {
  const FiniteGroup& gamma = *action.actor();
  const std::size_t nf = action.target()->order();
  const std::size_t ngen = gamma.generators().size();
  std::set<std::vector<ElementId>> found;
  std::vector<ElementId> choice(ngen, 0);
  for (;;) {
    try {
      found.insert(cocycle_from_generator_values(action, choice).values);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidCocycle) throw;
    }
    std::size_t k = 0;
    while (k < ngen && ++choice[k] == nf) choice[k++] = 0;
    if (k == ngen) break;
  }
  std::vector<Cocycle> out;
  for (const auto& v : found) out.push_back(Cocycle{action, v});
  return out;
}

GroupHom twisted_section(const SemidirectProduct& sp, const Cocycle& x) {
  if (!x.action.same_as(sp.action))
    fail(ErrorCode::GroupMismatch, "cocycle is defined for a different action");
  auto check = validate_cocycle(x);
  if (!check.valid)
    fail(ErrorCode::InvalidCocycle,
         "cocycle law fails at (" + std::to_string(check.violation->first) + ", " +
             std::to_string(check.violation->second) + ")");
  std::vector<ElementId> images(x.values.size());
  for (ElementId s = 0; s < images.size(); ++s) images[s] = sp.pair(x.values[s], s);
  return make_hom(x.action.actor(), sp.group, std::move(images));
}

}  // namespace glat
