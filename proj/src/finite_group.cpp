#include "glat/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "glat/error.hpp"

namespace glat {
namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j;
      first = false;
      j = p[j];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<std::uint32_t> mul,
                                    std::vector<ElementId> generators,
                                    std::vector<std::string> labels) {
  if (order == 0) fail(ErrorCode::InvalidArgument, "group order must be positive");
  if (mul.size() != order * order) fail(ErrorCode::InvalidArgument, "multiplication table has wrong size");
  for (auto x : mul)
    if (x >= order) fail(ErrorCode::InvalidArgument, "multiplication table entry out of range");
  for (auto g : generators)
    if (g >= order) fail(ErrorCode::InvalidArgument, "generator id out of range");
  for (std::size_t a = 0; a < order; ++a)
    if (mul[a] != a || mul[a * order] != a)
      fail(ErrorCode::InvalidArgument, "element 0 is not a two-sided identity");
  // Latin square: every row and column is a permutation.
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<bool> row(order, false), col(order, false);
    for (std::size_t b = 0; b < order; ++b) {
      if (row[mul[a * order + b]] || col[mul[b * order + a]])
        fail(ErrorCode::InvalidArgument, "multiplication table is not a Latin square");
      row[mul[a * order + b]] = true;
      col[mul[b * order + a]] = true;
    }
  }
  if (order <= 64)
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        for (std::size_t c = 0; c < order; ++c)
          if (mul[mul[a * order + b] * order + c] != mul[a * order + mul[b * order + c]])
            fail(ErrorCode::InvalidArgument, "multiplication table is not associative");

  FiniteGroup g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.generators_ = std::move(generators);
  g.labels_ = std::move(labels);
  g.finish();
  if (g.bfs_order_.size() != order)
    fail(ErrorCode::InvalidArgument, "generators do not generate the group");
  return g;
}

void FiniteGroup::finish() {
  inv_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }

  word_parent_.assign(order_, 0);
  word_generator_.assign(order_, 0);
  bfs_order_.clear();
  std::vector<bool> seen(order_, false);
  seen[0] = true;
  bfs_order_.push_back(0);
  for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
    const ElementId e = bfs_order_[head];
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      const ElementId n = mul(e, generators_[j]);
      if (seen[n]) continue;
      seen[n] = true;
      word_parent_[n] = e;
      word_generator_[n] = j;
      bfs_order_.push_back(n);
    }
  }

  // Conjugacy classes as orbits under conjugation by the generators.
  class_of_.assign(order_, static_cast<std::size_t>(-1));
  std::vector<std::vector<ElementId>> classes;
  for (ElementId x = 0; x < order_; ++x) {
    if (class_of_[x] != static_cast<std::size_t>(-1)) continue;
    std::vector<ElementId> orbit{x};
    class_of_[x] = classes.size();
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (ElementId s : generators_) {
        const ElementId y = conjugate(s, orbit[head]);
        if (class_of_[y] != static_cast<std::size_t>(-1)) continue;
        class_of_[y] = classes.size();
        orbit.push_back(y);
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  classes_ = std::move(classes);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (ElementId x : classes_[c]) class_of_[x] = c;

  if (labels_.size() != order_) {
    labels_.assign(order_, {});
    for (ElementId e = 0; e < order_; ++e) labels_[e] = "g" + std::to_string(e);
  }
}

ElementId FiniteGroup::power(ElementId a, std::size_t k) const {
  ElementId r = 0;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(ElementId a) const {
  std::size_t k = 1;
  for (ElementId x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::optional<ElementId> FiniteGroup::find_permutation(const Permutation& p) const {
  for (ElementId e = 0; e < perms_.size(); ++e)
    if (perms_[e] == p) return e;
  return std::nullopt;
}

FiniteGroup FiniteGroup::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != order_) fail(ErrorCode::InvalidArgument, "one label per element required");
  FiniteGroup g = *this;
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup group_from_generators(const std::vector<Permutation>& perms, std::size_t order_cap) {
  if (perms.empty()) fail(ErrorCode::NotAPermutation, "generator list is empty");
  const std::size_t n = perms.front().size();
  if (n == 0) fail(ErrorCode::NotAPermutation, "permutations must act on at least one point");
  for (const auto& p : perms) {
    if (p.size() != n) fail(ErrorCode::NotAPermutation, "generators act on different point counts");
    std::vector<bool> hit(n, false);
    for (auto x : p) {
      if (x >= n || hit[x]) fail(ErrorCode::NotAPermutation, "generator is not a bijection of {0..n-1}");
      hit[x] = true;
    }
  }

  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::vector<Permutation> elems{id};
  std::map<Permutation, ElementId> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : perms) {
      Permutation q = compose(elems[head], gen);
      if (index.count(q)) continue;
      if (elems.size() >= order_cap)
        fail(ErrorCode::ClosureTooLarge,
             "group order exceeds the cap of " + std::to_string(order_cap));
      index.emplace(q, elems.size());
      elems.push_back(std::move(q));
    }
  }

  const std::size_t order = elems.size();
  FiniteGroup g;
  g.order_ = order;
  g.mul_.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      g.mul_[a * order + b] = static_cast<std::uint32_t>(index.at(compose(elems[a], elems[b])));
  for (const auto& gen : perms) g.generators_.push_back(index.at(gen));
  g.labels_.reserve(order);
  for (const auto& p : elems) g.labels_.push_back(cycle_notation(p));
  g.perms_ = std::move(elems);
  g.finish();
  return g;
}

GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

bool verify_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (ElementId a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return false;
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return generated_subgroup(g, g.generators()).size() == n;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  if (h.front() != 0) return false;
  std::vector<bool> in(g.order(), false);
  for (auto x : h) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  for (auto a : h)
    for (auto b : h)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const ElementId> elements) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> list{0};
  in[0] = true;
  for (std::size_t head = 0; head < list.size(); ++head)
    for (ElementId s : elements) {
      const ElementId y = g.mul(list[head], s);
      if (in[y]) continue;
      in[y] = true;
      list.push_back(y);
    }
  std::sort(list.begin(), list.end());
  return list;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, ElementId by, const Subgroup& h) {
  Subgroup c;
  c.reserve(h.size());
  for (auto x : h) c.push_back(g.conjugate(by, x));
  std::sort(c.begin(), c.end());
  return c;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

std::vector<Subgroup> class_reps(const FiniteGroup& g, std::vector<Subgroup> subgroups) {
  std::sort(subgroups.begin(), subgroups.end(), subgroup_less);
  std::set<Subgroup> assigned;
  std::vector<Subgroup> reps;
  for (const auto& s : subgroups) {
    if (assigned.count(s)) continue;
    for (ElementId x = 0; x < g.order(); ++x) assigned.insert(conjugate_subgroup(g, x, s));
    reps.push_back(s);  // first in sorted order, hence minimal in its class
  }
  return reps;
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> found;
  for (ElementId e = 0; e < g.order(); ++e) {
    const ElementId gen[] = {e};
    found.insert(generated_subgroup(g, gen));
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<Subgroup> cyclic_subgroup_class_reps(const FiniteGroup& g) {
  return class_reps(g, cyclic_subgroups(g));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  const std::vector<Subgroup> cyclic = cyclic_subgroups(g);
  std::set<Subgroup> found(cyclic.begin(), cyclic.end());
  std::vector<Subgroup> frontier(cyclic.begin(), cyclic.end());
  // Every subgroup is a join of cyclic subgroups.
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
        std::vector<ElementId> gens = s;
        gens.insert(gens.end(), c.begin(), c.end());
        Subgroup j = generated_subgroup(g, gens);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> subgroup_class_reps(const FiniteGroup& g) {
  return class_reps(g, all_subgroups(g));
}

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<ElementId> images) {
  if (images.size() != source->order())
    fail(ErrorCode::NotAHomomorphism, "homomorphism needs one image per source element");
  for (auto x : images)
    if (x >= target->order()) fail(ErrorCode::NotAHomomorphism, "image id out of range");
  for (ElementId a = 0; a < source->order(); ++a)
    for (ElementId b = 0; b < source->order(); ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
        fail(ErrorCode::NotAHomomorphism, "map is not a homomorphism at (" + std::to_string(a) +
                                              ", " + std::to_string(b) + ")");
  return GroupHom{std::move(source), std::move(target), std::move(images)};
}

GroupHom hom_from_generator_images(GroupPtr source, GroupPtr target,
                                   const std::vector<ElementId>& generator_images) {
  if (generator_images.size() != source->generators().size())
    fail(ErrorCode::NotAHomomorphism, "one image per generator required");
  std::vector<ElementId> images(source->order(), 0);
  for (ElementId e : source->bfs_order()) {
    if (e == 0) continue;
    images[e] = target->mul(images[source->word_parent(e)],
                            generator_images[source->word_generator(e)]);
  }
  return make_hom(std::move(source), std::move(target), std::move(images));
}

GroupHom identity_hom(GroupPtr g) {
  std::vector<ElementId> images(g->order());
  for (ElementId e = 0; e < g->order(); ++e) images[e] = e;
  return GroupHom{g, g, std::move(images)};
}

GroupHom trivial_hom(GroupPtr source, GroupPtr target) {
  std::vector<ElementId> images(source->order(), 0);
  return GroupHom{std::move(source), std::move(target), std::move(images)};
}

std::vector<std::vector<ElementId>> automorphisms(const FiniteGroup& g) {
  const auto& gens = g.generators();
  const std::size_t n = g.order();
  std::set<std::vector<ElementId>> found;
  std::vector<ElementId> choice(gens.size(), 0);
  for (;;) {
    std::vector<ElementId> img(n, 0);
    for (ElementId e : g.bfs_order())
      if (e != 0) img[e] = g.mul(img[g.word_parent(e)], choice[g.word_generator(e)]);
    bool ok = true;
    std::vector<bool> hit(n, false);
    for (ElementId e = 0; e < n && ok; ++e) {
      if (hit[img[e]]) ok = false;
      hit[img[e]] = true;
    }
    for (ElementId a = 0; a < n && ok; ++a)
      for (ElementId b = 0; b < n && ok; ++b)
        if (img[g.mul(a, b)] != g.mul(img[a], img[b])) ok = false;
    if (ok) found.insert(std::move(img));

    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == n) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace glat
