#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace glat {

using ElementId = std::size_t;
using Permutation = std::vector<std::size_t>;
/// Sorted list of element ids.
using Subgroup = std::vector<ElementId>;

inline constexpr std::size_t kDefaultOrderCap = 10080;

/// Explicit finite group given by its multiplication table. Element 0 is the
/// identity. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates identity, inverses and the Latin-square property. Associativity
  /// is checked exhaustively for orders up to 64.
  static FiniteGroup from_table(std::size_t order, std::vector<std::uint32_t> mul,
                                std::vector<ElementId> generators,
                                std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  ElementId identity() const { return 0; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[a * order_ + b]; }
  ElementId inv(ElementId a) const { return inv_[a]; }
  ElementId conjugate(ElementId g, ElementId x) const { return mul(mul(g, x), inv(g)); }
  ElementId power(ElementId a, std::size_t k) const;
  std::size_t element_order(ElementId a) const;

  const std::vector<ElementId>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId a) const { return labels_[a]; }

  /// Breadth-first spanning tree over the generators: every non-identity
  /// element e equals word_parent(e) * generators()[word_generator(e)], and
  /// bfs_order() lists parents before children.
  const std::vector<ElementId>& bfs_order() const { return bfs_order_; }
  ElementId word_parent(ElementId e) const { return word_parent_[e]; }
  std::size_t word_generator(ElementId e) const { return word_generator_[e]; }

  /// Classes ordered by (size, minimal id), ids ascending inside a class.
  const std::vector<std::vector<ElementId>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(ElementId a) const { return class_of_[a]; }

  /// Permutation images of each element when built from permutations.
  const std::vector<Permutation>& permutations() const { return perms_; }
  std::optional<ElementId> find_permutation(const Permutation& p) const;

  const std::vector<std::uint32_t>& table() const { return mul_; }
  /// Copy with new element labels (one per element).
  FiniteGroup with_labels(std::vector<std::string> labels) const;

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && mul_ == other.mul_;
  }

 private:
  FiniteGroup() = default;
  friend FiniteGroup group_from_generators(const std::vector<Permutation>&, std::size_t);

  void finish();  // inverses, BFS words, classes

  std::size_t order_ = 0;
  std::vector<std::uint32_t> mul_;
  std::vector<ElementId> inv_;
  std::vector<ElementId> generators_;
  std::vector<std::string> labels_;
  std::vector<ElementId> bfs_order_;
  std::vector<ElementId> word_parent_;
  std::vector<std::size_t> word_generator_;
  std::vector<std::vector<ElementId>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of the given permutations under composition, (p*q)(i) = p(q(i)).
/// Elements are numbered breadth-first from the identity, multiplying by the
/// generators on the right in input order.
FiniteGroup group_from_generators(const std::vector<Permutation>& perms,
                                  std::size_t order_cap = kDefaultOrderCap);

GroupPtr make_group(FiniteGroup g);

/// Cycle notation, e.g. "(0 1 2)(3 4)" or "()".
std::string cycle_notation(const Permutation& p);

/// Exhaustive associativity / identity / inverse / generation check.
bool verify_group_axioms(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
/// Sorted closure of a set of elements.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const ElementId> elements);
Subgroup conjugate_subgroup(const FiniteGroup& g, ElementId by, const Subgroup& h);
/// Ordering used for every subgroup listing: (order, lexicographic ids).
bool subgroup_less(const Subgroup& a, const Subgroup& b);

/// One representative per conjugacy class of cyclic subgroups, ordered by
/// (order, lexicographic element set); each representative is the minimal
/// member of its class under that ordering. The trivial subgroup is first.
std::vector<Subgroup> cyclic_subgroup_class_reps(const FiniteGroup& g);
/// Same as above over all subgroups.
std::vector<Subgroup> subgroup_class_reps(const FiniteGroup& g);
/// Every subgroup, ordered by (order, lexicographic ids).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Verified group homomorphism.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<ElementId> images;

  ElementId operator()(ElementId a) const { return images[a]; }
};

/// Throws NotAHomomorphism with a witness pair if `images` is not a homomorphism.
GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<ElementId> images);
/// Extends generator images along BFS words, then verifies.
GroupHom hom_from_generator_images(GroupPtr source, GroupPtr target,
                                   const std::vector<ElementId>& generator_images);
GroupHom identity_hom(GroupPtr g);
GroupHom trivial_hom(GroupPtr source, GroupPtr target);

/// Automorphisms of g as permutations of element ids, sorted.
std::vector<std::vector<ElementId>> automorphisms(const FiniteGroup& g);

// ---------------------------------------------------------------------------
// Actions, semidirect products and cocycles.

/// Action of `actor` on `target` by automorphisms.
class GroupAction {
 public:
  /// Validates that every row is an automorphism and that the map
  /// actor -> Aut(target) is a homomorphism.
  static GroupAction from_table(GroupPtr actor, GroupPtr target, std::vector<ElementId> table);
  /// `generator_automorphisms[j]` is the automorphism (as a permutation of
  /// target ids) by which actor generator j acts.
  static GroupAction from_generator_automorphisms(
      GroupPtr actor, GroupPtr target,
      const std::vector<std::vector<ElementId>>& generator_automorphisms);
  static GroupAction trivial(GroupPtr actor, GroupPtr target);

  const GroupPtr& actor() const { return actor_; }
  const GroupPtr& target() const { return target_; }
  ElementId act(ElementId gamma, ElementId f) const { return table_[gamma * target_->order() + f]; }
  const std::vector<ElementId>& table() const { return table_; }

  bool same_as(const GroupAction& other) const;

 private:
  GroupAction() = default;
  GroupPtr actor_;
  GroupPtr target_;
  std::vector<ElementId> table_;
};

/// Every action of `actor` on `target`, in a canonical order.
std::vector<GroupAction> enumerate_actions(GroupPtr actor, GroupPtr target);

/// F x| Gamma on pairs (f, gamma), numbered gamma * |F| + f, with
/// (f1,g1)(f2,g2) = (f1 * act(g1,f2), g1 g2). Generators: those of F, then
/// those of Gamma through the natural section.
struct SemidirectProduct {
  GroupAction action;
  GroupPtr group;
  std::vector<ElementId> f_embedding;  // F -> F_Gamma
  std::vector<ElementId> section;      // Gamma -> F_Gamma, gamma -> (1, gamma)
  std::vector<ElementId> projection;   // F_Gamma -> Gamma

  ElementId pair(ElementId f, ElementId gamma) const {
    return gamma * action.target()->order() + f;
  }
  GroupHom section_hom() const;
};

SemidirectProduct semidirect_product(const GroupAction& action);

/// Map sigma -> x_sigma from the actor into the target of `action`.
struct Cocycle {
  GroupAction action;
  std::vector<ElementId> values;
};

struct CocycleCheck {
  bool valid = true;
  /// First (sigma, tau) in lexicographic order violating
  /// x_{sigma tau} = x_sigma * sigma(x_tau).
  std::optional<std::pair<ElementId, ElementId>> violation;
};

CocycleCheck validate_cocycle(const Cocycle& x);
/// Extends values on the actor's generators along BFS words and validates;
/// throws InvalidCocycle.
Cocycle cocycle_from_generator_values(const GroupAction& action,
                                      const std::vector<ElementId>& generator_values);
Cocycle trivial_cocycle(const GroupAction& action);
/// All 1-cocycles, sorted by value vector.
std::vector<Cocycle> enumerate_cocycles(const GroupAction& action);

/// sigma -> (x_sigma, sigma), verified to be a homomorphism.
GroupHom twisted_section(const SemidirectProduct& sp, const Cocycle& x);

}  // namespace glat
