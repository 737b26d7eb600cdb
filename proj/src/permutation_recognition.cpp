#include <algorithm>
#include <map>

#include "glat/error.hpp"
#include "glat/gamma_lattice.hpp"

namespace glat {
namespace {

IntVector permutation_character(const FiniteGroup& g, const Subgroup& h) {
  const auto cosets = left_cosets(g, h);
  IntVector chi;
  for (const auto& cls : g.conjugacy_classes()) {
    const ElementId x = cls.front();
    long fixed = 0;
    for (const auto& c : cosets) {
      // x c = c  iff  x * rep lies in c
      const ElementId y = g.mul(x, c.front());
      if (std::binary_search(c.begin(), c.end(), y)) ++fixed;
    }
    chi.emplace_back(fixed);
  }
  return chi;
}

// Nonnegative integer solutions of sum_j a_j * pi_j = chi.
void decompose(const std::vector<IntVector>& pis, std::size_t j, IntVector& remaining,
               std::vector<long>& a, std::vector<std::vector<long>>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  if (j == pis.size()) {
    for (const auto& r : remaining)
      if (sgn(r) != 0) return;
    out.push_back(a);
    return;
  }
  const IntVector& pi = pis[j];
  long count = 0;
  for (;;) {
    a[j] = count;
    decompose(pis, j + 1, remaining, a, out, cap);
    bool ok = true;
    for (std::size_t c = 0; c < pi.size(); ++c) {
      remaining[c] -= pi[c];
      if (sgn(remaining[c]) < 0) ok = false;
    }
    ++count;
    if (!ok) break;
  }
  for (std::size_t c = 0; c < pi.size(); ++c) remaining[c] += BigInt(count) * pi[c];
  a[j] = 0;
}

// Vectors of the box [-b, b]^d ordered by max-norm, then lexicographically
// over 0, 1, -1, 2, -2, ...; only those whose first nonzero entry is positive.
std::vector<std::vector<long>> box_vectors(std::size_t d, long b, std::size_t limit) {
  std::vector<std::vector<long>> out;
  if (d == 0) return out;
  const std::size_t side = static_cast<std::size_t>(2 * b + 1);
  std::vector<std::size_t> idx(d, 0);
  auto value = [](std::size_t i) {
    return i % 2 == 1 ? static_cast<long>((i + 1) / 2) : -static_cast<long>(i / 2);
  };
  for (;;) {
    std::size_t p = d;
    while (p > 0 && ++idx[p - 1] == side) idx[--p] = 0;
    if (p == 0) break;
    std::vector<long> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = value(idx[i]);
    auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (first == v.end() || *first < 0) continue;
    out.push_back(std::move(v));
    if (out.size() >= limit) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    long mx = 0, my = 0;
    for (long t : x) mx = std::max(mx, std::abs(t));
    for (long t : y) my = std::max(my, std::abs(t));
    return mx < my;
  });
  return out;
}

// Fixed sublattice M^H, basis vectors as rows.
IntMatrix fixed_sublattice(const GammaLattice& m, const Subgroup& h) {
  const std::size_t n = m.rank();
  IntMatrix eq(h.size() * n, n);
  std::size_t row = 0;
  for (ElementId x : h) {
    const IntMatrix& a = m.action(x);
    for (std::size_t i = 0; i < n; ++i, ++row)
      for (std::size_t j = 0; j < n; ++j) eq(row, j) = a(i, j) - (i == j ? 1 : 0);
  }
  return kernel_basis(eq);
}

struct Orbit {
  std::vector<IntVector> vectors;
};

class BasisSearch {
 public:
  BasisSearch(const GammaLattice& m, const std::vector<std::vector<Orbit>>& candidates,
              const std::vector<std::size_t>& slot_kind, std::uint64_t budget)
      : m_(m), candidates_(candidates), slot_kind_(slot_kind), budget_(budget) {}

  std::optional<std::vector<IntVector>> run() {
    std::vector<IntVector> chosen;
    if (dfs(0, 0, chosen)) return chosen;
    return std::nullopt;
  }

  bool exhausted_budget() const { return nodes_ > budget_; }

 private:
  bool dfs(std::size_t slot, std::size_t min_index, std::vector<IntVector>& chosen) {
    if (slot == slot_kind_.size()) return chosen.size() == m_.rank();
    const auto& cands = candidates_[slot_kind_[slot]];
    for (std::size_t c = min_index; c < cands.size(); ++c) {
      if (++nodes_ > budget_) return false;
      const auto& orbit = cands[c].vectors;
      const std::size_t before = chosen.size();
      chosen.insert(chosen.end(), orbit.begin(), orbit.end());
      IntMatrix b = IntMatrix::from_columns(m_.rank(), chosen);
      CokernelInfo info = cokernel_structure(b);
      // Independent and primitive: rank grows by the orbit size, no torsion.
      const bool ok = m_.rank() - info.free_rank == chosen.size() && info.torsion.is_trivial();
      if (ok) {
        const bool same_next =
            slot + 1 < slot_kind_.size() && slot_kind_[slot + 1] == slot_kind_[slot];
        if (dfs(slot + 1, same_next ? c + 1 : 0, chosen)) return true;
      }
      chosen.resize(before);
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const GammaLattice& m_;
  const std::vector<std::vector<Orbit>>& candidates_;
  const std::vector<std::size_t>& slot_kind_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

BigInt cyclic_h1_order(const GammaLattice& m, ElementId h) {
  const FiniteGroup& g = *m.group();
  const std::size_t n = m.rank();
  if (n == 0) return 1;
  const std::size_t k = g.element_order(h);
  const IntMatrix& a = m.action(h);
  IntMatrix norm(n, n);
  IntMatrix p = IntMatrix::identity(n);
  for (std::size_t i = 0; i < k; ++i) {
    norm += p;
    p = p * a;
  }
  // H^1 = ker(N) / (h - 1) M.
  IntMatrix z = kernel_basis(norm);  // rows
  if (z.rows() == 0) return 1;
  IntMatrix zt = z.transpose();
  IntMatrix b = a - IntMatrix::identity(n);
  std::vector<IntVector> coords;
  for (std::size_t j = 0; j < n; ++j) {
    auto y = solve_integer_linear(zt, b.column(j));
    if (!y) fail(ErrorCode::InternalContradiction, "(h-1)M is not contained in ker N");
    coords.push_back(std::move(*y));
  }
  CokernelInfo info = cokernel_structure(IntMatrix::from_columns(z.rows(), coords));
  if (info.free_rank != 0)
    fail(ErrorCode::InternalContradiction, "H^1 of a finite cyclic group has a free part");
  return info.torsion.order();
}

PermutationRecognition is_permutation_lattice(const GammaLattice& m, const RecognitionOptions& opts) {
  const FiniteGroup& g = *m.group();
  const std::size_t n = m.rank();
  PermutationRecognition out;

  bool standard = true;
  for (ElementId s : g.generators())
    if (!is_permutation_matrix(m.action(s))) standard = false;
  if (standard) {
    out.verdict = Verdict::Yes;
    out.basis = IntMatrix::identity(n);
    out.reason = "standard basis is permuted";
    return out;
  }

  const IntVector chi = character(m).as_integers();
  for (const auto& v : chi)
    if (sgn(v) < 0) {
      out.verdict = Verdict::No;
      out.reason = "character takes a negative value";
      return out;
    }

  const auto reps = subgroup_class_reps(g);
  std::vector<IntVector> pis;
  for (const auto& h : reps) pis.push_back(permutation_character(g, h));
  std::vector<std::vector<long>> decomps;
  {
    IntVector remaining = chi;
    std::vector<long> a(reps.size(), 0);
    decompose(pis, 0, remaining, a, decomps, opts.max_decompositions + 1);
  }
  if (decomps.empty()) {
    out.verdict = Verdict::No;
    out.reason = "character is not a permutation character";
    return out;
  }

  for (const auto& c : cyclic_subgroup_class_reps(g)) {
    const ElementId h = c.size() > 1 ? *std::max_element(c.begin(), c.end(), [&](auto x, auto y) {
      return g.element_order(x) < g.element_order(y);
    }) : 0;
    if (cyclic_h1_order(m, h) != 1) {
      out.verdict = Verdict::No;
      out.reason = "nonzero H^1 on a cyclic subgroup";
      return out;
    }
  }

  const bool truncated = decomps.size() > opts.max_decompositions;
  if (truncated) decomps.resize(opts.max_decompositions);

  // Candidate orbits per subgroup class: orbits of vectors in M^H whose
  // stabiliser is exactly H.
  std::map<std::size_t, std::vector<Orbit>> cand_cache;
  auto candidates_for = [&](std::size_t j) -> const std::vector<Orbit>& {
    auto it = cand_cache.find(j);
    if (it != cand_cache.end()) return it->second;
    const Subgroup& h = reps[j];
    IntMatrix fixed = fixed_sublattice(m, h);
    const auto cosets = left_cosets(g, h);
    std::vector<Orbit> orbits;
    for (const auto& c : box_vectors(fixed.rows(), opts.coord_bound, opts.node_budget)) {
      IntVector v(n);
      for (std::size_t i = 0; i < fixed.rows(); ++i)
        for (std::size_t t = 0; t < n; ++t) v[t] += c[i] * fixed(i, t);
      bool exact = true;
      for (ElementId x = 0; x < g.order() && exact; ++x)
        if (!std::binary_search(h.begin(), h.end(), x) && m.action(x) * v == v) exact = false;
      if (!exact) continue;
      Orbit o;
      for (const auto& coset : cosets) o.vectors.push_back(m.action(coset.front()) * v);
      orbits.push_back(std::move(o));
    }
    return cand_cache.emplace(j, std::move(orbits)).first->second;
  };

  bool budget_hit = false;
  for (const auto& a : decomps) {
    std::vector<std::size_t> slots;
    for (std::size_t j = 0; j < a.size(); ++j)
      for (long t = 0; t < a[j]; ++t) slots.push_back(j);
    std::vector<std::vector<Orbit>> cands(reps.size());
    for (std::size_t j : slots)
      if (cands[j].empty()) cands[j] = candidates_for(j);
    BasisSearch search(m, cands, slots, opts.node_budget);
    if (auto basis = search.run()) {
      out.verdict = Verdict::Yes;
      out.basis = IntMatrix::from_columns(n, *basis);
      out.reason = "permuted basis found by bounded search";
      return out;
    }
    if (search.exhausted_budget()) budget_hit = true;
  }

  out.verdict = Verdict::Unknown;
  out.reason = budget_hit || truncated ? "search budget exhausted"
                                       : "no permuted basis within the coordinate bound";
  return out;
}

}  // namespace glat
