#include <algorithm>
#include <random>

#include "glat/error.hpp"
#include "glat/gamma_lattice.hpp"

namespace glat {
namespace {

IntMatrix combine(const std::vector<IntMatrix>& basis, const std::vector<long>& coeffs,
                  std::size_t rows, std::size_t cols) {
  IntMatrix e(rows, cols);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) e += BigInt(coeffs[i]) * basis[i];
  return e;
}

// Entrywise order: smaller absolute value first, positive before negative.
int compare_entries(const IntMatrix& a, const IntMatrix& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  for (std::size_t k = 0; k < x.size(); ++k) {
    int c = cmpabs(x[k], y[k]);
    if (c != 0) return c;
    const bool nx = sgn(x[k]) < 0, ny = sgn(y[k]) < 0;
    if (nx != ny) return nx ? 1 : -1;
  }
  return 0;
}

struct Best {
  std::optional<IntMatrix> matrix;
  BigInt abs_det;

  void offer(IntMatrix e) {
    BigInt d = determinant(e);
    if (sgn(d) == 0) return;
    d = abs(d);
    if (!matrix || d < abs_det || (d == abs_det && compare_entries(e, *matrix) < 0)) {
      matrix = std::move(e);
      abs_det = std::move(d);
    }
  }
};

// 0, 1, -1, 2, -2, ...
long box_value(std::size_t idx) {
  return idx % 2 == 1 ? static_cast<long>((idx + 1) / 2) : -static_cast<long>(idx / 2);
}

}  // namespace

std::string_view to_string(EmbeddingSearchMethod m) {
  switch (m) {
    case EmbeddingSearchMethod::Identity: return "identity";
    case EmbeddingSearchMethod::Box: return "box";
    case EmbeddingSearchMethod::Greedy: return "greedy";
    case EmbeddingSearchMethod::Randomized: return "randomized";
  }
  return "unknown";
}

std::vector<IntMatrix> intertwiner_basis(const GammaLattice& m, const GammaLattice& n) {
  if (m.group() != n.group() && !m.group()->same_table(*n.group()))
    fail(ErrorCode::GroupMismatch, "intertwiner_basis: lattices are over different groups");
  const std::size_t nm = m.rank(), nn = n.rank();
  const std::size_t unknowns = nm * nn;
  if (unknowns == 0) return {};
  const auto& gens = m.group()->generators();
  IntMatrix eq(gens.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (ElementId s : gens) {
    const IntMatrix& am = m.action(s);
    const IntMatrix& an = n.action(s);
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nm; ++j, ++row) {
        for (std::size_t k = 0; k < nm; ++k) eq(row, i * nm + k) += am(k, j);
        for (std::size_t k = 0; k < nn; ++k) eq(row, k * nm + j) -= an(i, k);
      }
  }
  IntMatrix kb = kernel_basis(eq);
  std::vector<IntMatrix> basis;
  for (std::size_t b = 0; b < kb.rows(); ++b) {
    IntMatrix e(nn, nm);
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nm; ++j) e(i, j) = kb(b, i * nm + j);
    basis.push_back(std::move(e));
  }
  return basis;
}

FiniteIndexEmbedding equivariant_finite_index_embedding(const GammaLattice& m1,
                                                        const GammaLattice& m2,
                                                        const EmbeddingSearchOptions& opts) {
  if (m1.group() != m2.group() && !m1.group()->same_table(*m2.group()))
    fail(ErrorCode::GroupMismatch, "embedding: lattices are over different groups");
  if (m1.rank() != m2.rank())
    fail(ErrorCode::InvalidArgument, "embedding: ranks differ");
  if (!(character(m1) == character(m2)))
    fail(ErrorCode::InvalidArgument, "embedding: characters differ");

  const std::size_t n = m1.rank();
  if (m1.actions() == m2.actions())
    return {make_embedding(m1, m2, IntMatrix::identity(n)), EmbeddingSearchMethod::Identity};

  const auto basis = intertwiner_basis(m1, m2);
  const std::size_t k = basis.size();
  if (k == 0)
    fail(ErrorCode::NoInvertibleIntertwiner, "no nonzero intertwiner exists");

  // Exhaustive box search while it fits the budget, escalating the box.
  for (long box = opts.initial_box; box <= opts.max_box; box *= 2) {
    const std::uint64_t side = static_cast<std::uint64_t>(2 * box + 1);
    std::uint64_t count = 1;
    bool too_big = false;
    for (std::size_t i = 0; i < k && !too_big; ++i) {
      count *= side;
      if (count > opts.box_budget) too_big = true;
    }
    if (too_big) break;
    Best best;
    std::vector<std::size_t> idx(k, 0);
    std::vector<long> c(k, 0);
    for (;;) {
      std::size_t p = 0;
      while (p < k && ++idx[p] == side) idx[p++] = 0;
      if (p == k) break;
      for (std::size_t i = 0; i < k; ++i) c[i] = box_value(idx[i]);
      best.offer(combine(basis, c, n, n));
    }
    if (best.matrix)
      return {make_embedding(m1, m2, std::move(*best.matrix)), EmbeddingSearchMethod::Box};
  }

  // Greedy: add basis elements one at a time, choosing the small coefficient
  // that maximises the rank of the partial sum (nonzero coefficients first).
  {
    std::vector<long> values;
    for (long v = 1; v <= static_cast<long>(n) + 1; ++v) {
      values.push_back(v);
      values.push_back(-v);
    }
    values.push_back(0);
    IntMatrix e(n, n);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t best_rank = 0;
      long best_v = 0;
      bool first = true;
      for (long v : values) {
        IntMatrix trial = e + BigInt(v) * basis[i];
        const std::size_t r = rank(trial);
        if (first || r > best_rank) {
          best_rank = r;
          best_v = v;
          first = false;
        }
        if (r == n) break;
      }
      e += BigInt(best_v) * basis[i];
    }
    if (rank(e) == n) return {make_embedding(m1, m2, std::move(e)), EmbeddingSearchMethod::Greedy};
  }

  // Seeded random fallback; deterministic for a fixed seed.
  if (!opts.allow_random)
    fail(ErrorCode::SeedlessViolation, "deterministic search failed and the random fallback is disabled");
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> dist(-opts.initial_box, opts.initial_box);
  Best best;
  std::vector<long> c(k);
  for (std::size_t draw = 0; draw < opts.random_draws; ++draw) {
    for (auto& x : c) x = dist(rng);
    best.offer(combine(basis, c, n, n));
  }
  if (!best.matrix)
    fail(ErrorCode::NoInvertibleIntertwiner,
         "no invertible intertwiner found within the configured search limits");
  return {make_embedding(m1, m2, std::move(*best.matrix)), EmbeddingSearchMethod::Randomized};
}

}  // namespace glat
