// Brute-force reference implementations used only by the tests. None of these
// call into the normal-form code they are meant to check.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "glat/gamma_lattice.hpp"
#include "glat/int_matrix.hpp"

namespace oracle {

using glat::BigInt;
using glat::IntMatrix;
using glat::IntVector;

inline BigInt leibniz_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Fraction-free (Bareiss) elimination, for sizes where Leibniz is too slow.
inline BigInt bareiss_det(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline BigInt det(const IntMatrix& a) { return a.rows() <= 6 ? leibniz_det(a) : bareiss_det(a); }

inline BigInt minor(const IntMatrix& a, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  return det(s);
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// g_k = gcd of all k x k minors; the elementary divisors are g_k / g_{k-1}
/// while g_k is nonzero.
inline IntVector elementary_divisors_by_minors(const IntMatrix& a) {
  IntVector out;
  BigInt prev = 1;
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    BigInt g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& r) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& c) {
        BigInt m = minor(a, r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      BigInt c = minor(a, rows, cols);
      adj(i, j) = (i + j) % 2 ? BigInt(-c) : c;
    }
  return adj;
}

inline BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

/// Elements of Z^n / A Z^n for square nonsingular A, found by breadth-first
/// search over the generators e_i. x lies in A Z^n iff adj(A) x = 0 mod det,
/// so cosets are identified by adj(A) x mod |det|. Stops after `limit`.
struct CosetEnumeration {
  std::vector<IntVector> elements;  // as adj(A) x mod |det|
  BigInt modulus;
  bool complete = true;
};

inline CosetEnumeration coset_bfs(const IntMatrix& a, std::size_t limit = 512) {
  const std::size_t n = a.rows();
  CosetEnumeration out;
  out.modulus = abs(det(a));
  if (n == 0 || out.modulus == 1) {
    out.elements.push_back(IntVector(n, 0));
    return out;
  }
  const IntMatrix adj = adjugate(a);
  std::vector<IntVector> steps;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = mod(adj(i, j), out.modulus);
    steps.push_back(s);
  }
  std::set<IntVector> seen{IntVector(n, 0)};
  std::vector<IntVector> queue{IntVector(n, 0)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& s : steps) {
      IntVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = mod(queue[q][i] + s[i], out.modulus);
      if (seen.insert(v).second) {
        if (seen.size() > limit) {
          out.complete = false;
          out.elements = queue;
          return out;
        }
        queue.push_back(v);
      }
    }
  }
  out.elements = std::move(queue);
  return out;
}

/// Number of elements killed by k in an enumerated coset group.
inline std::size_t killed_by(const CosetEnumeration& e, const BigInt& k) {
  std::size_t count = 0;
  for (const auto& v : e.elements) {
    bool zero = true;
    for (const auto& x : v)
      if (mod(k * x, e.modulus) != 0) zero = false;
    if (zero) ++count;
  }
  return count;
}

/// |C[k]| for C = sum Z/d_i.
inline BigInt killed_by(const IntVector& factors, const BigInt& k) {
  BigInt out = 1;
  for (const auto& d : factors) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
    out *= g;
  }
  return out;
}

using Perm = std::vector<std::size_t>;

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens) {
  Perm id(gens.at(0).size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> out{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(out.begin(), out.end());
    for (const auto& a : cur)
      for (const auto& g : gens)
        if (out.insert(compose(a, g)).second) grew = true;
  }
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

/// Sorted sizes of conjugation orbits of a permutation group.
inline std::vector<std::size_t> class_sizes(const std::set<Perm>& g) {
  std::set<Perm> done;
  std::vector<std::size_t> sizes;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    std::set<Perm> orbit;
    for (const auto& y : g) orbit.insert(compose(compose(y, x), inverse(y)));
    done.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Smallest r in 1..r_max for which r*chi = sum c_i basis_i has a solution with
/// |c_i| <= bound, or 0 if none.
inline long brute_artin_r(const IntVector& chi, const std::vector<IntVector>& basis, long r_max,
                          long bound = 6) {
  const std::size_t k = basis.size();
  const std::size_t classes = chi.size();
  for (long r = 1; r <= r_max; ++r) {
    std::vector<long> c(k, -bound);
    for (;;) {
      bool ok = true;
      for (std::size_t cl = 0; cl < classes && ok; ++cl) {
        BigInt s = 0;
        for (std::size_t i = 0; i < k; ++i) s += c[i] * basis[i][cl];
        if (s != r * chi[cl]) ok = false;
      }
      if (ok) return r;
      std::size_t p = 0;
      while (p < k && ++c[p] > bound) c[p++] = -bound;
      if (p == k) break;
    }
  }
  return 0;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                               long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = dist(rng);
  return a;
}

/// All maps gamma -> F satisfying the cocycle law, by enumerating every function.
inline std::set<std::vector<std::size_t>> brute_cocycles(const glat::GroupAction& act) {
  const auto& gamma = *act.actor();
  const auto& f = *act.target();
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> x(gamma.order(), 0);
  for (;;) {
    bool ok = true;
    for (std::size_t s = 0; s < gamma.order() && ok; ++s)
      for (std::size_t t = 0; t < gamma.order() && ok; ++t)
        if (x[gamma.mul(s, t)] != f.mul(x[s], act.act(s, x[t]))) ok = false;
    if (ok) out.insert(x);
    std::size_t p = 0;
    while (p < x.size() && ++x[p] == f.order()) x[p++] = 0;
    if (p == x.size()) break;
  }
  return out;
}

}  // namespace oracle
