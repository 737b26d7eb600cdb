#include "glat/normal_form.hpp"

#include <sstream>
#include <utility>

#include "glat/error.hpp"

namespace glat {
namespace {

// Replace rows (p, i) of both matrices by the unimodular combination that
// puts gcd(a, b) in row p and 0 in row i at the current column.
void gcd_combine_rows(IntMatrix& h, IntMatrix& u, std::size_t p, std::size_t i,
                      std::size_t col) {
  const BigInt a = h(p, col);
  const BigInt b = h(i, col);
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
  if (q * a == b) {
    h.add_row_multiple(i, p, -q);
    u.add_row_multiple(i, p, -q);
    return;
  }
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const BigInt bg = b / g, ag = a / g;
  auto mix = [&](IntMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt rp = s * m(p, j) + t * m(i, j);
      BigInt ri = -bg * m(p, j) + ag * m(i, j);
      m(p, j) = std::move(rp);
      m(i, j) = std::move(ri);
    }
  };
  mix(h);
  mix(u);
}

// Rational reduced row echelon form, used for kernels where the integer
// elimination would blow up on wide systems.
struct RationalEchelon {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivot_cols;
};

RationalEchelon rational_rref(const IntMatrix& a) {
  RationalEchelon e;
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Rational>> r(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = a(i, j);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && sgn(r[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(r[row], r[p]);
    const Rational piv = r[row][c];
    for (std::size_t j = c; j < n; ++j) r[row][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(r[i][c]) == 0) continue;
      const Rational f = r[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (sgn(r[row][j]) != 0) r[i][j] -= f * r[row][j];
    }
    e.pivot_cols.push_back(c);
    ++row;
  }
  r.resize(row);
  e.rows = std::move(r);
  return e;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.rows()), {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t piv = 0;
  for (std::size_t c = 0; c < cols && piv < rows; ++c) {
    std::size_t k = piv;
    while (k < rows && sgn(h(k, c)) == 0) ++k;
    if (k == rows) continue;
    h.swap_rows(piv, k);
    u.swap_rows(piv, k);
    for (std::size_t i = piv + 1; i < rows; ++i)
      if (sgn(h(i, c)) != 0) gcd_combine_rows(h, u, piv, i, c);
    if (sgn(h(piv, c)) < 0) {
      h.negate_row(piv);
      u.negate_row(piv);
    }
    for (std::size_t i = 0; i < piv; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(piv, c).get_mpz_t());
      if (sgn(q) != 0) {
        h.add_row_multiple(i, piv, -q);
        u.add_row_multiple(i, piv, -q);
      }
    }
    out.pivot_cols.push_back(c);
    ++piv;
  }
  return out;
}

SnfDecomposition smith_normal_form(const IntMatrix& a) {
  SnfDecomposition out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), {}};
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  const std::size_t rows = d.rows(), cols = d.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    bool empty = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (pi == rows || cmpabs(d(i, j), d(pi, pj)) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        empty = true;
        break;
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (empty) break;
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    out.elementary_divisors.push_back(d(t, t));
  }
  return out;
}

FiniteAbelianGroup::FiniteAbelianGroup(IntVector invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) fail(ErrorCode::InvalidArgument, "invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      fail(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
  }
}

BigInt FiniteAbelianGroup::order() const {
  BigInt n = 1;
  for (const auto& f : factors_) n *= f;
  return n;
}

BigInt FiniteAbelianGroup::exponent() const {
  return factors_.empty() ? BigInt(1) : factors_.back();
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    os << (i ? " x " : "") << "Z/" << factors_[i].get_str();
  return os.str();
}

CokernelInfo cokernel_structure(const IntMatrix& a) {
  SnfDecomposition snf = smith_normal_form(a);
  IntVector factors;
  for (const auto& d : snf.elementary_divisors)
    if (d > 1) factors.push_back(d);
  CokernelInfo info;
  info.torsion = FiniteAbelianGroup(std::move(factors));
  info.free_rank = a.rows() - snf.elementary_divisors.size();
  return info;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  RationalEchelon e = rational_rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<IntVector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n);
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = -e.rows[k][f];
    BigInt den = 1;
    for (const auto& q : x) den = lcm(den, q.get_den());
    IntVector xi(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = x[j] * den;
      xi[j] = s.get_num();
    }
    vectors.push_back(std::move(xi));
  }
  if (vectors.empty()) return IntMatrix(0, n);

  // Saturate: the first k rows of V^{-1} from the SNF of the row basis span
  // (Q-span) ∩ Z^n.
  IntMatrix k = IntMatrix::from_rows(n, vectors);
  SnfDecomposition snf = smith_normal_form(k);
  IntMatrix vinv = scaled_inverse(snf.V, 1);
  IntMatrix sat = vinv.submatrix(0, 0, vectors.size(), n);
  return hermite_normal_form(sat).H;
}

std::optional<IntVector> solve_integer_linear(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) fail(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  // Column echelon form L = A W with W = U^T from the HNF of A^T.
  HermiteForm hf = hermite_normal_form(a.transpose());
  IntMatrix l = hf.H.transpose();
  IntMatrix w = hf.U.transpose();
  IntVector res = b;
  IntVector y(a.cols());
  for (std::size_t j = 0; j < hf.rank(); ++j) {
    const std::size_t p = hf.pivot_cols[j];
    if (!mpz_divisible_p(res[p].get_mpz_t(), l(p, j).get_mpz_t())) return std::nullopt;
    y[j] = res[p] / l(p, j);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] -= y[j] * l(i, j);
  }
  for (const auto& x : res)
    if (sgn(x) != 0) return std::nullopt;
  return w * y;
}

MinimalMultiplier minimal_multiplier(const IntVector& v, const std::vector<IntVector>& basis) {
  const std::size_t dim = v.size();
  IntMatrix b = IntMatrix::from_columns(dim, basis);
  HermiteForm hf = hermite_normal_form(b.transpose());
  IntMatrix l = hf.H.transpose();
  IntMatrix w = hf.U.transpose();

  std::vector<Rational> res(dim);
  for (std::size_t i = 0; i < dim; ++i) res[i] = v[i];
  std::vector<Rational> y(b.cols());
  for (std::size_t j = 0; j < hf.rank(); ++j) {
    const std::size_t p = hf.pivot_cols[j];
    y[j] = res[p] / Rational(l(p, j));
    for (std::size_t i = 0; i < dim; ++i)
      if (sgn(l(i, j)) != 0) res[i] -= y[j] * l(i, j);
  }
  for (const auto& x : res)
    if (sgn(x) != 0) fail(ErrorCode::NotInRationalSpan, "vector is not in the rational span of the basis");

  BigInt r = 1;
  for (const auto& q : y) r = lcm(r, q.get_den());
  IntVector yi(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    Rational s = y[j] * r;
    yi[j] = s.get_num();
  }
  return {r, w * yi};
}

IntMatrix scaled_inverse(const IntMatrix& a, const BigInt& scale) {
  if (!a.is_square()) fail(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  // Gauss-Jordan over Q on [A | I].
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) fail(ErrorCode::NotFiniteIndex, "matrix is singular");
    std::swap(m[c], m[p]);
    const Rational piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (sgn(m[c][j]) != 0) m[i][j] -= f * m[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = m[i][n + j] * scale;
      if (x.get_den() != 1) fail(ErrorCode::InvalidArgument, "scaled inverse is not integral");
      out(i, j) = x.get_num();
    }
  return out;
}

}  // namespace glat
