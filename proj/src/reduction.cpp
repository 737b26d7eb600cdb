#include "glat/reduction.hpp"

#include "glat/error.hpp"

namespace glat {
namespace {

BigInt mod_positive(const BigInt& x, const BigInt& d) {
  BigInt r = x % d;
  if (sgn(r) < 0) r += d;
  return r;
}

void require_finite_index(const IntMatrix& a, const char* what) {
  if (a.rows() != a.cols())
    fail(ErrorCode::NotFiniteIndex, std::string(what) + ": matrix is not square");
  if (a.rows() > 0 && sgn(determinant(a)) == 0)
    fail(ErrorCode::NotFiniteIndex, std::string(what) + ": matrix is singular");
}

// Reduces a matrix on the quotient coordinates: row i mod d_i.
IntMatrix reduce_rows(IntMatrix b, const IntVector& d) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = mod_positive(b(i, j), d[i]);
  return b;
}

std::string describe(const FiniteAbelianGroup& a) {
  return a.to_string() + " (order " + a.order().get_str() + ")";
}

}  // namespace

BigInt existence_m(const BigInt& n, const BigInt& d) {
  if (n < 1 || d < 1) fail(ErrorCode::InvalidArgument, "n and d must be positive");
  return n * d;
}

bool is_valid_quotient_action(const FiniteAbelianWithAction& a) {
  const IntVector& d = a.structure.invariant_factors();
  const std::size_t k = d.size();
  const FiniteGroup& g = *a.acting_group;
  if (a.action.size() != g.order()) return false;
  for (const auto& b : a.action) {
    if (b.rows() != k || b.cols() != k) return false;
    // Column j must send the order-d_j generator to an element killed by d_j.
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (sgn(mod_positive(b(i, j) * d[j], d[i])) != 0) return false;
  }
  if (reduce_rows(a.action[0], d) != reduce_rows(IntMatrix::identity(k), d)) return false;
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId s : g.generators())
      if (reduce_rows(a.action[x] * a.action[s], d) != reduce_rows(a.action[g.mul(x, s)], d))
        return false;
  return true;
}

OnoTorusData ono_f_torus(const GammaLattice& t_hat, const EmbeddingSearchOptions& opts) {
  OnoResult ono = ono_construct(t_hat, opts);
  OnoTorusData out{ono, ono.embedding.target, ono.M1, ono.embedding};
  return out;
}

FiniteAbelianWithAction isogeny_kernel(const LatticeEmbedding& iso, const BigInt& m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be positive");
  require_finite_index(iso.matrix, "isogeny_kernel");
  const IntMatrix scaled = m * iso.matrix;
  const std::size_t n = scaled.rows();
  FiniteAbelianWithAction out;
  out.acting_group = iso.target.group();
  if (n == 0) {
    out.action.assign(out.acting_group->order(), IntMatrix(0, 0));
    return out;
  }
  SnfDecomposition snf = smith_normal_form(scaled);
  std::vector<std::size_t> keep;
  IntVector divisors;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt di = abs(snf.D(i, i));
    if (di > 1) {
      keep.push_back(i);
      divisors.push_back(di);
    }
  }
  out.structure = FiniteAbelianGroup(divisors);
  const IntMatrix u_inv = scaled_inverse(snf.U, 1);
  for (ElementId g = 0; g < out.acting_group->order(); ++g) {
    const IntMatrix t = snf.U * iso.target.action(g) * u_inv;
    IntMatrix b(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) b(i, j) = t(keep[i], keep[j]);
    out.action.push_back(reduce_rows(std::move(b), divisors));
  }
  return out;
}

LatticeEmbedding reverse_isogeny(const LatticeEmbedding& iso) {
  require_finite_index(iso.matrix, "reverse_isogeny");
  const BigInt e = iso.cokernel.exponent();
  return make_embedding(iso.target, iso.source, scaled_inverse(iso.matrix, e));
}

ReductionReport reduce_stabilizer(const ReductionInput& in, const EmbeddingSearchOptions& opts) {
  const GroupPtr& f_gamma = in.sp.group;
  const GroupPtr& hf = in.sp.action.target();
  const GroupPtr& gamma = in.sp.action.actor();
  if (in.T_hat.group() != f_gamma && !in.T_hat.group()->same_table(*f_gamma))
    fail(ErrorCode::GroupMismatch, "T_hat must be a lattice over the semidirect product");
  if (in.Gtor_hat.group() != gamma && !in.Gtor_hat.group()->same_table(*gamma))
    fail(ErrorCode::GroupMismatch, "Gtor_hat must be a lattice over Gamma");

  ReductionReport rep;
  rep.n = static_cast<unsigned long>(hf->order());
  rep.d = in.d ? *in.d : BigInt(static_cast<unsigned long>(gamma->order()));
  if (rep.d < 1) fail(ErrorCode::InvalidArgument, "d must be positive");

  rep.torus = ono_f_torus(in.T_hat, opts);
  rep.m = existence_m(rep.n, rep.d);
  rep.A = isogeny_kernel(rep.torus.iso, rep.m);

  rep.ono_prime = ono_construct(in.Gtor_hat, opts);
  rep.reversed = reverse_isogeny(rep.ono_prime.embedding);
  rep.A_prime = isogeny_kernel(rep.reversed, 1);
  rep.kernel_order_of_F = rep.A.structure.order() * rep.A_prime.structure.order();

  const auto& t = rep.torus;
  rep.narrative.push_back(
      "step 0: make the semisimple part of the ambient group simply connected; H^f is unchanged "
      "(geometric, out of computational scope)");
  rep.narrative.push_back(
      "step 1: pass to ambient SL_n x G^tor with stabilizer the toric-by-finite quotient "
      "(geometric, out of computational scope)");
  rep.narrative.push_back(
      "step 2: Ono construction for T over F_Gamma of order " + std::to_string(f_gamma->order()) +
      ": r = " + std::to_string(t.ono.r) + ", rank M0 = " + std::to_string(t.ono.M0.rank()) +
      ", rank M1 = " + std::to_string(t.ono.M1.rank()) + "; S = T^r x P has character rank " +
      std::to_string(t.S_hat.rank()) + ", isogeny S -> Q has kernel of order " +
      t.iso.index().get_str() + " (embedding found by " + std::string(to_string(t.ono.method)) +
      " search)");
  rep.narrative.push_back(
      "step 3: m = n*d = " + rep.n.get_str() + "*" + rep.d.get_str() + " = " + rep.m.get_str() +
      "; A = kernel of S -m-> S -> Q, as dual of coker: " + describe(rep.A.structure) +
      " with H^f acting; assumes the finite subgroup from the existence result meets S in S[m] "
      "and generates F together with A");
  rep.narrative.push_back(
      "step 4: Ono construction for G^tor over Gamma: r' = " + std::to_string(rep.ono_prime.r) +
      ", isogeny reversed with exponent " + rep.ono_prime.embedding.cokernel.exponent().get_str() +
      " (the power of G^tor is r', not m); A' as dual of coker: " +
      describe(rep.A_prime.structure) + "; |F| / |H^f| = |A|*|A'| = " +
      rep.kernel_order_of_F.get_str() +
      "; F fits in 1 -> A-data -> F -> H^f -> 1, extension class not computed");
  return rep;
}

}  // namespace glat
