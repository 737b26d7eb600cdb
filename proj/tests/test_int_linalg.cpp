#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glat/error.hpp"
#include "glat/normal_form.hpp"
#include "oracles.hpp"

using namespace glat;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

void check_snf(const IntMatrix& a) {
  const SnfDecomposition s = smith_normal_form(a);
  REQUIRE(s.U * a * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t k = 0; k + 1 < s.elementary_divisors.size(); ++k)
    CHECK(s.elementary_divisors[k + 1] % s.elementary_divisors[k] == 0);
  for (const auto& d : s.elementary_divisors) CHECK(d > 0);
  CHECK(s.elementary_divisors == oracle::elementary_divisors_by_minors(a));
}

}  // namespace

TEST_CASE("hermite normal form examples") {
  auto h = hermite_normal_form(IntMatrix::identity(3));
  CHECK(h.H == IntMatrix::identity(3));
  CHECK(h.U == IntMatrix::identity(3));

  IntMatrix d{{2, 0}, {0, 3}};
  h = hermite_normal_form(d);
  CHECK(h.H == d);
  CHECK(h.U == IntMatrix::identity(2));

  IntMatrix swap{{0, 1}, {1, 0}};
  h = hermite_normal_form(swap);
  CHECK(h.H == IntMatrix::identity(2));
  CHECK(h.U * swap == h.H);
}

TEST_CASE("hermite normal form shape on random input") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = oracle::random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5, -9, 9);
    const auto h = hermite_normal_form(a);
    REQUIRE(h.U * a == h.H);
    CHECK(abs(determinant(h.U)) == 1);
    CHECK(h.rank() == rank(a));
    for (std::size_t r = 0; r < h.rank(); ++r) {
      const std::size_t p = h.pivot_cols[r];
      CHECK(h.H(r, p) > 0);
      if (r > 0) CHECK(p > h.pivot_cols[r - 1]);
      for (std::size_t j = 0; j < p; ++j) CHECK(h.H(r, j) == 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(h.H(above, p) >= 0);
        CHECK(h.H(above, p) < h.H(r, p));
      }
    }
    for (std::size_t r = h.rank(); r < h.H.rows(); ++r)
      for (std::size_t j = 0; j < h.H.cols(); ++j) CHECK(h.H(r, j) == 0);
  }
}

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).elementary_divisors == iv({1, 6}));
  CHECK(smith_normal_form(IntMatrix{{2, -2}, {2, 2}}).elementary_divisors == iv({2, 4}));
  check_snf(IntMatrix{{2, -2}, {2, 2}});
  check_snf(IntMatrix(0, 3));
  check_snf(IntMatrix(2, 2));
}

TEST_CASE("smith normal form on random matrices agrees with determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<int> dim(1, 6);
    check_snf(oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9));
  }
}

TEST_CASE("cokernel structure examples") {
  auto c = cokernel_structure(IntMatrix{{2}});
  CHECK(c.torsion.invariant_factors() == iv({2}));
  CHECK(c.free_rank == 0);
  c = cokernel_structure(IntMatrix{{1, 1}, {-1, 1}});
  CHECK(c.torsion.invariant_factors() == iv({2}));
  CHECK(oracle::coset_bfs(IntMatrix{{1, 1}, {-1, 1}}).elements.size() == 2);
  c = cokernel_structure(IntMatrix{{1}, {0}});
  CHECK(c.torsion.is_trivial());
  CHECK(c.free_rank == 1);
}

TEST_CASE("cokernel order matches coset enumeration") {
  std::mt19937_64 rng(13);
  int compared = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 4;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -5, 5);
    const auto c = cokernel_structure(a);
    const BigInt det = oracle::leibniz_det(a);
    if (det == 0) {
      CHECK(c.free_rank > 0);
      continue;
    }
    CHECK(c.free_rank == 0);
    CHECK(c.torsion.order() == abs(det));
    const auto e = oracle::coset_bfs(a);
    if (!e.complete) continue;
    ++compared;
    CHECK(BigInt(static_cast<unsigned long>(e.elements.size())) == c.torsion.order());
    for (long k = 1; k <= 12; ++k)
      CHECK(BigInt(static_cast<unsigned long>(oracle::killed_by(e, k))) ==
            oracle::killed_by(c.torsion.invariant_factors(), k));
  }
  CHECK(compared > 100);
}

TEST_CASE("cokernel of block diagonal is the product") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = oracle::random_matrix(rng, 2, 2, -6, 6);
    const IntMatrix b = oracle::random_matrix(rng, 3, 3, -6, 6);
    const auto ca = cokernel_structure(a), cb = cokernel_structure(b);
    const auto cab = cokernel_structure(block_diagonal(a, b));
    CHECK(cab.free_rank == ca.free_rank + cb.free_rank);
    CHECK(cab.torsion.order() == ca.torsion.order() * cb.torsion.order());
  }
}

TEST_CASE("finite abelian group validation") {
  CHECK(FiniteAbelianGroup(iv({2, 4})).order() == 8);
  CHECK(FiniteAbelianGroup(iv({2, 4})).to_string() == "Z/2 x Z/4");
  CHECK(FiniteAbelianGroup().order() == 1);
  CHECK(FiniteAbelianGroup().to_string() == "1");
  CHECK_THROWS_AS(FiniteAbelianGroup(iv({4, 2})), Error);
  CHECK_THROWS_AS(FiniteAbelianGroup(iv({1, 2})), Error);
}

TEST_CASE("solve_integer_linear examples") {
  auto x = solve_integer_linear(IntMatrix::identity(3), iv({4, -1, 7}));
  REQUIRE(x);
  CHECK(*x == iv({4, -1, 7}));
  CHECK_FALSE(solve_integer_linear(IntMatrix{{2}}, iv({3})));
  x = solve_integer_linear(IntMatrix{{2, 1}}, iv({1}));
  REQUIRE(x);
  CHECK(*x == iv({0, 1}));
}

TEST_CASE("solve_integer_linear returns valid solutions") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = oracle::random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 4, -5, 5);
    const IntVector y = oracle::random_matrix(rng, a.cols(), 1, -3, 3).column(0);
    const IntVector b = a * y;
    auto x = solve_integer_linear(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
  }
}

TEST_CASE("minimal multiplier examples") {
  auto mm = minimal_multiplier(iv({1, -1}), {iv({2, 0}), iv({1, 1})});
  CHECK(mm.r == 1);
  CHECK(mm.coeffs == iv({1, -1}));
  mm = minimal_multiplier(iv({1, 0}), {iv({2, 0})});
  CHECK(mm.r == 2);
  mm = minimal_multiplier(iv({0, 0, 0}), {iv({1, 2, 3}), iv({0, 1, 1})});
  CHECK(mm.r == 1);
  CHECK(mm.coeffs == iv({0, 0}));
  CHECK_THROWS_AS(minimal_multiplier(iv({0, 1}), {iv({1, 0})}), Error);
}

TEST_CASE("minimal multiplier is minimal") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + t % 3;
    const IntMatrix b = oracle::random_matrix(rng, 4, k, -4, 4);
    if (rank(b) < k) continue;
    const IntVector c = oracle::random_matrix(rng, k, 1, -3, 3).column(0);
    IntVector v = b * c;
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto& x : v) x /= g;  // typically leaves the integer span
    std::vector<IntVector> basis;
    for (std::size_t j = 0; j < k; ++j) basis.push_back(b.column(j));
    const auto mm = minimal_multiplier(v, basis);
    IntVector rv = v;
    for (auto& x : rv) x *= mm.r;
    CHECK(b * mm.coeffs == rv);
    for (BigInt r = 1; r < mm.r; ++r) {
      IntVector w = v;
      for (auto& x : w) x *= r;
      CHECK_FALSE(solve_integer_linear(b, w));
    }
  }
}

TEST_CASE("kernel basis is saturated") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = oracle::random_matrix(rng, 1 + t % 3, 2 + t % 4, -4, 4);
    const IntMatrix k = kernel_basis(a);
    CHECK(k.rows() == a.cols() - rank(a));
    if (k.rows() == 0) continue;
    CHECK((a * k.transpose()).is_zero());
    // A saturated sublattice has torsion-free quotient.
    const auto c = cokernel_structure(k.transpose());
    CHECK(c.torsion.is_trivial());
  }
}

TEST_CASE("scaled inverse") {
  const IntMatrix a{{1, -1}, {1, 1}};
  CHECK(scaled_inverse(a, 2) == IntMatrix({{1, 1}, {-1, 1}}));
  CHECK_THROWS_AS(scaled_inverse(a, 1), Error);
  CHECK_THROWS_AS(scaled_inverse(IntMatrix{{1, 2}, {2, 4}}, 1), Error);
}

TEST_CASE("determinant agrees with Leibniz expansion") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = oracle::random_matrix(rng, t % 6, t % 6, -9, 9);
    CHECK(determinant(a) == oracle::leibniz_det(a));
    CHECK(oracle::bareiss_det(a) == oracle::leibniz_det(a));
  }
}
