#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glat/int_matrix.hpp"

namespace glat {

/// Row-style Hermite normal form: U * A = H with U unimodular, H in row
/// echelon form, positive pivots and entries above each pivot reduced into
/// [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of H

  std::size_t rank() const { return pivot_cols.size(); }
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// U * A * V = D, D diagonal with d1 | d2 | ... and trailing zeros.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntVector elementary_divisors;  // nonzero diagonal entries of D
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Finite abelian group given by its invariant factors (each >= 2, each
/// dividing the next).
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(IntVector invariant_factors);

  const IntVector& invariant_factors() const { return factors_; }
  BigInt order() const;
  /// Largest invariant factor, 1 for the trivial group.
  BigInt exponent() const;
  bool is_trivial() const { return factors_.empty(); }
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  IntVector factors_;
};

struct CokernelInfo {
  FiniteAbelianGroup torsion;
  std::size_t free_rank = 0;
};

/// Structure of Z^rows / (column span of A).
CokernelInfo cokernel_structure(const IntMatrix& a);

/// Z-basis of the integer kernel {x : A x = 0}, one basis vector per row,
/// canonicalised to Hermite normal form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Canonical integer solution of A x = b, or nullopt.
std::optional<IntVector> solve_integer_linear(const IntMatrix& a, const IntVector& b);

struct MinimalMultiplier {
  BigInt r;
  IntVector coeffs;  // r * v = sum_j coeffs[j] * basis[j]
};

/// Smallest r >= 1 with r * v in the integer span of `basis`.
/// Throws NotInRationalSpan when v is not even a rational combination.
MinimalMultiplier minimal_multiplier(const IntVector& v, const std::vector<IntVector>& basis);

/// Exact inverse scaled by `scale`: returns scale * A^{-1}; throws
/// InvalidArgument if the result is not integral.
IntMatrix scaled_inverse(const IntMatrix& a, const BigInt& scale);

}  // namespace glat
