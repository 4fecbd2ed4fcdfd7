#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invdmod/ratmat.hpp"
#include "invdmod/symbolic.hpp"

namespace invdmod {

/// Finite-dimensional Lie algebra given by structure constants:
/// [x_i, x_j] = sum_k c(i,j,k) x_k. Antisymmetry and the Jacobi identity are
/// validated on construction (InvalidArgument on failure).
class LieAlgebraPresentation {
public:
  LieAlgebraPresentation(int dim, std::vector<Rational> c,
                         std::vector<std::string> basis_names = {});

  int dim() const { return dim_; }
  const Rational& c(int i, int j, int k) const {
    return c_[((std::size_t)i * dim_ + j) * dim_ + k];
  }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::string basis_name(int i) const;

private:
  int dim_;
  std::vector<Rational> c_;
  std::vector<std::string> names_;
};

/// Candidate representation: one n x n matrix per basis element.
struct LinearRep {
  int n = 0;
  std::vector<RatMat> matrices;

  LinearRep() = default;
  LinearRep(int n_, std::vector<RatMat> ms);
};

/// Bracket-compatibility check rho([x_i,x_j]) == [rho(x_i), rho(x_j)].
/// On failure reports the first violated basis pair (scan order i < j).
struct LieHomReport {
  bool ok = true;
  int i = -1, j = -1;
  std::string detail;
};
LieHomReport is_lie_hom(const LieAlgebraPresentation& alg, const LinearRep& rep);

/// Adjoint representation read off the structure constants.
LinearRep adjoint_rep(const LieAlgebraPresentation& alg);

/// Built-in presentations, by token:
///   "gl_r" (r <= 4): basis E_ij, row major;
///   "sl_r" (r <= 4): basis E_ij (i != j, row major) then H_i = E_ii - E_{i+1,i+1};
///   "abelian_l" (l <= 8): zero bracket.
/// Sizes beyond the caps raise UnsupportedSize; unknown tokens MalformedInput.
struct BuiltinAlgebra {
  LieAlgebraPresentation presentation;
  /// Defining matrices of the basis (empty for abelian).
  std::vector<RatMat> basis_matrices;
};
BuiltinAlgebra builtin_algebra(const std::string& token);

/// Report of a symbolic differential identity check.
struct SymbolicCheckReport {
  bool ok = true;
  int i = -1, j = -1;    // first failing matrix entry, when applicable
  std::string detail;
};

/// Verifies d theta + theta ^ theta = 0 for theta = g^{-1} dg on the generic
/// invertible r x r matrix, exactly, entry by entry. r in {1, 2, 3};
/// larger sizes raise UnsupportedSize.
SymbolicCheckReport maurer_cartan_check(int r);

/// Verifies d(det)/det = trace(theta) on the generic invertible r x r
/// matrix, exactly. r in {1, 2, 3}; larger sizes raise UnsupportedSize.
SymbolicCheckReport trace_dlogdet_check(int r);

}  // namespace invdmod
