#pragma once

#include <vector>

#include "invdmod/torusconn.hpp"

namespace invdmod {

/// Invariant connection datum on GL_r of rank n, in the normal form produced
/// by the classification: a semisimple-part weight vector k (one integer per
/// basis vector, characters of the r-th roots of unity lifted to integers)
/// together with the abelian-part coefficient A = rho(identity).
/// A must commute with diag(k) for the datum to be consistent.
struct GlrConnectionSpec {
  int r = 1;
  int n = 1;
  RatMat a;
  std::vector<long long> k;

  GlrConnectionSpec() = default;
  GlrConnectionSpec(int r_, int n_, RatMat a_, std::vector<long long> k_);
};

/// The scalar coefficient A/r of the rank-n connection pulled back along the
/// determinant, defined when the semisimple part is trivial (all k zero);
/// raises NonCommutingData... see reduce_to_gm for the general case.
/// Raises InvalidArgument when some k is nonzero.
RatMat scalar_form(const GlrConnectionSpec& s);

/// The 1-torus connection with coefficient (A + diag(k)) / r that represents
/// the class of s under the determinant bijection.
/// Raises NonCommutingData when A does not commute with diag(k).
ConstantTorusConnection reduce_to_gm(const GlrConnectionSpec& s);

/// Equivalence of invariant connections on GL_r, decided through the
/// determinant reduction. Always true/false (the reduced coefficients are
/// single matrices, so no wild case arises at this interface).
bool glr_equivalent(const GlrConnectionSpec& a, const GlrConnectionSpec& b);

/// Rank-n classes on GL_r restricted to a fixed finite set of eigenvalue
/// labels in [0,1): every class is a MonodromyClass on the 1-torus, i.e. an
/// assignment of a Jordan block multiset to each label, total size n.
std::vector<MonodromyClass> classify_glr_statement(int n, const std::vector<Rational>& labels);

}  // namespace invdmod
