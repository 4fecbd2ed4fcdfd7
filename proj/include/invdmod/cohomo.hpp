#pragma once

#include <vector>

#include "invdmod/finab.hpp"

namespace invdmod {

/// Invariant degrees d_1 <= ... <= d_r of the Weyl group of a simple type.
/// The product of the degrees is the Weyl group order (validated).
/// Supported for rank <= 8; larger ranks raise InvalidRank.
struct WeylDegrees {
  CartanType type;
  std::vector<int> degrees;
};

WeylDegrees weyl_degrees(const CartanType& t);

/// Weyl group order of a simple type (rank <= 8).
long long weyl_order(const CartanType& t);

/// Poincare polynomial of de Rham cohomology: the graded ranks are those of
/// an exterior algebra on rank(G) generators of degrees 2 d_j - 1.
/// Coefficients are palindromic and sum to 2^rank.
struct PoincarePolynomial {
  std::vector<long long> coeffs;  // index = cohomological degree

  long long at(int i) const {
    return (i >= 0 && i < (int)coeffs.size()) ? coeffs[i] : 0;
  }
  int top_degree() const { return (int)coeffs.size() - 1; }
  long long value_at_one() const;
  bool is_palindromic() const;
};

/// Depends only on the simple factors, not on gamma (isogeny invariance).
PoincarePolynomial poincare(const SemisimpleGroup& g);
PoincarePolynomial poincare(const std::vector<CartanType>& factors);

/// Dimension of the degree-i de Rham cohomology of the connection whose
/// class is v: (rank of H^i of the simply connected cover) * dim v^gamma.
/// GroupMismatch unless v is a class over gamma(g).
long long dmod_betti(const SemisimpleGroup& g, const RepClass& v, int i);

/// Same value through the topological description of the associated local
/// system (the finite monodromy acts trivially on the cover's cohomology).
long long local_system_betti(const SemisimpleGroup& g, const RepClass& v, int i);

/// The monodromy of the local system attached to v factors through gamma;
/// this reports gamma, the acting character multiset, and the order of the
/// monodromy image (lcm of the character orders).
struct MonodromyFactorization {
  FiniteAbelianGroup gamma;
  RepClass rep;
  long long image_order = 1;
};
MonodromyFactorization monodromy_factors_through(const SemisimpleGroup& g, const RepClass& v);

}  // namespace invdmod
