#pragma once

#include <string>
#include <vector>

#include "invdmod/intmat.hpp"

namespace invdmod {

/// Simple Lie type, Bourbaki node numbering.
/// Valid ranks: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
/// D_3 is accepted as written (it is isomorphic to A_3 but is not renamed).
struct CartanType {
  char series;  // 'A'..'G'
  int rank;

  std::string str() const { return std::string(1, series) + std::to_string(rank); }
  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.series == b.series && a.rank == b.rank;
  }
};

/// Raises InvalidRank unless (series, rank) is a valid simple type.
void validate_type(const CartanType& t);

/// Parse a token like "A1", "E8", "D4".
CartanType parse_cartan_type_token(const std::string& token);

/// Cartan matrix in Bourbaki numbering; entry (i,j) = 2(a_i, a_j)/(a_j, a_j)
/// for simple roots a_1..a_r. Diagonal 2, off-diagonal in {0,-1,-2,-3},
/// (i,j) = 0 iff (j,i) = 0, determinant > 0.
IntMat cartan_matrix(const CartanType& t);

/// Finite abelian group in invariant factor form d_1 | d_2 | ... | d_k,
/// all d_i >= 2. Elements are residue tuples, one coordinate per factor.
class FiniteAbelianGroup {
public:
  using Element = std::vector<long long>;

  FiniteAbelianGroup() = default;  // trivial group
  explicit FiniteAbelianGroup(std::vector<long long> invariant_factors);

  const std::vector<long long>& invariant_factors() const { return factors_; }
  int num_factors() const { return (int)factors_.size(); }
  long long order() const;
  bool is_trivial() const { return factors_.empty(); }

  Element reduce(Element e) const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element zero() const { return Element(factors_.size(), 0); }
  bool is_zero(const Element& e) const;
  /// Additive order of an element.
  long long element_order(const Element& e) const;

  /// All elements in lexicographic order. Guarded against groups with more
  /// than `cap` elements (ResourceLimit).
  std::vector<Element> elements(long long cap = 1000000) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return !(a == b);
  }

private:
  std::vector<long long> factors_;
};

/// Canonical invariant-factor chain of a direct sum of cyclic groups of the
/// given orders (orders of 1 are dropped).
std::vector<long long> canonical_invariant_factors(const std::vector<long long>& cyclic_orders);

/// Generating set for a subgroup, written in the coordinates of an ambient
/// group's invariant factors. An empty list generates the trivial subgroup.
struct SubgroupSpec {
  std::vector<FiniteAbelianGroup::Element> generators;
};

/// Subgroup of an ambient finite abelian group: canonical isomorphism type
/// plus the embedding (reduced generators in ambient coordinates).
struct Subgroup {
  FiniteAbelianGroup group;
  FiniteAbelianGroup ambient;
  std::vector<FiniteAbelianGroup::Element> generators;
};

/// Structure of the subgroup generated by spec inside ambient, computed from
/// a Smith decomposition of the generator/relation lattice.
Subgroup subgroup(const FiniteAbelianGroup& ambient, const SubgroupSpec& spec);

/// Center of the simply connected group with the given simple factors:
/// cokernel of the direct sum of Cartan matrices, in invariant factor form.
FiniteAbelianGroup center_of_sc(const std::vector<CartanType>& factors);

/// Semisimple group G = G_sc / gamma, described by its simple factors and a
/// subgroup gamma of the center of G_sc (gamma given in the coordinates of
/// center_of_sc(factors)).
class SemisimpleGroup {
public:
  SemisimpleGroup(std::vector<CartanType> factors, const SubgroupSpec& gamma_spec);

  const std::vector<CartanType>& factors() const { return factors_; }
  const FiniteAbelianGroup& center() const { return gamma_.ambient; }
  /// The fundamental-group datum gamma as an abstract group.
  const FiniteAbelianGroup& gamma() const { return gamma_.group; }
  const Subgroup& gamma_subgroup() const { return gamma_; }
  int rank() const;

private:
  std::vector<CartanType> factors_;
  Subgroup gamma_;
};

}  // namespace invdmod
