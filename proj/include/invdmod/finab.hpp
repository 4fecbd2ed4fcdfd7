#pragma once

#include <vector>

#include "invdmod/rootdata.hpp"

namespace invdmod {

/// Character of a finite abelian group, stored as one residue a_i modulo d_i
/// per invariant factor: x -> exp(2*pi*i * sum a_i x_i / d_i).
struct Character {
  std::vector<long long> residues;

  friend bool operator==(const Character& a, const Character& b) {
    return a.residues == b.residues;
  }
  friend bool operator<(const Character& a, const Character& b) {
    return a.residues < b.residues;
  }
};

/// All characters of g in lexicographic residue order. The trivial group has
/// exactly one character (the empty tuple).
std::vector<Character> characters(const FiniteAbelianGroup& g);

bool is_trivial_character(const Character& c);

/// Multiplicative order of a character.
long long character_order(const FiniteAbelianGroup& g, const Character& c);

/// Pointwise product and inverse in the dual group.
Character character_product(const FiniteAbelianGroup& g, const Character& a, const Character& b);
Character character_inverse(const FiniteAbelianGroup& g, const Character& a);

/// Isomorphism class of a finite-rank representation of a finite abelian
/// group: a multiset of characters. Entries are kept sorted with positive
/// multiplicities; rank is the multiplicity total.
class RepClass {
public:
  struct Entry {
    Character character;
    long long mult;
  };

  RepClass() = default;
  RepClass(FiniteAbelianGroup group, std::vector<Entry> entries);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Entry>& entries() const { return entries_; }
  long long rank() const;

  friend bool operator==(const RepClass& a, const RepClass& b);
  friend bool operator!=(const RepClass& a, const RepClass& b) { return !(a == b); }

private:
  FiniteAbelianGroup group_;
  std::vector<Entry> entries_;
};

/// The trivial n-dimensional class over g.
RepClass trivial_rep(const FiniteAbelianGroup& g, long long n);

/// All rank-n classes over gamma, i.e. all size-n character multisets, in
/// lexicographic order. Their number is C(|gamma| + n - 1, n); enumeration is
/// refused above `cap` classes (ResourceLimit).
std::vector<RepClass> classify_semisimple(const SemisimpleGroup& g, int n,
                                          long long cap = 1000000);
std::vector<RepClass> classify_semisimple(const FiniteAbelianGroup& gamma, int n,
                                          long long cap = 1000000);

/// Number of rank-n classes without enumerating them.
long long count_classes(const FiniteAbelianGroup& gamma, int n);

/// Multiplicity of the trivial character (dimension of the invariant part).
long long invariants_dim(const RepClass& v);

/// Tensor product, dual, and hom dimension of classes over the same group.
/// Mixed groups raise GroupMismatch.
RepClass tensor(const RepClass& a, const RepClass& b);
RepClass dual(const RepClass& v);
long long hom_dim(const RepClass& a, const RepClass& b);

}  // namespace invdmod
