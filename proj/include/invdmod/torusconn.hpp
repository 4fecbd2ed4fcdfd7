#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invdmod/laurent.hpp"
#include "invdmod/ratmat.hpp"

namespace invdmod {

/// Left-invariant connection on the trivial rank-n bundle over an l-torus:
/// d + sum_i A_i dt_i/t_i with constant rational matrices A_i.
/// Flatness (pairwise commuting A_i) is checked by check_flat, and again by
/// the classification routines before they rely on it.
struct ConstantTorusConnection {
  int l = 0;
  int n = 0;
  std::vector<RatMat> matrices;

  ConstantTorusConnection() = default;
  ConstantTorusConnection(int l_, int n_, std::vector<RatMat> ms);
};

/// Flatness report: ok, or the first non-commuting index pair.
struct FlatnessReport {
  bool ok = true;
  int i = -1, j = -1;
};
FlatnessReport check_flat(const ConstantTorusConnection& c);

/// Decidable-case invariant of the monodromy: conjugacy data of the
/// commuting tuple exp(2*pi*i*A_1), ..., exp(2*pi*i*A_l).
///
/// l == 1: eigenvalue representatives in [0,1) mod 1, each with a descending
/// Jordan block-size multiset (blocks pooled across eigenvalues congruent
/// mod 1). Otherwise (l == 0 or l > 1, semisimple tuples only): multiset of
/// joint eigenvalue tuples in [0,1)^l with multiplicities.
class MonodromyClass {
public:
  static MonodromyClass jordan(int n, std::map<Rational, std::vector<int>> blocks);
  static MonodromyClass semisimple(int l, int n, std::map<std::vector<Rational>, long long> eigs);
  /// The unique class of rank n over the 0-dimensional torus.
  static MonodromyClass rank_only(long long n);

  int l() const { return l_; }
  long long n() const { return n_; }
  bool is_jordan_form() const { return l_ == 1; }
  const std::map<Rational, std::vector<int>>& blocks() const { return blocks_; }
  const std::map<std::vector<Rational>, long long>& joint_eigenvalues() const { return eigs_; }

  /// True when every block has size 1 (always true for the semisimple form).
  bool is_semisimple() const;

  friend bool operator==(const MonodromyClass& a, const MonodromyClass& b) {
    return a.l_ == b.l_ && a.n_ == b.n_ && a.blocks_ == b.blocks_ && a.eigs_ == b.eigs_;
  }
  friend bool operator!=(const MonodromyClass& a, const MonodromyClass& b) { return !(a == b); }
  friend bool operator<(const MonodromyClass& a, const MonodromyClass& b);

private:
  int l_ = 0;
  long long n_ = 0;
  std::map<Rational, std::vector<int>> blocks_;          // l == 1
  std::map<std::vector<Rational>, long long> eigs_;      // l != 1
};

/// Classifying invariant of c.
/// Raises IrrationalSpectrum when a characteristic polynomial does not split
/// over the rationals, NonSemisimpleTuple when l > 1 and the tuple is not
/// simultaneously diagonalizable, NotFlat on non-commuting input.
MonodromyClass monodromy_class(const ConstantTorusConnection& c);

enum class Equivalence { True, False, Undecided };

/// Algebraic gauge equivalence of two flat connections, decided through
/// monodromy invariants. Undecided exactly in the wild case: l > 1 with a
/// non-semisimple tuple on either side.
Equivalence equivalent(const ConstantTorusConnection& a, const ConstantTorusConnection& b);

/// Gauge check report for l = 1: verifies t X' = X A_alpha - A_beta X.
/// In terms of transport, apply_gauge(x, beta) landing on alpha satisfies
/// exactly this equation.
struct GaugeReport {
  bool ok = true;
  int i = -1, j = -1;       // first failing entry
  std::string residual;     // its nonzero value
};
GaugeReport verify_gauge(const LaurentMatrix& x, const ConstantTorusConnection& alpha,
                         const ConstantTorusConnection& beta);

/// Result of transporting alpha by the gauge x on the 1-torus:
/// coefficient of dt/t for x^{-1} d x + x^{-1} alpha x.
struct GaugeResult {
  LaurentMatrix coefficient;
  bool constant = false;
  /// Set when the transported connection is again constant.
  std::optional<ConstantTorusConnection> connection;
};

/// Raises NonUnitDeterminant unless det x is a unit (c t^k), DimensionMismatch
/// on shape conflicts. Defined for l = 1.
GaugeResult apply_gauge(const LaurentMatrix& x, const ConstantTorusConnection& alpha);

}  // namespace invdmod
