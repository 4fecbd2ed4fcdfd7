#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invdmod/config.hpp"
#include "invdmod/rational.hpp"

namespace invdmod {

/// Monomial in a fixed number of variables: exponent vector plus total
/// degree, ordered graded-lexicographically.
struct Monomial {
  std::vector<std::uint8_t> e;
  int deg = 0;

  static Monomial one(int nvars) { return Monomial{std::vector<std::uint8_t>(nvars, 0), 0}; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  }
};

/// Sparse multivariate polynomial over the rationals. Total degree is capped
/// by max_symbolic_degree().
class Poly {
public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int v);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly operator*(const Rational& s) const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Partial derivative with respect to variable v.
  Poly derivative(int v) const;

  std::string str(const std::vector<std::string>& names) const;

private:
  void insert(const Monomial& m, const Rational& c);
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

/// Symbolic context for differential forms on GL_r: variables x_ij (row
/// major), the symbolic determinant, and its partial derivatives.
class MatrixFormContext {
public:
  explicit MatrixFormContext(int r);

  int r() const { return r_; }
  int nvars() const { return r_ * r_; }
  int var(int i, int j) const { return i * r_ + j; }
  const Poly& x(int i, int j) const { return vars_[var(i, j)]; }
  const Poly& det() const { return det_; }
  const Poly& ddet(int v) const { return ddet_[v]; }
  /// Adjugate entry (i, j), a polynomial.
  const Poly& adj(int i, int j) const { return adj_[var(i, j)]; }
  std::string var_name(int v) const;

private:
  int r_;
  std::vector<Poly> vars_;
  Poly det_;
  std::vector<Poly> ddet_;
  std::vector<Poly> adj_;
};

/// Element of Q[x_ij][1/det]: numerator polynomial over an explicit power of
/// the determinant. Kept fraction-free; no cancellation is attempted, which
/// is sound because det is not a zero divisor.
struct DetFrac {
  Poly num;
  int detpow = 0;

  bool is_zero() const { return num.is_zero(); }
};

DetFrac df_add(const MatrixFormContext& ctx, const DetFrac& a, const DetFrac& b);
DetFrac df_sub(const MatrixFormContext& ctx, const DetFrac& a, const DetFrac& b);
DetFrac df_mul(const DetFrac& a, const DetFrac& b);
DetFrac df_neg(const DetFrac& a);
bool df_equal(const MatrixFormContext& ctx, const DetFrac& a, const DetFrac& b);

/// Degree-1 form: sum over basis covectors dx_v of DetFrac coefficients.
using OneForm = std::map<int, DetFrac>;
/// Degree-2 form: coefficients on dx_a ^ dx_b with a < b.
using TwoForm = std::map<std::pair<int, int>, DetFrac>;

OneForm one_add(const MatrixFormContext& ctx, const OneForm& a, const OneForm& b);
TwoForm two_add(const MatrixFormContext& ctx, const TwoForm& a, const TwoForm& b);
bool one_is_zero(const OneForm& f);
bool two_is_zero(const TwoForm& f);

/// Exterior derivative of a function (degree 0 -> 1).
OneForm d0(const MatrixFormContext& ctx, const DetFrac& f);
/// Exterior derivative of a 1-form (degree 1 -> 2).
TwoForm d1(const MatrixFormContext& ctx, const OneForm& f);
/// Wedge of two 1-forms.
TwoForm wedge11(const MatrixFormContext& ctx, const OneForm& a, const OneForm& b);

}  // namespace invdmod
