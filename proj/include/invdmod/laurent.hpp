#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invdmod/config.hpp"
#include "invdmod/ratmat.hpp"

namespace invdmod {

/// Laurent polynomial in one variable t with rational coefficients.
/// Exponents are capped by max_symbolic_degree() in absolute value.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { if (!c.is_zero()) terms_[0] = c; }
  LaurentPoly(long long c) : LaurentPoly(Rational(c)) {}

  /// c * t^e.
  static LaurentPoly term(const Rational& c, long long e);

  const std::map<long long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  /// Exactly one term (a unit of the Laurent ring).
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_coeff() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// The Euler operator t d/dt: sends c t^e to e c t^e.
  LaurentPoly euler_derivative() const;

  std::string str() const;

private:
  void insert(long long e, const Rational& c);
  static void check_exponent(long long e);
  std::map<long long, Rational> terms_;
};

/// Square matrix of Laurent polynomials (a gauge transformation candidate).
class LaurentMatrix {
public:
  LaurentMatrix() : n_(0) {}
  explicit LaurentMatrix(int n) : n_(n), a_((std::size_t)n * n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  }

  static LaurentMatrix identity(int n);
  static LaurentMatrix from_constant(const RatMat& m);

  int n() const { return n_; }
  LaurentPoly& at(int i, int j) { return a_[(std::size_t)i * n_ + j]; }
  const LaurentPoly& at(int i, int j) const { return a_[(std::size_t)i * n_ + j]; }

  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  LaurentMatrix euler_derivative() const;
  LaurentPoly determinant() const;
  bool is_constant() const;
  /// The constant matrix, when is_constant().
  RatMat constant_part() const;

  /// Inverse within the Laurent ring; exists iff the determinant is a single
  /// term c t^k. Returns nullopt otherwise.
  std::optional<LaurentMatrix> unit_inverse() const;

private:
  int n_;
  std::vector<LaurentPoly> a_;
};

}  // namespace invdmod
