#pragma once

#include <optional>
#include <vector>

#include "invdmod/rational.hpp"

namespace invdmod {

/// Dense matrix over the rationals.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_((std::size_t)rows * cols) {
    if (rows < 0 || cols < 0) fail(ErrorCode::InvalidArgument, "negative matrix shape");
  }

  static RatMat identity(int n);
  static RatMat diagonal(const std::vector<Rational>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j) { return a_[(std::size_t)i * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[(std::size_t)i * cols_ + j]; }

  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  RatMat operator*(const Rational& s) const;
  RatMat operator-() const { return *this * Rational(-1); }
  friend bool operator==(const RatMat& a, const RatMat& b);
  friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

  bool is_zero() const;
  bool is_diagonal() const;
  Rational trace() const;
  RatMat transpose() const;

  friend RatMat commutator(const RatMat& a, const RatMat& b) { return a * b - b * a; }

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Exact row-reduced echelon form; returns pivot column indices.
std::vector<int> rref_in_place(RatMat& m);

int rank(const RatMat& m);

/// Determinant of a square matrix.
Rational det(const RatMat& m);

/// Inverse; nullopt when singular.
std::optional<RatMat> inverse(const RatMat& m);

/// Basis of the right null space, one matrix column per basis vector.
RatMat nullspace_basis(const RatMat& m);

/// Solve a * x = b for x (all columns of b at once); nullopt when
/// inconsistent. Requires a of full column rank for a unique solution;
/// raises InvalidArgument otherwise.
std::optional<RatMat> solve(const RatMat& a, const RatMat& b);

/// Characteristic polynomial, ascending coefficients c_0..c_n with c_n = 1
/// (Faddeev-LeVerrier).
std::vector<Rational> char_poly(const RatMat& m);

/// Rational roots of a polynomial (ascending coefficients) with their
/// multiplicities, sorted by value. `splits` is true when the polynomial
/// factors completely into linear factors over the rationals.
struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;
  bool splits;
};
RationalRoots rational_roots(std::vector<Rational> coeffs);

/// Jordan block sizes of m at eigenvalue lambda (descending), given the
/// algebraic multiplicity; computed from kernel dimensions of powers.
std::vector<int> jordan_blocks_at(const RatMat& m, const Rational& lambda, int alg_mult);

}  // namespace invdmod
