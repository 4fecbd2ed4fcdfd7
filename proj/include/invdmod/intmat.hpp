#pragma once

#include <vector>

#include "invdmod/errors.hpp"

namespace invdmod {

/// Dense integer matrix with checked 64-bit arithmetic.
class IntMat {
public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_((std::size_t)rows * cols, 0) {
    if (rows < 0 || cols < 0) fail(ErrorCode::InvalidArgument, "negative matrix shape");
  }

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& at(int i, int j) { return a_[(std::size_t)i * cols_ + j]; }
  long long at(int i, int j) const { return a_[(std::size_t)i * cols_ + j]; }

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Exact determinant (square matrices only), via 128-bit Bareiss elimination.
  long long det() const;

private:
  int rows_, cols_;
  std::vector<long long> a_;
};

/// Smith normal form decomposition u * input * v = d with u, v unimodular and
/// d diagonal, d(i,i) >= 0, each diagonal entry dividing the next.
struct SmithDecomposition {
  IntMat d;
  IntMat u;
  IntMat v;

  /// Diagonal of d, length min(rows, cols).
  std::vector<long long> diagonal() const;
  /// Diagonal entries >= 2, i.e. the invariant factors of the cokernel
  /// (nonsingular square input).
  std::vector<long long> nontrivial_factors() const;
};

SmithDecomposition smith_normal_form(const IntMat& m);

}  // namespace invdmod
