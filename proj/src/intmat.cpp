#include "invdmod/intmat.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace invdmod {

namespace {

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    fail(ErrorCode::Overflow, "integer matrix entry exceeds 64 bits");
  return (long long)v;
}

}  // namespace

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      __int128 s = 0;
      for (int k = 0; k < a.cols_; ++k)
        s += (__int128)a.at(i, k) * b.at(k, j);
      c.at(i, j) = checked(s);
    }
  return c;
}

long long IntMat::det() const {
  if (rows_ != cols_) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  std::vector<__int128> w(a_.begin(), a_.end());
  auto e = [&](int i, int j) -> __int128& { return w[(std::size_t)i * n + j]; };
  __int128 prev = 1;
  long long sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (e(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (e(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(e(k, j), e(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
    prev = e(k, k);
  }
  return checked(sign * e(n - 1, n - 1));
}

std::vector<long long> SmithDecomposition::diagonal() const {
  int m = std::min(d.rows(), d.cols());
  std::vector<long long> out(m);
  for (int i = 0; i < m; ++i) out[i] = d.at(i, i);
  return out;
}

std::vector<long long> SmithDecomposition::nontrivial_factors() const {
  std::vector<long long> out;
  for (long long x : diagonal())
    if (x >= 2) out.push_back(x);
  return out;
}

namespace {

// Elementary row/column operations applied to the working matrix and mirrored
// on the accumulated transforms, keeping u * original * v equal to the
// working matrix at all times.
struct SnfWork {
  IntMat a, u, v;

  void row_swap(int i, int j) {
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_add(int dst, int src, long long f) {
    for (int c = 0; c < a.cols(); ++c)
      a.at(dst, c) = checked((__int128)a.at(dst, c) + (__int128)f * a.at(src, c));
    for (int c = 0; c < u.cols(); ++c)
      u.at(dst, c) = checked((__int128)u.at(dst, c) + (__int128)f * u.at(src, c));
  }
  void col_add(int dst, int src, long long f) {
    for (int r = 0; r < a.rows(); ++r)
      a.at(r, dst) = checked((__int128)a.at(r, dst) + (__int128)f * a.at(r, src));
    for (int r = 0; r < v.rows(); ++r)
      v.at(r, dst) = checked((__int128)v.at(r, dst) + (__int128)f * v.at(r, src));
  }
  void row_negate(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& m) {
  SnfWork w{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  int rows = m.rows(), cols = m.cols();
  int bound = std::min(rows, cols);

  for (int t = 0; t < bound; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          long long x = std::llabs(w.a.at(i, j));
          if (x != 0 && (pi < 0 || x < best)) { pi = i; pj = j; best = x; }
        }
      if (pi < 0) { t = bound; break; }  // trailing block is zero
      if (pi != t) w.row_swap(t, pi);
      if (pj != t) w.col_swap(t, pj);

      long long p = w.a.at(t, t);
      bool reduced = true;
      for (int i = t + 1; i < rows; ++i)
        if (w.a.at(i, t) != 0) {
          w.row_add(i, t, -(w.a.at(i, t) / p));
          if (w.a.at(i, t) != 0) reduced = false;
        }
      for (int j = t + 1; j < cols; ++j)
        if (w.a.at(t, j) != 0) {
          w.col_add(j, t, -(w.a.at(t, j) / p));
          if (w.a.at(t, j) != 0) reduced = false;
        }
      if (!reduced) continue;  // remainders shrink the minimum, re-pivot

      // Pivot must divide every remaining entry; if not, fold the offending
      // row into row t and restart this pivot.
      int oi = -1;
      for (int i = t + 1; i < rows && oi < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (w.a.at(i, j) % p != 0) { oi = i; break; }
      if (oi >= 0) { w.row_add(t, oi, 1); continue; }

      if (w.a.at(t, t) < 0) w.row_negate(t);
      break;
    }
  }
  return SmithDecomposition{w.a, w.u, w.v};
}

}  // namespace invdmod
