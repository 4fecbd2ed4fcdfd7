#include "invdmod/ratmat.hpp"

#include <algorithm>
#include <numeric>

namespace invdmod {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMat RatMat::diagonal(const std::vector<Rational>& d) {
  RatMat m((int)d.size(), (int)d.size());
  for (int i = 0; i < (int)d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  RatMat c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
  return c;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  RatMat c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
  return c;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RatMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      Rational s;
      for (int k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  return c;
}

RatMat RatMat::operator*(const Rational& s) const {
  RatMat c(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] * s;
  return c;
}

bool operator==(const RatMat& a, const RatMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool RatMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool RatMat::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

Rational RatMat::trace() const {
  if (!is_square()) fail(ErrorCode::DimensionMismatch, "trace of non-square matrix");
  Rational s;
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<int> rref_in_place(RatMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const RatMat& m) {
  RatMat w = m;
  return (int)rref_in_place(w).size();
}

Rational det(const RatMat& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  RatMat w = m;
  int n = m.rows();
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!w.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
      d = -d;
    }
    d *= w.at(c, c);
    Rational inv = Rational(1) / w.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (w.at(i, c).is_zero()) continue;
      Rational f = w.at(i, c) * inv;
      for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return d;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  int n = m.rows();
  RatMat w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, n + i) = Rational(1);
  }
  auto piv = rref_in_place(w);
  if ((int)piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j);
  return inv;
}

RatMat nullspace_basis(const RatMat& m) {
  RatMat w = m;
  std::vector<int> piv = rref_in_place(w);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  RatMat basis(m.cols(), (int)free_cols.size());
  for (int k = 0; k < (int)free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, k) = Rational(1);
    for (int r = 0; r < (int)piv.size(); ++r)
      basis.at(piv[r], k) = -w.at(r, fc);
  }
  return basis;
}

std::optional<RatMat> solve(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows())
    fail(ErrorCode::DimensionMismatch, "solve shape mismatch");
  RatMat w(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) w.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) w.at(i, a.cols() + j) = b.at(i, j);
  }
  auto piv = rref_in_place(w);
  int ra = 0;
  for (int c : piv)
    if (c < a.cols()) ++ra;
  if (ra < (int)piv.size()) return std::nullopt;  // pivot in augmented part
  if (ra < a.cols())
    fail(ErrorCode::InvalidArgument, "solve requires full column rank");
  RatMat x(a.cols(), b.cols());
  for (int r = 0; r < ra; ++r)
    for (int j = 0; j < b.cols(); ++j) x.at(piv[r], j) = w.at(r, a.cols() + j);
  return x;
}

std::vector<Rational> char_poly(const RatMat& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "char poly of non-square matrix");
  int n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  RatMat mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) mk = m * mk;
    c[n - k] = -(mk.trace() / Rational(k));
    if (k < n)
      for (int i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
  }
  return c;
}

namespace {

std::vector<long long> positive_divisors(long long n) {
  n = std::llabs(n);
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational v;
  for (int i = (int)c.size() - 1; i >= 0; --i) v = v * x + c[i];
  return v;
}

// Divide (x - r) out of c, which must vanish at r.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  int n = (int)c.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = c[n];
  for (int i = n - 1; i >= 0; --i) {
    q[i] = carry;
    carry = c[i] + carry * r;
  }
  if (!carry.is_zero()) fail(ErrorCode::InvalidArgument, "deflation at a non-root");
  return q;
}

}  // namespace

RationalRoots rational_roots(std::vector<Rational> coeffs) {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() <= 1) fail(ErrorCode::InvalidArgument, "roots of a constant polynomial");

  RationalRoots out;
  // Strip roots at zero first.
  int zero_mult = 0;
  while (coeffs.size() > 1 && coeffs.front().is_zero()) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});

  if (coeffs.size() > 1) {
    // Integer model: common denominator does not change the roots.
    long long den = 1;
    for (auto& c : coeffs) den = std::lcm(den, c.den());
    std::vector<long long> ic;
    for (auto& c : coeffs) {
      __int128 v = (__int128)c.num() * (den / c.den());
      if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::Overflow, "coefficient overflow");
      ic.push_back((long long)v);
    }
    long long a0 = ic.front(), an = ic.back();
    for (long long p : positive_divisors(a0)) {
      for (long long q : positive_divisors(an)) {
        if (std::gcd(p, q) != 1) continue;
        for (int sign : {1, -1}) {
          Rational cand(sign * p, q);
          int mult = 0;
          while ((int)coeffs.size() > 1 && eval_poly(coeffs, cand).is_zero()) {
            coeffs = deflate(coeffs, cand);
            ++mult;
          }
          if (mult > 0) out.roots.push_back({cand, mult});
        }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.splits = coeffs.size() <= 1;
  return out;
}

std::vector<int> jordan_blocks_at(const RatMat& m, const Rational& lambda, int alg_mult) {
  int n = m.rows();
  RatMat shifted = m - RatMat::identity(n) * lambda;
  // Kernel dimensions k_j of shifted^j; blocks of size exactly s number
  // 2*k_s - k_{s-1} - k_{s+1}.
  std::vector<int> k{0};
  RatMat pw = RatMat::identity(n);
  while (k.back() < alg_mult) {
    pw = pw * shifted;
    int dim = n - rank(pw);
    if (dim == k.back())
      fail(ErrorCode::InvalidArgument, "stated multiplicity exceeds generalized eigenspace");
    k.push_back(dim);
  }
  k.push_back(k.back());
  std::vector<int> blocks;
  for (int s = 1; s + 1 < (int)k.size(); ++s) {
    int count = 2 * k[s] - k[s - 1] - k[s + 1];
    for (int c = 0; c < count; ++c) blocks.push_back(s);
  }
  std::sort(blocks.begin(), blocks.end(), std::greater<int>());
  return blocks;
}

}  // namespace invdmod
