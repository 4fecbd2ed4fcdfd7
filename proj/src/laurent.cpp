#include "invdmod/laurent.hpp"

namespace invdmod {

void LaurentPoly::check_exponent(long long e) {
  long long cap = max_symbolic_degree();
  if (e > cap || e < -cap)
    fail(ErrorCode::ResourceLimit,
         "Laurent exponent " + std::to_string(e) + " exceeds cap " + std::to_string(cap));
}

LaurentPoly LaurentPoly::term(const Rational& c, long long e) {
  check_exponent(e);
  LaurentPoly p;
  if (!c.is_zero()) p.terms_[e] = c;
  return p;
}

Rational LaurentPoly::constant_coeff() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::insert(long long e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, c] : b.terms_) r.insert(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, c] : b.terms_) r.insert(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      LaurentPoly::check_exponent(ea + eb);
      r.insert(ea + eb, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::euler_derivative() const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.insert(e, c * Rational(e));
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (e != 0) s += "*t^" + std::to_string(e);
  }
  return s;
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

LaurentMatrix LaurentMatrix::from_constant(const RatMat& src) {
  if (!src.is_square()) fail(ErrorCode::DimensionMismatch, "gauge matrix must be square");
  LaurentMatrix m(src.rows());
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) m.at(i, j) = LaurentPoly(src.at(i, j));
  return m;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  LaurentMatrix c(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
  return c;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  LaurentMatrix c(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
  return c;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  LaurentMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      LaurentPoly s;
      for (int k = 0; k < a.n_; ++k) s = s + a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  return c;
}

LaurentMatrix LaurentMatrix::euler_derivative() const {
  LaurentMatrix c(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i].euler_derivative();
  return c;
}

namespace {

LaurentPoly det_rec(const LaurentMatrix& m, std::vector<int>& cols, int row) {
  if (row == m.n()) return LaurentPoly(1);
  LaurentPoly acc;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    if (!m.at(row, c).is_zero()) {
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + k);
      LaurentPoly sub = det_rec(m, rest, row + 1);
      LaurentPoly contrib = m.at(row, c) * sub;
      acc = (sign > 0) ? acc + contrib : acc - contrib;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

LaurentPoly LaurentMatrix::determinant() const {
  std::vector<int> cols(n_);
  for (int i = 0; i < n_; ++i) cols[i] = i;
  return det_rec(*this, cols, 0);
}

bool LaurentMatrix::is_constant() const {
  for (auto& p : a_)
    if (!p.is_constant()) return false;
  return true;
}

RatMat LaurentMatrix::constant_part() const {
  RatMat m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j).constant_coeff();
  return m;
}

std::optional<LaurentMatrix> LaurentMatrix::unit_inverse() const {
  LaurentPoly d = determinant();
  if (!d.is_monomial()) return std::nullopt;
  auto [e, c] = *d.terms().begin();
  // adjugate / det; the division is exact because det is a single term.
  LaurentPoly dinv = LaurentPoly::term(Rational(1) / c, -e);
  LaurentMatrix inv(n_);
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      // Cofactor expansion of the (j, i) minor.
      LaurentMatrix minor(n_ == 1 ? 1 : n_ - 1);
      if (n_ == 1) {
        inv.at(0, 0) = dinv;
        continue;
      }
      int rr = 0;
      for (int r = 0; r < n_; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int c2 = 0; c2 < n_; ++c2) {
          if (c2 == i) continue;
          minor.at(rr, cc) = at(r, c2);
          ++cc;
        }
        ++rr;
      }
      LaurentPoly cof = minor.determinant();
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(i, j) = cof * dinv;
    }
  return inv;
}

}  // namespace invdmod
