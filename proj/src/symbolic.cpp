#include "invdmod/symbolic.hpp"

#include <algorithm>

namespace invdmod {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_[Monomial::one(nvars)] = c;
  return p;
}

Poly Poly::variable(int nvars, int v) {
  if (v < 0 || v >= nvars) fail(ErrorCode::InvalidArgument, "variable index out of range");
  Poly p(nvars);
  Monomial m = Monomial::one(nvars);
  m.e[v] = 1;
  m.deg = 1;
  p.terms_[m] = Rational(1);
  return p;
}

void Poly::insert(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorCode::DimensionMismatch, "polynomial variable mismatch");
  Poly r = a;
  for (auto& [m, c] : b.terms_) r.insert(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorCode::DimensionMismatch, "polynomial variable mismatch");
  Poly r = a;
  for (auto& [m, c] : b.terms_) r.insert(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  Poly r(nvars_);
  if (s.is_zero()) return r;
  for (auto& [m, c] : terms_) r.terms_[m] = c * s;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorCode::DimensionMismatch, "polynomial variable mismatch");
  int cap = max_symbolic_degree();
  Poly r(a.nvars_);
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.deg = ma.deg + mb.deg;
      if (m.deg > cap)
        fail(ErrorCode::ResourceLimit, "polynomial degree exceeds cap " + std::to_string(cap));
      m.e.resize(ma.e.size());
      for (std::size_t i = 0; i < ma.e.size(); ++i)
        m.e[i] = (std::uint8_t)(ma.e[i] + mb.e[i]);
      r.insert(m, ca * cb);
    }
  return r;
}

Poly Poly::derivative(int v) const {
  Poly r(nvars_);
  for (auto& [m, c] : terms_) {
    if (m.e[v] == 0) continue;
    Monomial d = m;
    Rational coef = c * Rational(d.e[v]);
    --d.e[v];
    --d.deg;
    r.insert(d, coef);
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    for (std::size_t v = 0; v < m.e.size(); ++v)
      for (int k = 0; k < m.e[v]; ++k) s += "*" + names[v];
  }
  return s;
}

namespace {

// Symbolic determinant of the generic r x r matrix by permutation expansion.
Poly generic_det(int r, int nvars, const std::vector<Poly>& vars,
                 const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.empty()) return Poly::constant(nvars, Rational(1));
  Poly acc(nvars);
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> rrows(rows.begin() + 1, rows.end());
    std::vector<int> rcols = cols;
    rcols.erase(rcols.begin() + k);
    Poly sub = generic_det(r, nvars, vars, rrows, rcols);
    Poly contrib = vars[rows[0] * r + cols[k]] * sub;
    acc = (sign > 0) ? acc + contrib : acc - contrib;
    sign = -sign;
  }
  return acc;
}

}  // namespace

MatrixFormContext::MatrixFormContext(int r) : r_(r) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  int nv = r * r;
  for (int v = 0; v < nv; ++v) vars_.push_back(Poly::variable(nv, v));

  std::vector<int> all(r);
  for (int i = 0; i < r; ++i) all[i] = i;
  det_ = generic_det(r, nv, vars_, all, all);
  for (int v = 0; v < nv; ++v) ddet_.push_back(det_.derivative(v));

  // adj(i, j) = (-1)^{i+j} * minor with row j and column i removed.
  adj_.resize(nv);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<int> rows, cols;
      for (int t = 0; t < r; ++t) {
        if (t != j) rows.push_back(t);
        if (t != i) cols.push_back(t);
      }
      Poly minor = generic_det(r, nv, vars_, rows, cols);
      adj_[var(i, j)] = ((i + j) % 2 == 0) ? minor : -minor;
    }
}

std::string MatrixFormContext::var_name(int v) const {
  return "x" + std::to_string(v / r_ + 1) + std::to_string(v % r_ + 1);
}

namespace {

Poly det_power(const MatrixFormContext& ctx, int p) {
  Poly r = Poly::constant(ctx.nvars(), Rational(1));
  for (int i = 0; i < p; ++i) r = r * ctx.det();
  return r;
}

}  // namespace

DetFrac df_add(const MatrixFormContext& ctx, const DetFrac& a, const DetFrac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int p = std::max(a.detpow, b.detpow);
  Poly na = a.num * det_power(ctx, p - a.detpow);
  Poly nb = b.num * det_power(ctx, p - b.detpow);
  return DetFrac{na + nb, p};
}

DetFrac df_sub(const MatrixFormContext& ctx, const DetFrac& a, const DetFrac& b) {
  return df_add(ctx, a, df_neg(b));
}

DetFrac df_mul(const DetFrac& a, const DetFrac& b) {
  return DetFrac{a.num * b.num, a.detpow + b.detpow};
}

DetFrac df_neg(const DetFrac& a) { return DetFrac{-a.num, a.detpow}; }

bool df_equal(const MatrixFormContext& ctx, const DetFrac& a, const DetFrac& b) {
  return df_sub(ctx, a, b).is_zero();
}

OneForm one_add(const MatrixFormContext& ctx, const OneForm& a, const OneForm& b) {
  OneForm r = a;
  for (auto& [v, c] : b) {
    auto it = r.find(v);
    if (it == r.end()) r[v] = c;
    else {
      it->second = df_add(ctx, it->second, c);
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

TwoForm two_add(const MatrixFormContext& ctx, const TwoForm& a, const TwoForm& b) {
  TwoForm r = a;
  for (auto& [vv, c] : b) {
    auto it = r.find(vv);
    if (it == r.end()) r[vv] = c;
    else {
      it->second = df_add(ctx, it->second, c);
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

bool one_is_zero(const OneForm& f) {
  return std::all_of(f.begin(), f.end(), [](auto& kv) { return kv.second.is_zero(); });
}

bool two_is_zero(const TwoForm& f) {
  return std::all_of(f.begin(), f.end(), [](auto& kv) { return kv.second.is_zero(); });
}

OneForm d0(const MatrixFormContext& ctx, const DetFrac& f) {
  // d(n / det^p) = (det * dn - p n d(det)) / det^{p+1}, per variable.
  OneForm out;
  for (int v = 0; v < ctx.nvars(); ++v) {
    Poly dn = f.num.derivative(v);
    DetFrac c;
    if (f.detpow == 0) {
      c = DetFrac{dn, 0};
    } else {
      Poly num = ctx.det() * dn - f.num * ctx.ddet(v) * Rational(f.detpow);
      c = DetFrac{num, f.detpow + 1};
    }
    if (!c.is_zero()) out[v] = c;
  }
  return out;
}

TwoForm d1(const MatrixFormContext& ctx, const OneForm& f) {
  TwoForm out;
  for (auto& [b, coef] : f) {
    OneForm dc = d0(ctx, coef);
    for (auto& [a, c] : dc) {
      if (a == b) continue;
      // dc ^ dx_b: orient pairs with the smaller variable first.
      std::pair<int, int> key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      DetFrac signed_c = a < b ? c : df_neg(c);
      auto it = out.find(key);
      if (it == out.end()) out[key] = signed_c;
      else {
        it->second = df_add(ctx, it->second, signed_c);
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

TwoForm wedge11(const MatrixFormContext& ctx, const OneForm& a, const OneForm& b) {
  TwoForm out;
  for (auto& [va, ca] : a)
    for (auto& [vb, cb] : b) {
      if (va == vb) continue;
      DetFrac prod = df_mul(ca, cb);
      std::pair<int, int> key = va < vb ? std::make_pair(va, vb) : std::make_pair(vb, va);
      if (va > vb) prod = df_neg(prod);
      auto it = out.find(key);
      if (it == out.end()) out[key] = prod;
      else {
        it->second = df_add(ctx, it->second, prod);
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

}  // namespace invdmod
