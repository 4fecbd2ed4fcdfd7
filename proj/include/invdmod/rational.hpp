#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "invdmod/errors.hpp"

namespace invdmod {

/// Exact rational number over 64-bit integers.
///
/// Always stored normalized: gcd(num, den) = 1, den > 0. Intermediate
/// products run in 128-bit arithmetic; results that do not fit back into
/// 64 bits raise Overflow rather than wrapping.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) { *this = make(n, d); }

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                (__int128)a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorCode::InvalidArgument, "division by zero");
    return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  /// Representative in [0, 1) of the value mod 1.
  Rational mod1() const { return *this - Rational(floor()); }

  /// "p/q" in lowest terms, or just "p" for integers.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parse "p" or "p/q". Raises MalformedInput on anything else.
  static Rational parse(const std::string& s);

private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
  static long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      fail(ErrorCode::Overflow, "rational component exceeds 64 bits");
    return (long long)v;
  }

  long long num_;
  long long den_;
};

inline Rational Rational::parse(const std::string& s) {
  auto bad = [&] { fail(ErrorCode::MalformedInput, "invalid rational literal: \"" + s + "\""); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto parse_int = [&](const std::string& t) -> long long {
    if (t.empty()) bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') bad();
    try {
      return std::stoll(t);
    } catch (const std::exception&) {
      fail(ErrorCode::Overflow, "integer literal out of range: \"" + t + "\"");
    }
  };
  long long n = parse_int(ns);
  long long d = parse_int(ds);
  if (d == 0) fail(ErrorCode::MalformedInput, "zero denominator in \"" + s + "\"");
  return Rational(n, d);
}

}  // namespace invdmod
