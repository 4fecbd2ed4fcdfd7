// Independent cross-checks used by the test suites. Everything here is
// deliberately written against first definitions (brute force, closures,
// eigenvalue arithmetic) rather than through the library's own code paths.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "invdmod/intmat.hpp"
#include "invdmod/ratmat.hpp"
#include "invdmod/rootdata.hpp"

namespace oracles {

using invdmod::IntMat;
using invdmod::Rational;
using invdmod::RatMat;

// ---- Smith decomposition validity -----------------------------------------

inline bool unimodular(const IntMat& m) {
  long long d = m.det();
  return d == 1 || d == -1;
}

inline bool valid_smith(const IntMat& input, const invdmod::SmithDecomposition& s) {
  if (!(s.u * input * s.v == s.d)) return false;
  if (!unimodular(s.u) || !unimodular(s.v)) return false;
  int bound = std::min(s.d.rows(), s.d.cols());
  for (int i = 0; i < s.d.rows(); ++i)
    for (int j = 0; j < s.d.cols(); ++j)
      if (i != j && s.d.at(i, j) != 0) return false;
  long long prev = 0;
  for (int i = 0; i < bound; ++i) {
    long long x = s.d.at(i, i);
    if (x < 0) return false;
    if (prev == 0 && x != 0 && i > 0) return false;  // nonzero after zero
    if (prev > 0 && (x % prev != 0)) return false;
    prev = x;
  }
  return true;
}

// ---- Brute-force subgroup closure -----------------------------------------

using Elt = std::vector<long long>;

inline std::set<Elt> closure(const invdmod::FiniteAbelianGroup& ambient,
                             const std::vector<Elt>& gens) {
  std::set<Elt> seen{ambient.zero()};
  std::vector<Elt> frontier{ambient.zero()};
  while (!frontier.empty()) {
    std::vector<Elt> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Elt s = ambient.add(e, ambient.reduce(g));
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Invariant factors of a finite abelian group recovered purely from the
// counts of p^k-torsion elements (the counts determine the partition of
// exponents at each prime).
inline std::vector<long long> invariants_from_elements(
    const invdmod::FiniteAbelianGroup& ambient, const std::set<Elt>& elems) {
  long long order = (long long)elems.size();
  std::vector<long long> primes;
  long long rest = order;
  for (long long p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);
  std::map<long long, std::vector<int>> partitions;  // prime -> exponent partition
  for (long long p : primes) {
    // conj[k-1] = #{i : lambda_i >= k}, read off the p^k-torsion counts:
    // log_p #{e : p^k e = 0} grows by that amount at each step.
    std::vector<int> conj;
    long long pk = 1;
    long long prev_log = 0;
    for (;;) {
      pk *= p;
      long long count = 0;
      for (const auto& e : elems) {
        Elt scaled = e;
        for (auto& x : scaled) x = x * pk;
        if (ambient.is_zero(scaled)) ++count;
      }
      long long lg = 0;
      while (count > 1) { count /= p; ++lg; }
      long long m = lg - prev_log;
      if (m == 0) break;
      conj.push_back((int)m);
      prev_log = lg;
    }
    // Conjugate partition -> exponent partition lambda.
    std::vector<int> lambda;
    int height = conj.empty() ? 0 : conj[0];
    for (int row = 1; row <= height; ++row) {
      int len = 0;
      for (int k = 0; k < (int)conj.size(); ++k)
        if (conj[k] >= row) ++len;
      lambda.push_back(len);
    }
    partitions[p] = lambda;
  }
  std::size_t slots = 0;
  for (auto& [p, lam] : partitions) slots = std::max(slots, lam.size());
  std::vector<long long> chain(slots, 1);
  for (auto& [p, lam] : partitions)
    for (std::size_t s = 0; s < lam.size(); ++s)
      for (int k = 0; k < lam[s]; ++k) chain[s] *= p;
  std::sort(chain.begin(), chain.end());
  chain.erase(std::remove(chain.begin(), chain.end(), 1LL), chain.end());
  return chain;
}

// ---- Integer polynomials and the reflection-product degree oracle ---------

using IPoly = std::vector<long long>;  // ascending coefficients

inline IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial; returns false if a remainder is left.
inline bool ipoly_divide(const IPoly& num, const IPoly& den, IPoly& quot) {
  IPoly r = num;
  int dn = (int)den.size() - 1;
  if ((int)r.size() - 1 < dn) return false;
  quot.assign(r.size() - dn, 0);
  for (int i = (int)r.size() - 1; i >= dn; --i) {
    long long c = r[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (int j = 0; j <= dn; ++j) r[i - dn + j] -= c * den[j];
  }
  return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

inline IPoly cyclotomic(int d) {
  // x^d - 1 divided by all lower cyclotomics of divisors.
  IPoly num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    IPoly q;
    bool ok = ipoly_divide(num, cyclotomic(e), q);
    if (!ok) return {};
    num = q;
  }
  return num;
}

// Characteristic polynomial of an integer matrix (integer coefficients).
inline IPoly int_char_poly(const IntMat& m) {
  RatMat rm(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rm.at(i, j) = Rational(m.at(i, j));
  IPoly out;
  for (auto& c : invdmod::char_poly(rm)) {
    if (c.den() != 1) return {};
    out.push_back(c.num());
  }
  return out;
}

// Degrees of the invariants of the reflection group, recovered from the
// eigenvalues of the product of simple reflections: the product has finite
// order h, its characteristic polynomial factors into cyclotomics, and each
// eigenvalue exp(2 pi i m / h) contributes the degree m + 1.
inline std::vector<int> degrees_from_reflections(const IntMat& cartan) {
  int r = cartan.rows();
  IntMat cox = IntMat::identity(r);
  for (int i = 0; i < r; ++i) {
    // s_i maps basis vector j to itself minus cartan(j, i) times basis i.
    IntMat s = IntMat::identity(r);
    for (int j = 0; j < r; ++j) s.at(i, j) = (i == j ? 1 : 0) - cartan.at(j, i);
    cox = cox * s;
  }
  // Order of the product.
  IntMat pw = cox;
  int h = 1;
  while (!(pw == IntMat::identity(r))) {
    pw = pw * cox;
    ++h;
    if (h > 100000) return {};
  }
  IPoly p = int_char_poly(cox);
  std::vector<int> ms;
  for (int d = 1; d <= h; ++d) {
    if (h % d != 0) continue;
    IPoly cyc = cyclotomic(d);
    for (;;) {
      IPoly q;
      if (!ipoly_divide(p, cyc, q)) break;
      p = q;
      for (int k = 1; k <= d; ++k)
        if (std::gcd(k, d) == 1) ms.push_back(k * (h / d));
      if (p.size() == 1) break;
    }
    if (p.size() == 1) break;
  }
  if (!(p.size() == 1 && p[0] == 1)) return {};
  std::vector<int> degrees;
  for (int mexp : ms) degrees.push_back(mexp + 1);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

// ---- Random rational helpers ----------------------------------------------

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen);
  }
  Rational rational(long long max_num = 3, long long max_den = 4) {
    long long d = uniform(1, max_den);
    long long n = uniform(-max_num, max_num);
    return Rational(n, d);
  }
  // Small invertible matrix with entries in [-2, 2].
  RatMat invertible(int n) {
    for (;;) {
      RatMat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(uniform(-2, 2));
      if (!invdmod::det(m).is_zero()) return m;
    }
  }
};

}  // namespace oracles
