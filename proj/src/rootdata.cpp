#include "invdmod/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace invdmod {

void validate_type(const CartanType& t) {
  int r = t.rank;
  bool ok = false;
  switch (t.series) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 2; break;
    case 'D': ok = r >= 3; break;
    case 'E': ok = r == 6 || r == 7 || r == 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: ok = false;
  }
  if (!ok)
    fail(ErrorCode::InvalidRank,
         "invalid simple type " + std::string(1, t.series) + std::to_string(r));
}

CartanType parse_cartan_type_token(const std::string& token) {
  if (token.size() < 2)
    fail(ErrorCode::MalformedInput, "cannot parse type token \"" + token + "\"");
  char s = token[0];
  if (s >= 'a' && s <= 'z') s = (char)(s - 'a' + 'A');
  for (std::size_t i = 1; i < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9')
      fail(ErrorCode::MalformedInput, "cannot parse type token \"" + token + "\"");
  CartanType t{s, std::stoi(token.substr(1))};
  validate_type(t);
  return t;
}

IntMat cartan_matrix(const CartanType& t) {
  validate_type(t);
  int r = t.rank;
  IntMat m(r, r);
  for (int i = 0; i < r; ++i) m.at(i, i) = 2;
  auto link = [&](int i, int j) { m.at(i, j) = -1; m.at(j, i) = -1; };  // 1-based below

  // Chains are wired first, then series-specific arrows and branch nodes.
  switch (t.series) {
    case 'A':
      for (int i = 1; i < r; ++i) link(i - 1, i);
      break;
    case 'B':
      for (int i = 1; i < r; ++i) link(i - 1, i);
      m.at(r - 2, r - 1) = -2;  // a_r is short
      break;
    case 'C':
      for (int i = 1; i < r; ++i) link(i - 1, i);
      m.at(r - 1, r - 2) = -2;  // a_r is long
      break;
    case 'D':
      for (int i = 1; i < r - 1; ++i) link(i - 1, i);
      link(r - 3, r - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4.
      link(0, 2);
      for (int i = 3; i < r; ++i) link(i - 1, i);
      link(1, 3);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      m.at(1, 2) = -2;  // a_1, a_2 long; a_3, a_4 short
      break;
    case 'G':
      link(0, 1);
      m.at(1, 0) = -3;  // a_1 short, a_2 long
      break;
  }
  return m;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      fail(ErrorCode::InvalidArgument, "invariant factor below 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      fail(ErrorCode::InvalidArgument, "invariant factors do not form a divisibility chain");
  }
}

long long FiniteAbelianGroup::order() const {
  __int128 p = 1;
  for (long long f : factors_) {
    p *= f;
    if (p > INT64_MAX) fail(ErrorCode::Overflow, "group order exceeds 64 bits");
  }
  return (long long)p;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::reduce(Element e) const {
  if (e.size() != factors_.size())
    fail(ErrorCode::DimensionMismatch, "element has wrong number of coordinates");
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] %= factors_[i];
    if (e[i] < 0) e[i] += factors_[i];
  }
  return e;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  if (a.size() != factors_.size() || b.size() != factors_.size())
    fail(ErrorCode::DimensionMismatch, "element has wrong number of coordinates");
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
  return c;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::negate(const Element& a) const {
  Element c = reduce(a);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) c[i] = factors_[i] - c[i];
  return c;
}

bool FiniteAbelianGroup::is_zero(const Element& e) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] % factors_[i] != 0) return false;
  return true;
}

long long FiniteAbelianGroup::element_order(const Element& e) const {
  Element r = reduce(e);
  long long o = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    long long oi = factors_[i] / std::gcd(factors_[i], r[i]);
    o = std::lcm(o, oi);
  }
  return o;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements(long long cap) const {
  if (order() > cap)
    fail(ErrorCode::ResourceLimit, "group too large to enumerate");
  std::vector<Element> out;
  Element cur = zero();
  for (;;) {
    out.push_back(cur);
    int i = (int)factors_.size() - 1;
    while (i >= 0) {
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<long long> canonical_invariant_factors(const std::vector<long long>& cyclic_orders) {
  // Group prime-power components, then rebuild the chain largest-first.
  std::map<long long, std::vector<int>> by_prime;
  for (long long n : cyclic_orders) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "cyclic order below 1");
    for (long long p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      by_prime[p].push_back(e);
    }
    if (n > 1) by_prime[n].push_back(1);
  }
  std::size_t slots = 0;
  for (auto& [p, es] : by_prime) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    slots = std::max(slots, es.size());
  }
  std::vector<long long> chain(slots, 1);
  for (auto& [p, es] : by_prime)
    for (std::size_t s = 0; s < es.size(); ++s) {
      __int128 v = chain[s];
      for (int k = 0; k < es[s]; ++k) v *= p;
      if (v > INT64_MAX) fail(ErrorCode::Overflow, "invariant factor exceeds 64 bits");
      chain[s] = (long long)v;
    }
  std::reverse(chain.begin(), chain.end());  // ascending divisibility
  return chain;
}

Subgroup subgroup(const FiniteAbelianGroup& ambient, const SubgroupSpec& spec) {
  int k = ambient.num_factors();
  std::vector<FiniteAbelianGroup::Element> gens;
  for (const auto& g : spec.generators) {
    auto r = ambient.reduce(g);
    if (!ambient.is_zero(r)) gens.push_back(r);
  }
  if (k == 0 || gens.empty())
    return Subgroup{FiniteAbelianGroup(), ambient, gens};

  // Lattice of the subgroup's preimage in Z^k is spanned by the generators
  // together with the factor relations diag(d). With u * M * v = s in Smith
  // form, the leading k columns of s give a basis change: the subgroup is
  // Z^k modulo c, where c = s_k^{-1} * u * diag(d).
  int m = (int)gens.size();
  IntMat mat(k, m + k);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < k; ++i) mat.at(i, j) = gens[j][i];
  for (int i = 0; i < k; ++i) mat.at(i, m + i) = ambient.invariant_factors()[i];

  SmithDecomposition snf = smith_normal_form(mat);
  IntMat diag(k, k);
  for (int i = 0; i < k; ++i) diag.at(i, i) = ambient.invariant_factors()[i];
  IntMat w = snf.u * diag;
  IntMat c(k, k);
  for (int i = 0; i < k; ++i) {
    long long s = snf.d.at(i, i);
    if (s == 0) fail(ErrorCode::InvalidArgument, "degenerate relation lattice");
    for (int j = 0; j < k; ++j) {
      if (w.at(i, j) % s != 0)
        fail(ErrorCode::InvalidArgument, "relation lattice not contained in span");
      c.at(i, j) = w.at(i, j) / s;
    }
  }
  std::vector<long long> cyc;
  for (long long x : smith_normal_form(c).diagonal()) {
    if (x == 0) fail(ErrorCode::InvalidArgument, "subgroup quotient not finite");
    cyc.push_back(x);
  }
  return Subgroup{FiniteAbelianGroup(canonical_invariant_factors(cyc)), ambient, gens};
}

FiniteAbelianGroup center_of_sc(const std::vector<CartanType>& factors) {
  std::vector<long long> cyc;
  for (const auto& t : factors) {
    SmithDecomposition snf = smith_normal_form(cartan_matrix(t));
    for (long long x : snf.diagonal()) {
      if (x == 0) fail(ErrorCode::InvalidArgument, "singular Cartan matrix");
      cyc.push_back(x);
    }
  }
  return FiniteAbelianGroup(canonical_invariant_factors(cyc));
}

SemisimpleGroup::SemisimpleGroup(std::vector<CartanType> factors, const SubgroupSpec& gamma_spec)
    : factors_(std::move(factors)) {
  for (const auto& t : factors_) validate_type(t);
  gamma_ = subgroup(center_of_sc(factors_), gamma_spec);
}

int SemisimpleGroup::rank() const {
  int r = 0;
  for (const auto& t : factors_) r += t.rank;
  return r;
}

}  // namespace invdmod
