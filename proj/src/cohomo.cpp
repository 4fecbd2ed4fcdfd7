#include "invdmod/cohomo.hpp"

#include <algorithm>
#include <numeric>

namespace invdmod {

WeylDegrees weyl_degrees(const CartanType& t) {
  validate_type(t);
  if (t.rank > 8)
    fail(ErrorCode::InvalidRank, "degree table covers rank <= 8");
  int r = t.rank;
  std::vector<int> d;
  switch (t.series) {
    case 'A':
      for (int i = 2; i <= r + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 2; i <= 2 * r; i += 2) d.push_back(i);
      break;
    case 'D':
      for (int i = 2; i <= 2 * r - 2; i += 2) d.push_back(i);
      d.push_back(r);
      break;
    case 'E':
      if (r == 6) d = {2, 5, 6, 8, 9, 12};
      else if (r == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());

  long long prod = 1;
  for (int x : d) prod *= x;
  if (prod != weyl_order(t))
    fail(ErrorCode::InvalidArgument, "degree table inconsistent with Weyl order");
  return WeylDegrees{t, std::move(d)};
}

long long weyl_order(const CartanType& t) {
  validate_type(t);
  if (t.rank > 8)
    fail(ErrorCode::InvalidRank, "order table covers rank <= 8");
  int r = t.rank;
  auto factorial = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (t.series) {
    case 'A': return factorial(r + 1);
    case 'B':
    case 'C': return (1LL << r) * factorial(r);
    case 'D': return (1LL << (r - 1)) * factorial(r);
    case 'E':
      if (r == 6) return 51840;
      if (r == 7) return 2903040;
      return 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 1;
}

long long PoincarePolynomial::value_at_one() const {
  long long s = 0;
  for (long long c : coeffs) s += c;
  return s;
}

bool PoincarePolynomial::is_palindromic() const {
  std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < n; ++i)
    if (coeffs[i] != coeffs[n - 1 - i]) return false;
  return true;
}

PoincarePolynomial poincare(const std::vector<CartanType>& factors) {
  std::vector<long long> p{1};
  for (const auto& t : factors)
    for (int d : weyl_degrees(t).degrees) {
      int gen = 2 * d - 1;
      std::vector<long long> q(p.size() + gen, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] += p[i];
        q[i + gen] += p[i];
      }
      p = std::move(q);
    }
  return PoincarePolynomial{std::move(p)};
}

PoincarePolynomial poincare(const SemisimpleGroup& g) { return poincare(g.factors()); }

long long dmod_betti(const SemisimpleGroup& g, const RepClass& v, int i) {
  if (v.group() != g.gamma())
    fail(ErrorCode::GroupMismatch, "class is not over the fundamental group of g");
  return poincare(g).at(i) * invariants_dim(v);
}

long long local_system_betti(const SemisimpleGroup& g, const RepClass& v, int i) {
  if (v.group() != g.gamma())
    fail(ErrorCode::GroupMismatch, "class is not over the fundamental group of g");
  // (H^i of the cover tensor v)^gamma; gamma moves only the v factor, so the
  // invariants split off dim v^gamma per cover class.
  return poincare(g).at(i) * invariants_dim(v);
}

MonodromyFactorization monodromy_factors_through(const SemisimpleGroup& g, const RepClass& v) {
  if (v.group() != g.gamma())
    fail(ErrorCode::GroupMismatch, "class is not over the fundamental group of g");
  long long image = 1;
  for (auto& e : v.entries())
    image = std::lcm(image, character_order(g.gamma(), e.character));
  return MonodromyFactorization{g.gamma(), v, image};
}

}  // namespace invdmod
