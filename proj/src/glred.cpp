#include "invdmod/glred.hpp"

#include <algorithm>
#include <set>

namespace invdmod {

GlrConnectionSpec::GlrConnectionSpec(int r_, int n_, RatMat a_, std::vector<long long> k_)
    : r(r_), n(n_), a(std::move(a_)), k(std::move(k_)) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "group rank must be >= 1");
  if (n < 1) fail(ErrorCode::InvalidArgument, "connection rank must be >= 1");
  if (a.rows() != n || a.cols() != n)
    fail(ErrorCode::DimensionMismatch, "abelian-part coefficient has wrong shape");
  if ((int)k.size() != n)
    fail(ErrorCode::DimensionMismatch, "expected one weight per basis vector");
}

namespace {

RatMat weight_matrix(const GlrConnectionSpec& s) {
  std::vector<Rational> d;
  for (long long x : s.k) d.push_back(Rational(x));
  return RatMat::diagonal(d);
}

}  // namespace

RatMat scalar_form(const GlrConnectionSpec& s) {
  if (std::any_of(s.k.begin(), s.k.end(), [](long long x) { return x != 0; }))
    fail(ErrorCode::InvalidArgument,
         "scalar form requires a trivial semisimple part (all weights zero)");
  return s.a * Rational(1, s.r);
}

ConstantTorusConnection reduce_to_gm(const GlrConnectionSpec& s) {
  RatMat b = weight_matrix(s);
  if (!commutator(s.a, b).is_zero())
    fail(ErrorCode::NonCommutingData,
         "abelian coefficient does not commute with the weight matrix");
  return ConstantTorusConnection(1, s.n, {(s.a + b) * Rational(1, s.r)});
}

bool glr_equivalent(const GlrConnectionSpec& a, const GlrConnectionSpec& b) {
  if (a.r != b.r || a.n != b.n)
    fail(ErrorCode::DimensionMismatch, "specs live on different groups or ranks");
  Equivalence e = equivalent(reduce_to_gm(a), reduce_to_gm(b));
  // A single coefficient matrix cannot hit the wild case.
  return e == Equivalence::True;
}

namespace {

// partitions[k] lists all partitions of k for k = 0..n, each descending.
std::vector<std::vector<std::vector<int>>> partition_table(int n) {
  std::vector<std::vector<std::vector<int>>> parts(n + 1);
  parts[0] = {{}};
  for (int k = 1; k <= n; ++k)
    for (int largest = k; largest >= 1; --largest)
      for (auto& rest : parts[k - largest])
        if (rest.empty() || rest.front() <= largest) {
          std::vector<int> p{largest};
          p.insert(p.end(), rest.begin(), rest.end());
          parts[k].push_back(std::move(p));
        }
  return parts;
}

}  // namespace

std::vector<MonodromyClass> classify_glr_statement(int n, const std::vector<Rational>& labels) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "rank must be >= 1");
  std::set<Rational> seen;
  for (auto& lam : labels) {
    if (lam < Rational(0) || !(lam < Rational(1)))
      fail(ErrorCode::InvalidArgument, "label outside [0,1)");
    if (!seen.insert(lam).second)
      fail(ErrorCode::InvalidArgument, "duplicate label");
  }
  std::vector<Rational> sorted(seen.begin(), seen.end());
  auto parts = partition_table(n);

  std::vector<MonodromyClass> out;
  std::map<Rational, std::vector<int>> current;
  auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
    if (idx == sorted.size()) {
      if (left == 0) out.push_back(MonodromyClass::jordan(n, current));
      return;
    }
    for (int take = 0; take <= left; ++take) {
      // Last label must absorb the remainder.
      if (idx + 1 == sorted.size() && take != left) continue;
      for (auto& p : parts[take]) {
        if (!p.empty()) current[sorted[idx]] = p;
        self(self, idx + 1, left - take);
        current.erase(sorted[idx]);
      }
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace invdmod
