#include "invdmod/torusconn.hpp"

#include <algorithm>

namespace invdmod {

ConstantTorusConnection::ConstantTorusConnection(int l_, int n_, std::vector<RatMat> ms)
    : l(l_), n(n_), matrices(std::move(ms)) {
  if (l < 0) fail(ErrorCode::InvalidArgument, "torus dimension must be >= 0");
  if (n < 1) fail(ErrorCode::InvalidArgument, "rank must be >= 1");
  if ((int)matrices.size() != l)
    fail(ErrorCode::DimensionMismatch, "expected one coefficient matrix per torus factor");
  for (auto& m : matrices)
    if (m.rows() != n || m.cols() != n)
      fail(ErrorCode::DimensionMismatch, "coefficient matrix has wrong shape");
}

FlatnessReport check_flat(const ConstantTorusConnection& c) {
  for (int i = 0; i < c.l; ++i)
    for (int j = i + 1; j < c.l; ++j)
      if (!commutator(c.matrices[i], c.matrices[j]).is_zero())
        return FlatnessReport{false, i, j};
  return FlatnessReport{};
}

MonodromyClass MonodromyClass::jordan(int n, std::map<Rational, std::vector<int>> blocks) {
  MonodromyClass m;
  m.l_ = 1;
  m.n_ = n;
  for (auto& [lam, sizes] : blocks) {
    if (lam < Rational(0) || !(lam < Rational(1)))
      fail(ErrorCode::InvalidArgument, "eigenvalue label outside [0,1)");
    auto s = sizes;
    std::sort(s.begin(), s.end(), std::greater<int>());
    if (!s.empty()) m.blocks_[lam] = s;
  }
  long long total = 0;
  for (auto& [lam, sizes] : m.blocks_)
    for (int s : sizes) total += s;
  if (total != n) fail(ErrorCode::InvalidArgument, "block sizes do not sum to rank");
  return m;
}

MonodromyClass MonodromyClass::semisimple(int l, int n,
                                          std::map<std::vector<Rational>, long long> eigs) {
  if (l == 1) fail(ErrorCode::InvalidArgument, "use the Jordan form for a 1-torus");
  MonodromyClass m;
  m.l_ = l;
  m.n_ = n;
  long long total = 0;
  for (auto& [tup, mult] : eigs) {
    if ((int)tup.size() != l)
      fail(ErrorCode::DimensionMismatch, "eigenvalue tuple has wrong length");
    for (auto& x : tup)
      if (x < Rational(0) || !(x < Rational(1)))
        fail(ErrorCode::InvalidArgument, "eigenvalue label outside [0,1)");
    if (mult <= 0) fail(ErrorCode::InvalidArgument, "multiplicity must be positive");
    m.eigs_[tup] = mult;
    total += mult;
  }
  if (total != n) fail(ErrorCode::InvalidArgument, "multiplicities do not sum to rank");
  return m;
}

MonodromyClass MonodromyClass::rank_only(long long n) {
  MonodromyClass m;
  m.l_ = 0;
  m.n_ = n;
  if (n > 0) m.eigs_[{}] = n;
  return m;
}

bool MonodromyClass::is_semisimple() const {
  if (l_ != 1) return true;
  for (auto& [lam, sizes] : blocks_)
    for (int s : sizes)
      if (s != 1) return false;
  return true;
}

bool operator<(const MonodromyClass& a, const MonodromyClass& b) {
  if (a.l_ != b.l_) return a.l_ < b.l_;
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.blocks_ != b.blocks_) return a.blocks_ < b.blocks_;
  return a.eigs_ < b.eigs_;
}

namespace {

// Eigenvalues with algebraic multiplicities; IrrationalSpectrum unless the
// characteristic polynomial splits over the rationals.
std::vector<std::pair<Rational, int>> rational_spectrum(const RatMat& m) {
  RationalRoots rr = rational_roots(char_poly(m));
  if (!rr.splits)
    fail(ErrorCode::IrrationalSpectrum,
         "characteristic polynomial does not split over the rationals");
  return rr.roots;
}

// Joint eigenspace refinement for a commuting, individually diagonalizable
// family restricted to the column span of basis (n x m, full column rank).
void refine(const std::vector<RatMat>& mats, std::size_t idx, const RatMat& basis,
            std::vector<Rational>& prefix,
            std::map<std::vector<Rational>, long long>& out) {
  if (idx == mats.size()) {
    std::vector<Rational> label;
    for (auto& lam : prefix) label.push_back(lam.mod1());
    out[label] += basis.cols();
    return;
  }
  // Restriction r of mats[idx] to the invariant subspace: basis * r = m * basis.
  auto restricted = solve(basis, mats[idx] * basis);
  if (!restricted)
    fail(ErrorCode::NotFlat, "subspace not invariant; coefficients do not commute");
  int dim = basis.cols();
  int found = 0;
  for (auto& [lam, mult] : rational_spectrum(*restricted)) {
    RatMat shifted = *restricted - RatMat::identity(dim) * lam;
    RatMat ker = nullspace_basis(shifted);
    if (ker.cols() != mult)
      fail(ErrorCode::NonSemisimpleTuple, "tuple is not simultaneously diagonalizable");
    found += ker.cols();
    prefix.push_back(lam);
    refine(mats, idx + 1, basis * ker, prefix, out);
    prefix.pop_back();
  }
  if (found != dim)
    fail(ErrorCode::NonSemisimpleTuple, "tuple is not simultaneously diagonalizable");
}

}  // namespace

MonodromyClass monodromy_class(const ConstantTorusConnection& c) {
  FlatnessReport flat = check_flat(c);
  if (!flat.ok)
    fail(ErrorCode::NotFlat, "coefficient matrices " + std::to_string(flat.i) + " and " +
                                 std::to_string(flat.j) + " do not commute");
  if (c.l == 0) return MonodromyClass::rank_only(c.n);

  if (c.l == 1) {
    const RatMat& a = c.matrices[0];
    std::map<Rational, std::vector<int>> pooled;
    for (auto& [lam, mult] : rational_spectrum(a)) {
      std::vector<int> blocks = jordan_blocks_at(a, lam, mult);
      auto& dst = pooled[lam.mod1()];
      dst.insert(dst.end(), blocks.begin(), blocks.end());
    }
    return MonodromyClass::jordan(c.n, std::move(pooled));
  }

  std::map<std::vector<Rational>, long long> eigs;
  std::vector<Rational> prefix;
  refine(c.matrices, 0, RatMat::identity(c.n), prefix, eigs);
  return MonodromyClass::semisimple(c.l, c.n, std::move(eigs));
}

Equivalence equivalent(const ConstantTorusConnection& a, const ConstantTorusConnection& b) {
  if (a.l != b.l || a.n != b.n)
    fail(ErrorCode::DimensionMismatch, "connections live on different tori or ranks");
  try {
    return monodromy_class(a) == monodromy_class(b) ? Equivalence::True : Equivalence::False;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NonSemisimpleTuple) return Equivalence::Undecided;
    throw;
  }
}

GaugeReport verify_gauge(const LaurentMatrix& x, const ConstantTorusConnection& alpha,
                         const ConstantTorusConnection& beta) {
  if (alpha.l != 1 || beta.l != 1)
    fail(ErrorCode::DimensionMismatch, "gauge verification is defined on the 1-torus");
  if (alpha.n != beta.n || x.n() != alpha.n)
    fail(ErrorCode::DimensionMismatch, "gauge matrix shape mismatch");
  LaurentMatrix lhs = x.euler_derivative();
  LaurentMatrix rhs = x * LaurentMatrix::from_constant(alpha.matrices[0]) -
                      LaurentMatrix::from_constant(beta.matrices[0]) * x;
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) {
      LaurentPoly diff = lhs.at(i, j) - rhs.at(i, j);
      if (!diff.is_zero()) return GaugeReport{false, i, j, diff.str()};
    }
  return GaugeReport{};
}

GaugeResult apply_gauge(const LaurentMatrix& x, const ConstantTorusConnection& alpha) {
  if (alpha.l != 1)
    fail(ErrorCode::DimensionMismatch, "gauge transport is defined on the 1-torus");
  if (x.n() != alpha.n)
    fail(ErrorCode::DimensionMismatch, "gauge matrix shape mismatch");
  auto inv = x.unit_inverse();
  if (!inv)
    fail(ErrorCode::NonUnitDeterminant,
         "gauge determinant is not a unit of the Laurent ring");
  LaurentMatrix coeff =
      *inv * x.euler_derivative() + *inv * LaurentMatrix::from_constant(alpha.matrices[0]) * x;
  GaugeResult r;
  r.constant = coeff.is_constant();
  if (r.constant)
    r.connection = ConstantTorusConnection(1, alpha.n, {coeff.constant_part()});
  r.coefficient = std::move(coeff);
  return r;
}

}  // namespace invdmod
