#include "invdmod/lieverify.hpp"

#include <algorithm>

namespace invdmod {

LieAlgebraPresentation::LieAlgebraPresentation(int dim, std::vector<Rational> c,
                                               std::vector<std::string> basis_names)
    : dim_(dim), c_(std::move(c)), names_(std::move(basis_names)) {
  if (dim < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  if (c_.size() != (std::size_t)dim * dim * dim)
    fail(ErrorCode::DimensionMismatch, "structure constant array has wrong size");
  if (!names_.empty() && (int)names_.size() != dim)
    fail(ErrorCode::DimensionMismatch, "one basis name per basis element expected");

  auto sc = [this](int i, int j, int k) -> const Rational& { return this->c(i, j, k); };
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (sc(i, j, k) != -sc(j, i, k))
          fail(ErrorCode::InvalidArgument,
               "structure constants are not antisymmetric at (" + basis_name(i) + "," +
                   basis_name(j) + ")");

  // Jacobi: [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0.
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          Rational s;
          for (int m = 0; m < dim_; ++m) {
            s += sc(i, j, m) * sc(m, k, l);
            s += sc(j, k, m) * sc(m, i, l);
            s += sc(k, i, m) * sc(m, j, l);
          }
          if (!s.is_zero())
            fail(ErrorCode::InvalidArgument,
                 "Jacobi identity fails at (" + basis_name(i) + "," + basis_name(j) + "," +
                     basis_name(k) + ")");
        }
}

std::string LieAlgebraPresentation::basis_name(int i) const {
  return names_.empty() ? "x" + std::to_string(i + 1) : names_[i];
}

LinearRep::LinearRep(int n_, std::vector<RatMat> ms) : n(n_), matrices(std::move(ms)) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "representation rank must be >= 1");
  for (auto& m : matrices)
    if (m.rows() != n || m.cols() != n)
      fail(ErrorCode::DimensionMismatch, "representation matrix has wrong shape");
}

LieHomReport is_lie_hom(const LieAlgebraPresentation& alg, const LinearRep& rep) {
  if ((int)rep.matrices.size() != alg.dim())
    fail(ErrorCode::DimensionMismatch, "one matrix per basis element expected");
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j) {
      RatMat lhs(rep.n, rep.n);
      for (int k = 0; k < alg.dim(); ++k)
        if (!alg.c(i, j, k).is_zero()) lhs = lhs + rep.matrices[k] * alg.c(i, j, k);
      RatMat rhs = commutator(rep.matrices[i], rep.matrices[j]);
      if (lhs != rhs)
        return LieHomReport{false, i, j,
                            "bracket mismatch at (" + alg.basis_name(i) + "," +
                                alg.basis_name(j) + ")"};
    }
  return LieHomReport{};
}

LinearRep adjoint_rep(const LieAlgebraPresentation& alg) {
  int d = alg.dim();
  std::vector<RatMat> mats;
  for (int i = 0; i < d; ++i) {
    RatMat m(d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) m.at(k, j) = alg.c(i, j, k);
    mats.push_back(std::move(m));
  }
  return LinearRep(d, std::move(mats));
}

namespace {

// Presentation from explicit basis matrices, decomposing each bracket in the
// given basis via an exact linear solve.
LieAlgebraPresentation from_matrices(const std::vector<RatMat>& basis,
                                     std::vector<std::string> names) {
  int d = (int)basis.size();
  int n = basis[0].rows();
  RatMat b(n * n, d);
  for (int t = 0; t < d; ++t)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.at(i * n + j, t) = basis[t].at(i, j);
  std::vector<Rational> c((std::size_t)d * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      RatMat br = commutator(basis[i], basis[j]);
      RatMat rhs(n * n, 1);
      for (int a = 0; a < n; ++a)
        for (int bcol = 0; bcol < n; ++bcol) rhs.at(a * n + bcol, 0) = br.at(a, bcol);
      auto sol = solve(b, rhs);
      if (!sol) fail(ErrorCode::InvalidArgument, "bracket leaves the span of the basis");
      for (int k = 0; k < d; ++k) c[((std::size_t)i * d + j) * d + k] = sol->at(k, 0);
    }
  return LieAlgebraPresentation(d, std::move(c), std::move(names));
}

}  // namespace

BuiltinAlgebra builtin_algebra(const std::string& token) {
  auto bad = [&] {
    fail(ErrorCode::MalformedInput, "unknown algebra token \"" + token + "\"");
  };
  auto parse_size = [&](const std::string& prefix) -> std::optional<int> {
    if (token.rfind(prefix, 0) != 0) return std::nullopt;
    std::string num = token.substr(prefix.size());
    if (num.empty()) bad();
    for (char ch : num)
      if (ch < '0' || ch > '9') bad();
    return std::stoi(num);
  };

  if (auto l = parse_size("abelian_")) {
    if (*l < 1 || *l > 8)
      fail(ErrorCode::UnsupportedSize, "abelian algebras supported up to dimension 8");
    int d = *l;
    return BuiltinAlgebra{LieAlgebraPresentation(d, std::vector<Rational>((std::size_t)d * d * d)),
                          {}};
  }
  if (auto r = parse_size("gl_")) {
    if (*r < 1 || *r > 4)
      fail(ErrorCode::UnsupportedSize, "gl_r supported up to r = 4");
    int n = *r;
    std::vector<RatMat> basis;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RatMat e(n, n);
        e.at(i, j) = Rational(1);
        basis.push_back(std::move(e));
        names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    auto pres = from_matrices(basis, names);
    return BuiltinAlgebra{std::move(pres), std::move(basis)};
  }
  if (auto r = parse_size("sl_")) {
    if (*r < 2 || *r > 4)
      fail(ErrorCode::UnsupportedSize, "sl_r supported for r = 2..4");
    int n = *r;
    std::vector<RatMat> basis;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        RatMat e(n, n);
        e.at(i, j) = Rational(1);
        basis.push_back(std::move(e));
        names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    for (int i = 0; i + 1 < n; ++i) {
      RatMat h(n, n);
      h.at(i, i) = Rational(1);
      h.at(i + 1, i + 1) = Rational(-1);
      basis.push_back(std::move(h));
      names.push_back("H" + std::to_string(i + 1));
    }
    auto pres = from_matrices(basis, names);
    return BuiltinAlgebra{std::move(pres), std::move(basis)};
  }
  bad();
  return BuiltinAlgebra{LieAlgebraPresentation(0, {}), {}};  // unreachable
}

namespace {

void check_size(int r) {
  if (r < 1 || r > 3)
    fail(ErrorCode::UnsupportedSize, "symbolic checks supported for r = 1..3");
}

// theta = g^{-1} dg as a matrix of 1-forms: theta(i,j) = sum_k adj(i,k)/det dx_kj.
std::vector<std::vector<OneForm>> maurer_cartan_form(const MatrixFormContext& ctx) {
  int r = ctx.r();
  std::vector<std::vector<OneForm>> theta(r, std::vector<OneForm>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        DetFrac c{ctx.adj(i, k), 1};
        if (!c.is_zero())
          theta[i][j] = one_add(ctx, theta[i][j], OneForm{{ctx.var(k, j), c}});
      }
  return theta;
}

}  // namespace

SymbolicCheckReport maurer_cartan_check(int r) {
  check_size(r);
  MatrixFormContext ctx(r);
  auto theta = maurer_cartan_form(ctx);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      TwoForm total = d1(ctx, theta[i][j]);
      for (int k = 0; k < r; ++k)
        total = two_add(ctx, total, wedge11(ctx, theta[i][k], theta[k][j]));
      if (!two_is_zero(total))
        return SymbolicCheckReport{false, i, j,
                                   "d theta + theta^theta has a nonzero entry at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
    }
  return SymbolicCheckReport{};
}

SymbolicCheckReport trace_dlogdet_check(int r) {
  check_size(r);
  MatrixFormContext ctx(r);
  auto theta = maurer_cartan_form(ctx);
  OneForm trace;
  for (int i = 0; i < r; ++i) trace = one_add(ctx, trace, theta[i][i]);
  // d(det)/det has coefficient (d det/d x_v)/det on dx_v.
  OneForm dlogdet;
  for (int v = 0; v < ctx.nvars(); ++v) {
    DetFrac c{ctx.ddet(v), 1};
    if (!c.is_zero()) dlogdet[v] = c;
  }
  // Compare coefficient by coefficient.
  for (int v = 0; v < ctx.nvars(); ++v) {
    DetFrac a = dlogdet.count(v) ? dlogdet.at(v) : DetFrac{Poly(ctx.nvars()), 0};
    DetFrac b = trace.count(v) ? trace.at(v) : DetFrac{Poly(ctx.nvars()), 0};
    if (!df_equal(ctx, a, b))
      return SymbolicCheckReport{false, -1, -1,
                                 "coefficient of d" + ctx.var_name(v) + " differs"};
  }
  return SymbolicCheckReport{};
}

}  // namespace invdmod
