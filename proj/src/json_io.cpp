#include "invdmod/json_io.hpp"

#include <fstream>
#include <sstream>

namespace invdmod {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::MalformedInput, "at " + path + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(path, std::string("missing field \"") + name + "\"");
  return *it;
}

long long to_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long long>();
}

void expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
}

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

Rational json_to_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad(path, "expected a rational as \"p/q\" string or integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

RatMat json_to_ratmat(const Json& j, const std::string& path) {
  expect_array(j, path);
  int rows = (int)j.size();
  int cols = rows > 0 ? (int)j[0].size() : 0;
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    expect_array(j[i], idx(path, i));
    if ((int)j[i].size() != cols) bad(idx(path, i), "ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = json_to_rational(j[i][c], idx(idx(path, i), c));
  }
  return m;
}

CartanType json_to_cartan_type(const Json& j, const std::string& path) {
  const Json& s = field(j, "series", path);
  if (!s.is_string() || s.get<std::string>().size() != 1)
    bad(path + ".series", "expected a one-letter series");
  CartanType t{s.get<std::string>()[0], (int)to_int(field(j, "rank", path), path + ".rank")};
  try {
    validate_type(t);
  } catch (const Error& e) {
    bad(path, e.what());
  }
  return t;
}

FiniteAbelianGroup json_to_group(const Json& j, const std::string& path) {
  const Json& f = field(j, "invariant_factors", path);
  expect_array(f, path + ".invariant_factors");
  std::vector<long long> factors;
  for (std::size_t i = 0; i < f.size(); ++i)
    factors.push_back(to_int(f[i], idx(path + ".invariant_factors", i)));
  try {
    return FiniteAbelianGroup(std::move(factors));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

SubgroupSpec json_to_subgroup_spec(const Json& j, const std::string& path) {
  const Json& g = field(j, "generators", path);
  expect_array(g, path + ".generators");
  SubgroupSpec spec;
  for (std::size_t i = 0; i < g.size(); ++i) {
    expect_array(g[i], idx(path + ".generators", i));
    FiniteAbelianGroup::Element e;
    for (std::size_t c = 0; c < g[i].size(); ++c)
      e.push_back(to_int(g[i][c], idx(idx(path + ".generators", i), c)));
    spec.generators.push_back(std::move(e));
  }
  return spec;
}

SemisimpleGroup json_to_semisimple_group(const Json& j, const std::string& path) {
  const Json& f = field(j, "factors", path);
  expect_array(f, path + ".factors");
  std::vector<CartanType> factors;
  for (std::size_t i = 0; i < f.size(); ++i)
    factors.push_back(json_to_cartan_type(f[i], idx(path + ".factors", i)));
  SubgroupSpec gamma = json_to_subgroup_spec(field(j, "gamma", path), path + ".gamma");
  try {
    return SemisimpleGroup(std::move(factors), gamma);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedInput || e.code() == ErrorCode::DimensionMismatch)
      bad(path, e.what());
    throw;
  }
}

RepClass json_to_rep_class(const Json& j, const std::string& path) {
  FiniteAbelianGroup g = json_to_group(field(j, "group", path), path + ".group");
  const Json& es = field(j, "entries", path);
  expect_array(es, path + ".entries");
  std::vector<RepClass::Entry> entries;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string p = idx(path + ".entries", i);
    const Json& ch = field(es[i], "character", p);
    const Json& res = field(ch, "residues", p + ".character");
    expect_array(res, p + ".character.residues");
    Character c;
    for (std::size_t k = 0; k < res.size(); ++k)
      c.residues.push_back(to_int(res[k], idx(p + ".character.residues", k)));
    long long mult = to_int(field(es[i], "mult", p), p + ".mult");
    if (mult < 1) bad(p + ".mult", "multiplicity must be >= 1");
    if ((int)c.residues.size() != g.num_factors())
      bad(p + ".character.residues", "one residue per invariant factor expected");
    entries.push_back({std::move(c), mult});
  }
  return RepClass(std::move(g), std::move(entries));
}

ConstantTorusConnection json_to_connection(const Json& j, const std::string& path) {
  int l = (int)to_int(field(j, "l", path), path + ".l");
  int n = (int)to_int(field(j, "n", path), path + ".n");
  if (l < 1) bad(path + ".l", "torus dimension must be >= 1");
  const Json& ms = field(j, "matrices", path);
  expect_array(ms, path + ".matrices");
  if ((int)ms.size() != l) bad(path + ".matrices", "expected one matrix per torus factor");
  std::vector<RatMat> mats;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    RatMat m = json_to_ratmat(ms[i], idx(path + ".matrices", i));
    if (m.rows() != n || m.cols() != n)
      bad(idx(path + ".matrices", i), "expected an n x n matrix");
    mats.push_back(std::move(m));
  }
  return ConstantTorusConnection(l, n, std::move(mats));
}

LaurentPoly json_to_laurent(const Json& j, const std::string& path) {
  const Json& ts = field(j, "terms", path);
  expect_array(ts, path + ".terms");
  LaurentPoly p;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::string tp = idx(path + ".terms", i);
    long long e = to_int(field(ts[i], "exp", tp), tp + ".exp");
    Rational c = json_to_rational(field(ts[i], "coef", tp), tp + ".coef");
    p = p + LaurentPoly::term(c, e);
  }
  return p;
}

LaurentMatrix json_to_laurent_matrix(const Json& j, const std::string& path) {
  int n = (int)to_int(field(j, "n", path), path + ".n");
  if (n < 1) bad(path + ".n", "size must be >= 1");
  const Json& es = field(j, "entries", path);
  expect_array(es, path + ".entries");
  if ((int)es.size() != n) bad(path + ".entries", "expected n rows");
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) {
    expect_array(es[i], idx(path + ".entries", i));
    if ((int)es[i].size() != n) bad(idx(path + ".entries", i), "expected n columns");
    for (int c = 0; c < n; ++c)
      m.at(i, c) = json_to_laurent(es[i][c], idx(idx(path + ".entries", i), c));
  }
  return m;
}

GlrConnectionSpec json_to_glr_spec(const Json& j, const std::string& path) {
  int r = (int)to_int(field(j, "r", path), path + ".r");
  int n = (int)to_int(field(j, "n", path), path + ".n");
  RatMat a = json_to_ratmat(field(j, "A", path), path + ".A");
  const Json& ks = field(j, "k", path);
  expect_array(ks, path + ".k");
  std::vector<long long> k;
  for (std::size_t i = 0; i < ks.size(); ++i)
    k.push_back(to_int(ks[i], idx(path + ".k", i)));
  try {
    return GlrConnectionSpec(r, n, std::move(a), std::move(k));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

MonodromyClass json_to_monodromy_class(const Json& j, const std::string& path) {
  int l = (int)to_int(field(j, "l", path), path + ".l");
  long long n = to_int(field(j, "n", path), path + ".n");
  try {
    if (l == 1) {
      const Json& bs = field(j, "blocks", path);
      expect_array(bs, path + ".blocks");
      std::map<Rational, std::vector<int>> blocks;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        std::string bp = idx(path + ".blocks", i);
        Rational lam = json_to_rational(field(bs[i], "eigenvalue", bp), bp + ".eigenvalue");
        const Json& sz = field(bs[i], "sizes", bp);
        expect_array(sz, bp + ".sizes");
        std::vector<int> sizes;
        for (std::size_t k = 0; k < sz.size(); ++k) {
          long long s = to_int(sz[k], idx(bp + ".sizes", k));
          if (s < 1) bad(idx(bp + ".sizes", k), "block size must be >= 1");
          sizes.push_back((int)s);
        }
        if (blocks.count(lam)) bad(bp, "duplicate eigenvalue");
        blocks[lam] = std::move(sizes);
      }
      return MonodromyClass::jordan((int)n, std::move(blocks));
    }
    const Json& es = field(j, "eigenvalues", path);
    expect_array(es, path + ".eigenvalues");
    std::map<std::vector<Rational>, long long> eigs;
    for (std::size_t i = 0; i < es.size(); ++i) {
      std::string ep = idx(path + ".eigenvalues", i);
      const Json& tup = field(es[i], "tuple", ep);
      expect_array(tup, ep + ".tuple");
      std::vector<Rational> t;
      for (std::size_t k = 0; k < tup.size(); ++k)
        t.push_back(json_to_rational(tup[k], idx(ep + ".tuple", k)));
      long long mult = to_int(field(es[i], "mult", ep), ep + ".mult");
      if (eigs.count(t)) bad(ep, "duplicate eigenvalue tuple");
      eigs[t] = mult;
    }
    if (l == 0 && es.empty() && n > 0) return MonodromyClass::rank_only(n);
    return MonodromyClass::semisimple(l, (int)n, std::move(eigs));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedInput) throw;
    bad(path, e.what());
  }
}

ReductiveProductGroup json_to_reductive_group(const Json& j, const std::string& path) {
  int l = (int)to_int(field(j, "torus_dim", path), path + ".torus_dim");
  SemisimpleGroup ss = json_to_semisimple_group(field(j, "ss", path), path + ".ss");
  try {
    return ReductiveProductGroup(l, std::move(ss));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

ReductiveClass json_to_reductive_class(const Json& j, const std::string& path) {
  MonodromyClass t =
      json_to_monodromy_class(field(j, "torus_part", path), path + ".torus_part");
  RepClass d = json_to_rep_class(field(j, "derived_part", path), path + ".derived_part");
  try {
    return ReductiveClass(std::move(t), std::move(d));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

LinearRep json_to_linear_rep(const Json& j, const std::string& path) {
  int n = (int)to_int(field(j, "n", path), path + ".n");
  const Json& ms = field(j, "matrices", path);
  expect_array(ms, path + ".matrices");
  std::vector<RatMat> mats;
  for (std::size_t i = 0; i < ms.size(); ++i)
    mats.push_back(json_to_ratmat(ms[i], idx(path + ".matrices", i)));
  try {
    return LinearRep(n, std::move(mats));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json rational_to_json(const Rational& r) { return r.str(); }

Json ratmat_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json cartan_type_to_json(const CartanType& t) {
  return Json{{"series", std::string(1, t.series)}, {"rank", t.rank}};
}

Json group_to_json(const FiniteAbelianGroup& g) {
  return Json{{"invariant_factors", g.invariant_factors()}};
}

Json rep_class_to_json(const RepClass& v) {
  Json entries = Json::array();
  for (auto& e : v.entries())
    entries.push_back(Json{{"character", Json{{"residues", e.character.residues}}},
                           {"mult", e.mult}});
  return Json{{"group", group_to_json(v.group())}, {"entries", std::move(entries)}};
}

Json connection_to_json(const ConstantTorusConnection& c) {
  Json ms = Json::array();
  for (auto& m : c.matrices) ms.push_back(ratmat_to_json(m));
  return Json{{"l", c.l}, {"n", c.n}, {"matrices", std::move(ms)}};
}

Json laurent_to_json(const LaurentPoly& p) {
  Json ts = Json::array();
  for (auto& [e, c] : p.terms()) ts.push_back(Json{{"exp", e}, {"coef", c.str()}});
  return Json{{"terms", std::move(ts)}};
}

Json laurent_matrix_to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(laurent_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()}, {"entries", std::move(rows)}};
}

Json monodromy_class_to_json(const MonodromyClass& m) {
  if (m.is_jordan_form()) {
    Json bs = Json::array();
    for (auto& [lam, sizes] : m.blocks())
      bs.push_back(Json{{"eigenvalue", lam.str()}, {"sizes", sizes}});
    return Json{{"l", m.l()}, {"n", m.n()}, {"blocks", std::move(bs)}};
  }
  Json es = Json::array();
  for (auto& [tup, mult] : m.joint_eigenvalues()) {
    Json t = Json::array();
    for (auto& x : tup) t.push_back(x.str());
    es.push_back(Json{{"tuple", std::move(t)}, {"mult", mult}});
  }
  return Json{{"l", m.l()}, {"n", m.n()}, {"eigenvalues", std::move(es)}};
}

Json reductive_class_to_json(const ReductiveClass& c) {
  return Json{{"torus_part", monodromy_class_to_json(c.torus_part)},
              {"derived_part", rep_class_to_json(c.derived_part)}};
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::MalformedInput,
         origin + ": " + e.what());  // nlohmann message carries the byte position
  }
}

Json load_json_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) fail(ErrorCode::MalformedInput, "cannot open " + filename);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), filename);
}

}  // namespace invdmod
