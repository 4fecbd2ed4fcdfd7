#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invdmod/json_io.hpp"

namespace py = pybind11;
using namespace invdmod;

namespace {

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
  if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
  fail(ErrorCode::MalformedInput, "expected an int or a \"p/q\" string");
}

RatMat to_ratmat(const std::vector<std::vector<py::object>>& rows) {
  int r = (int)rows.size();
  int c = r > 0 ? (int)rows[0].size() : 0;
  RatMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if ((int)rows[i].size() != c)
      fail(ErrorCode::MalformedInput, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = to_rational(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> from_ratmat(const RatMat& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j).str());
  return rows;
}

std::vector<CartanType> to_types(const std::vector<std::string>& tokens) {
  std::vector<CartanType> ts;
  for (auto& t : tokens) ts.push_back(parse_cartan_type_token(t));
  return ts;
}

ConstantTorusConnection make_connection(int l, int n,
                                        const std::vector<std::vector<std::vector<py::object>>>& ms) {
  std::vector<RatMat> mats;
  for (auto& m : ms) mats.push_back(to_ratmat(m));
  return ConstantTorusConnection(l, n, std::move(mats));
}

LaurentMatrix make_laurent_matrix(
    const std::vector<std::vector<std::vector<std::pair<long long, py::object>>>>& entries) {
  int n = (int)entries.size();
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if ((int)entries[i].size() != n)
      fail(ErrorCode::MalformedInput, "ragged matrix rows");
    for (int j = 0; j < n; ++j) {
      LaurentPoly p;
      for (auto& [e, c] : entries[i][j]) p = p + LaurentPoly::term(to_rational(c), e);
      m.at(i, j) = p;
    }
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "classification of invariant algebraic differential modules on "
            "reductive groups (exact arithmetic core)";

  py::register_exception<Error>(m, "InvdmodError");

  py::class_<CartanType>(m, "CartanType")
      .def(py::init([](const std::string& tok) { return parse_cartan_type_token(tok); }),
           py::arg("token"))
      .def_readonly("series", &CartanType::series)
      .def_readonly("rank", &CartanType::rank)
      .def("__repr__", [](const CartanType& t) { return "CartanType('" + t.str() + "')"; })
      .def("__eq__", [](const CartanType& a, const CartanType& b) { return a == b; });

  py::class_<FiniteAbelianGroup>(m, "FiniteAbelianGroup")
      .def(py::init<std::vector<long long>>(), py::arg("invariant_factors"))
      .def_property_readonly("invariant_factors", &FiniteAbelianGroup::invariant_factors)
      .def_property_readonly("order", &FiniteAbelianGroup::order)
      .def("elements", [](const FiniteAbelianGroup& g) { return g.elements(); })
      .def("__eq__", [](const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a == b; })
      .def("__repr__", [](const FiniteAbelianGroup& g) {
        return group_to_json(g).dump();
      });

  py::class_<Subgroup>(m, "Subgroup")
      .def_readonly("group", &Subgroup::group)
      .def_readonly("ambient", &Subgroup::ambient)
      .def_readonly("generators", &Subgroup::generators);

  py::class_<SemisimpleGroup>(m, "SemisimpleGroup")
      .def(py::init([](const std::vector<std::string>& tokens,
                       const std::vector<std::vector<long long>>& gens) {
             return SemisimpleGroup(to_types(tokens), SubgroupSpec{gens});
           }),
           py::arg("factors"), py::arg("gamma_generators") = std::vector<std::vector<long long>>{})
      .def_property_readonly("gamma", &SemisimpleGroup::gamma)
      .def_property_readonly("center", &SemisimpleGroup::center)
      .def_property_readonly("rank", &SemisimpleGroup::rank);

  py::class_<Character>(m, "Character")
      .def(py::init([](std::vector<long long> rs) { return Character{std::move(rs)}; }),
           py::arg("residues"))
      .def_readonly("residues", &Character::residues)
      .def("__eq__", [](const Character& a, const Character& b) { return a == b; })
      .def("__repr__", [](const Character& c) {
        return Json{{"residues", c.residues}}.dump();
      });

  py::class_<RepClass>(m, "RepClass")
      .def(py::init([](const FiniteAbelianGroup& g,
                       const std::vector<std::pair<std::vector<long long>, long long>>& es) {
             std::vector<RepClass::Entry> entries;
             for (auto& [r, mult] : es) entries.push_back({Character{r}, mult});
             return RepClass(g, std::move(entries));
           }),
           py::arg("group"), py::arg("entries"))
      .def_property_readonly("group", &RepClass::group)
      .def_property_readonly("rank", &RepClass::rank)
      .def_property_readonly("entries", [](const RepClass& v) {
        std::vector<std::pair<std::vector<long long>, long long>> out;
        for (auto& e : v.entries()) out.push_back({e.character.residues, e.mult});
        return out;
      })
      .def("to_json", [](const RepClass& v) { return rep_class_to_json(v).dump(); })
      .def("__eq__", [](const RepClass& a, const RepClass& b) { return a == b; })
      .def("__repr__", [](const RepClass& v) { return rep_class_to_json(v).dump(); });

  py::class_<ConstantTorusConnection>(m, "ConstantTorusConnection")
      .def(py::init(&make_connection), py::arg("l"), py::arg("n"), py::arg("matrices"))
      .def_readonly("l", &ConstantTorusConnection::l)
      .def_readonly("n", &ConstantTorusConnection::n)
      .def_property_readonly("matrices", [](const ConstantTorusConnection& c) {
        std::vector<std::vector<std::vector<std::string>>> out;
        for (auto& m : c.matrices) out.push_back(from_ratmat(m));
        return out;
      })
      .def("__repr__", [](const ConstantTorusConnection& c) {
        return connection_to_json(c).dump();
      });

  py::class_<MonodromyClass>(m, "MonodromyClass")
      .def("to_json", [](const MonodromyClass& c) { return monodromy_class_to_json(c).dump(); })
      .def_property_readonly("l", &MonodromyClass::l)
      .def_property_readonly("n", &MonodromyClass::n)
      .def_property_readonly("semisimple", &MonodromyClass::is_semisimple)
      .def("__eq__", [](const MonodromyClass& a, const MonodromyClass& b) { return a == b; })
      .def("__repr__", [](const MonodromyClass& c) {
        return monodromy_class_to_json(c).dump();
      });

  py::class_<LaurentMatrix>(m, "LaurentMatrix")
      .def(py::init(&make_laurent_matrix), py::arg("entries"),
           "entries[i][j] is a list of (exponent, coefficient) pairs")
      .def("__repr__", [](const LaurentMatrix& x) { return laurent_matrix_to_json(x).dump(); });

  py::class_<GlrConnectionSpec>(m, "GlrConnectionSpec")
      .def(py::init([](int r, int n, const std::vector<std::vector<py::object>>& a,
                       std::vector<long long> k) {
             return GlrConnectionSpec(r, n, to_ratmat(a), std::move(k));
           }),
           py::arg("r"), py::arg("n"), py::arg("a"), py::arg("k"))
      .def_readonly("r", &GlrConnectionSpec::r)
      .def_readonly("n", &GlrConnectionSpec::n);

  py::class_<ReductiveProductGroup>(m, "ReductiveProductGroup")
      .def(py::init<int, SemisimpleGroup>(), py::arg("torus_dim"), py::arg("ss"))
      .def_readonly("torus_dim", &ReductiveProductGroup::torus_dim)
      .def_readonly("ss", &ReductiveProductGroup::ss);

  py::class_<ReductiveClass>(m, "ReductiveClass")
      .def_readonly("torus_part", &ReductiveClass::torus_part)
      .def_readonly("derived_part", &ReductiveClass::derived_part)
      .def("__eq__", [](const ReductiveClass& a, const ReductiveClass& b) { return a == b; })
      .def("__repr__", [](const ReductiveClass& c) {
        return reductive_class_to_json(c).dump();
      });

  py::class_<LieAlgebraPresentation>(m, "LieAlgebraPresentation")
      .def_property_readonly("dim", &LieAlgebraPresentation::dim)
      .def("structure_constant", [](const LieAlgebraPresentation& a, int i, int j, int k) {
        return a.c(i, j, k).str();
      })
      .def_property_readonly("basis_names", [](const LieAlgebraPresentation& a) {
        std::vector<std::string> names;
        for (int i = 0; i < a.dim(); ++i) names.push_back(a.basis_name(i));
        return names;
      });

  // Root data and centers.
  m.def("cartan_matrix", [](const std::string& token) {
    IntMat c = cartan_matrix(parse_cartan_type_token(token));
    std::vector<std::vector<long long>> rows(c.rows());
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) rows[i].push_back(c.at(i, j));
    return rows;
  }, py::arg("type"));
  m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& rows) {
    int r = (int)rows.size(), c = r > 0 ? (int)rows[0].size() : 0;
    IntMat mm(r, c);
    for (int i = 0; i < r; ++i) {
      if ((int)rows[i].size() != c) fail(ErrorCode::MalformedInput, "ragged matrix rows");
      for (int j = 0; j < c; ++j) mm.at(i, j) = rows[i][j];
    }
    SmithDecomposition s = smith_normal_form(mm);
    auto dump = [](const IntMat& x) {
      std::vector<std::vector<long long>> out(x.rows());
      for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) out[i].push_back(x.at(i, j));
      return out;
    };
    return py::make_tuple(dump(s.d), dump(s.u), dump(s.v));
  }, py::arg("m"));
  m.def("center_of_sc", [](const std::vector<std::string>& tokens) {
    return center_of_sc(to_types(tokens));
  }, py::arg("types"));
  m.def("subgroup", [](const FiniteAbelianGroup& ambient,
                       const std::vector<std::vector<long long>>& gens) {
    return subgroup(ambient, SubgroupSpec{gens});
  }, py::arg("ambient"), py::arg("generators"));

  // Character multisets.
  m.def("characters", &characters, py::arg("group"));
  m.def("classify_semisimple",
        [](const SemisimpleGroup& g, int n) { return classify_semisimple(g, n); },
        py::arg("group"), py::arg("rank"));
  m.def("count_classes", &count_classes, py::arg("gamma"), py::arg("rank"));
  m.def("trivial_rep", &trivial_rep, py::arg("group"), py::arg("rank"));
  m.def("invariants_dim", &invariants_dim, py::arg("v"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("dual", &dual, py::arg("v"));
  m.def("hom_dim", &hom_dim, py::arg("a"), py::arg("b"));

  // Torus connections.
  m.def("check_flat", [](const ConstantTorusConnection& c) {
    FlatnessReport r = check_flat(c);
    return py::make_tuple(r.ok, r.i, r.j);
  }, py::arg("connection"));
  m.def("monodromy_class", &monodromy_class, py::arg("connection"));
  m.def("equivalent", [](const ConstantTorusConnection& a, const ConstantTorusConnection& b)
            -> py::object {
    switch (equivalent(a, b)) {
      case Equivalence::True: return py::bool_(true);
      case Equivalence::False: return py::bool_(false);
      default: return py::none();
    }
  }, py::arg("a"), py::arg("b"));
  m.def("verify_gauge", [](const LaurentMatrix& x, const ConstantTorusConnection& a,
                           const ConstantTorusConnection& b) {
    GaugeReport r = verify_gauge(x, a, b);
    return py::make_tuple(r.ok, r.i, r.j, r.residual);
  }, py::arg("x"), py::arg("alpha"), py::arg("beta"));
  m.def("apply_gauge", [](const LaurentMatrix& x, const ConstantTorusConnection& a) {
    GaugeResult r = apply_gauge(x, a);
    py::object conn = r.connection ? py::cast(*r.connection) : py::none();
    return py::make_tuple(laurent_matrix_to_json(r.coefficient).dump(), r.constant, conn);
  }, py::arg("x"), py::arg("alpha"));

  // Determinant reduction for GL_r.
  m.def("scalar_form", [](const GlrConnectionSpec& s) { return from_ratmat(scalar_form(s)); },
        py::arg("spec"));
  m.def("reduce_to_gm", &reduce_to_gm, py::arg("spec"));
  m.def("glr_equivalent", &glr_equivalent, py::arg("a"), py::arg("b"));
  m.def("classify_glr_statement", [](int n, const std::vector<py::object>& labels) {
    std::vector<Rational> ls;
    for (auto& x : labels) ls.push_back(to_rational(x));
    return classify_glr_statement(n, ls);
  }, py::arg("rank"), py::arg("labels"));

  // Symbolic checks.
  m.def("builtin_algebra", [](const std::string& token) {
    return builtin_algebra(token).presentation;
  }, py::arg("token"));
  m.def("is_lie_hom", [](const LieAlgebraPresentation& alg,
                         const std::vector<std::vector<std::vector<py::object>>>& mats) {
    std::vector<RatMat> ms;
    for (auto& mm : mats) ms.push_back(to_ratmat(mm));
    int n = ms.empty() ? 1 : ms[0].rows();
    LieHomReport r = is_lie_hom(alg, LinearRep(n, std::move(ms)));
    return py::make_tuple(r.ok, r.i, r.j);
  }, py::arg("algebra"), py::arg("matrices"));
  m.def("maurer_cartan_check", [](int r) {
    SymbolicCheckReport rep = maurer_cartan_check(r);
    return py::make_tuple(rep.ok, rep.detail);
  }, py::arg("r"));
  m.def("trace_dlogdet_check", [](int r) {
    SymbolicCheckReport rep = trace_dlogdet_check(r);
    return py::make_tuple(rep.ok, rep.detail);
  }, py::arg("r"));

  // Reductive products.
  m.def("construct_class", [](const ReductiveProductGroup& g, py::object torus,
                              const RepClass& v) {
    std::optional<ConstantTorusConnection> t;
    if (!torus.is_none()) t = torus.cast<ConstantTorusConnection>();
    return construct_class(g, t, v);
  }, py::arg("group"), py::arg("torus"), py::arg("derived"));
  m.def("mu_der", &mu_der, py::arg("c"));
  m.def("in_ab_image", &in_ab_image, py::arg("c"));
  m.def("ab_pullback", &ab_pullback, py::arg("group"), py::arg("torus_class"));

  // Cohomology.
  m.def("weyl_degrees", [](const std::string& token) {
    return weyl_degrees(parse_cartan_type_token(token)).degrees;
  }, py::arg("type"));
  m.def("weyl_order", [](const std::string& token) {
    return weyl_order(parse_cartan_type_token(token));
  }, py::arg("type"));
  m.def("poincare", [](const std::vector<std::string>& tokens) {
    return poincare(to_types(tokens)).coeffs;
  }, py::arg("factors"));
  m.def("dmod_betti", &dmod_betti, py::arg("group"), py::arg("v"), py::arg("i"));
  m.def("local_system_betti", &local_system_betti, py::arg("group"), py::arg("v"), py::arg("i"));
  m.def("monodromy_factors_through", [](const SemisimpleGroup& g, const RepClass& v) {
    MonodromyFactorization f = monodromy_factors_through(g, v);
    return py::make_tuple(f.gamma, f.rep, f.image_order);
  }, py::arg("group"), py::arg("v"));

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
