#include "invdmod/cli.hpp"

#include <CLI11.hpp>

#include "invdmod/json_io.hpp"

namespace invdmod {

namespace {

struct Request {
  std::string command;
  std::vector<std::string> center_types;
  std::string group_file, rep_file, a_file, b_file, class_file, x_file;
  std::string alpha_file, beta_file, algebra;
  int rank = 1;
  int r = 1;
};

Json report_ok(Json result) {
  return Json{{"ok", true}, {"result", std::move(result)}};
}

Json run_center(const Request& q) {
  std::vector<CartanType> types;
  for (auto& tok : q.center_types) types.push_back(parse_cartan_type_token(tok));
  return report_ok(group_to_json(center_of_sc(types)));
}

Json run_classify(const Request& q) {
  SemisimpleGroup g = json_to_semisimple_group(load_json_file(q.group_file), "$");
  auto classes = classify_semisimple(g, q.rank);
  Json arr = Json::array();
  for (auto& c : classes) arr.push_back(rep_class_to_json(c));
  return report_ok(Json{{"count", (long long)classes.size()}, {"classes", std::move(arr)}});
}

Json run_equiv(const Request& q) {
  auto a = json_to_connection(load_json_file(q.a_file), "$");
  auto b = json_to_connection(load_json_file(q.b_file), "$");
  Equivalence e = equivalent(a, b);
  Json r;
  if (e == Equivalence::Undecided) r = nullptr;
  else r = (e == Equivalence::True);
  return report_ok(Json{{"equivalent", std::move(r)}});
}

Json run_glr_equiv(const Request& q) {
  auto a = json_to_glr_spec(load_json_file(q.a_file), "$");
  auto b = json_to_glr_spec(load_json_file(q.b_file), "$");
  return report_ok(Json{{"equivalent", glr_equivalent(a, b)}});
}

Json run_cohomology(const Request& q) {
  SemisimpleGroup g = json_to_semisimple_group(load_json_file(q.group_file), "$");
  RepClass v = json_to_rep_class(load_json_file(q.rep_file), "$");
  PoincarePolynomial p = poincare(g);
  Json dmod = Json::array(), local = Json::array();
  for (int i = 0; i <= p.top_degree(); ++i) {
    dmod.push_back(dmod_betti(g, v, i));
    local.push_back(local_system_betti(g, v, i));
  }
  MonodromyFactorization mf = monodromy_factors_through(g, v);
  return report_ok(Json{{"poincare", p.coeffs},
                        {"invariants_dim", invariants_dim(v)},
                        {"dmod_betti", std::move(dmod)},
                        {"local_system_betti", std::move(local)},
                        {"monodromy_image_order", mf.image_order}});
}

Json run_tensor(const Request& q) {
  auto a = json_to_rep_class(load_json_file(q.a_file), "$");
  auto b = json_to_rep_class(load_json_file(q.b_file), "$");
  return report_ok(rep_class_to_json(tensor(a, b)));
}

Json run_mu_der(const Request& q) {
  ReductiveClass c = json_to_reductive_class(load_json_file(q.class_file), "$");
  return report_ok(Json{{"mu_der", rep_class_to_json(mu_der(c))},
                        {"in_ab_image", in_ab_image(c)}});
}

Json run_verify_mc(const Request& q) {
  SymbolicCheckReport rep = maurer_cartan_check(q.r);
  Json res{{"check", "maurer_cartan"}, {"r", q.r}, {"ok", rep.ok}};
  if (!rep.ok) res["detail"] = rep.detail;
  return report_ok(std::move(res));
}

Json run_verify_tracedet(const Request& q) {
  SymbolicCheckReport rep = trace_dlogdet_check(q.r);
  Json res{{"check", "trace_dlogdet"}, {"r", q.r}, {"ok", rep.ok}};
  if (!rep.ok) res["detail"] = rep.detail;
  return report_ok(std::move(res));
}

Json run_verify_gauge(const Request& q) {
  LaurentMatrix x = json_to_laurent_matrix(load_json_file(q.x_file), "$");
  auto alpha = json_to_connection(load_json_file(q.alpha_file), "$");
  auto beta = json_to_connection(load_json_file(q.beta_file), "$");
  GaugeReport rep = verify_gauge(x, alpha, beta);
  Json res{{"check", "gauge"}, {"ok", rep.ok}};
  if (!rep.ok) {
    res["entry"] = Json::array({rep.i, rep.j});
    res["residual"] = rep.residual;
  }
  return report_ok(std::move(res));
}

Json run_verify_liehom(const Request& q) {
  BuiltinAlgebra alg = builtin_algebra(q.algebra);
  LinearRep rep = json_to_linear_rep(load_json_file(q.rep_file), "$");
  LieHomReport hr = is_lie_hom(alg.presentation, rep);
  Json res{{"check", "liehom"}, {"ok", hr.ok}};
  if (!hr.ok) {
    res["pair"] = Json::array({hr.i, hr.j});
    res["detail"] = hr.detail;
  }
  return report_ok(std::move(res));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"classification toolkit for invariant algebraic differential modules "
               "on reductive groups"};
  app.require_subcommand(1);
  Request q;

  auto* center = app.add_subcommand("center", "center of the simply connected group");
  center->add_option("types", q.center_types, "simple type tokens, e.g. A1 D4 E8")
      ->required()
      ->expected(-1);

  auto* classify = app.add_subcommand("classify", "rank-n classes over a semisimple group");
  classify->add_option("--group", q.group_file, "semisimple group JSON file")->required();
  classify->add_option("--rank", q.rank, "connection rank")->required();

  auto* equiv = app.add_subcommand("equiv", "gauge equivalence of torus connections");
  equiv->add_option("--a", q.a_file, "connection JSON file")->required();
  equiv->add_option("--b", q.b_file, "connection JSON file")->required();

  auto* glr = app.add_subcommand("glr-equiv", "equivalence of invariant GL_r connection data");
  glr->add_option("--a", q.a_file, "connection datum JSON file")->required();
  glr->add_option("--b", q.b_file, "connection datum JSON file")->required();

  auto* coh = app.add_subcommand("cohomology", "de Rham cohomology of a class");
  coh->add_option("--group", q.group_file, "semisimple group JSON file")->required();
  coh->add_option("--rep", q.rep_file, "character multiset JSON file")->required();

  auto* tens = app.add_subcommand("tensor", "tensor product of character multisets");
  tens->add_option("--a", q.a_file, "class JSON file")->required();
  tens->add_option("--b", q.b_file, "class JSON file")->required();

  auto* mu = app.add_subcommand("mu-der", "derived-part obstruction of a reductive class");
  mu->add_option("--class", q.class_file, "reductive class JSON file")->required();

  auto* verify = app.add_subcommand("verify", "exact symbolic and witness checks");
  verify->require_subcommand(1);
  auto* mc = verify->add_subcommand("mc", "flatness of the left-invariant matrix form");
  mc->add_option("--r", q.r, "matrix size (1..3)")->required();
  auto* td = verify->add_subcommand("tracedet", "d(det)/det equals the form trace");
  td->add_option("--r", q.r, "matrix size (1..3)")->required();
  auto* vg = verify->add_subcommand("gauge", "check a gauge witness between two connections");
  vg->add_option("--x", q.x_file, "gauge matrix JSON file")->required();
  vg->add_option("--alpha", q.alpha_file, "source connection JSON file")->required();
  vg->add_option("--beta", q.beta_file, "target connection JSON file")->required();
  auto* lh = verify->add_subcommand("liehom", "bracket compatibility of a candidate rep");
  lh->add_option("--algebra", q.algebra, "builtin algebra token, e.g. sl_2")->required();
  lh->add_option("--rep", q.rep_file, "representation JSON file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    Json err{{"ok", false},
             {"error", Json{{"code", "MalformedInput"}, {"message", e.what()}}}};
    out << err.dump() << "\n";
    return 2;
  }

  try {
    Json result;
    if (*center) result = run_center(q);
    else if (*classify) result = run_classify(q);
    else if (*equiv) result = run_equiv(q);
    else if (*glr) result = run_glr_equiv(q);
    else if (*coh) result = run_cohomology(q);
    else if (*tens) result = run_tensor(q);
    else if (*mu) result = run_mu_der(q);
    else if (*verify) {
      if (*mc) result = run_verify_mc(q);
      else if (*td) result = run_verify_tracedet(q);
      else if (*vg) result = run_verify_gauge(q);
      else result = run_verify_liehom(q);
    }
    out << result.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    Json err{{"ok", false},
             {"error", Json{{"code", to_string(e.code())}, {"message", e.what()}}}};
    out << err.dump() << "\n";
    return e.code() == ErrorCode::MalformedInput ? 2 : 1;
  } catch (const std::exception& e) {
    Json err{{"ok", false},
             {"error", Json{{"code", "Internal"}, {"message", e.what()}}}};
    out << err.dump() << "\n";
    return 1;
  }
}

}  // namespace invdmod
