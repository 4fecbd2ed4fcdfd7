#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "invdmod/intmat.hpp"
#include "invdmod/rootdata.hpp"
#include "oracles.hpp"

using namespace invdmod;

static IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

TEST_CASE("smith normal form on fixed examples") {
  SUBCASE("already diagonal") {
    auto s = smith_normal_form(from_rows({{2, 0}, {0, 4}}));
    CHECK(s.diagonal() == std::vector<long long>{2, 4});
    CHECK(oracles::valid_smith(from_rows({{2, 0}, {0, 4}}), s));
  }
  SUBCASE("needs divisibility fix") {
    auto m = from_rows({{2, 0}, {0, 3}});
    auto s = smith_normal_form(m);
    CHECK(s.diagonal() == std::vector<long long>{1, 6});
    CHECK(oracles::valid_smith(m, s));
  }
  SUBCASE("rank deficient") {
    auto m = from_rows({{2, 4}, {1, 2}});
    auto s = smith_normal_form(m);
    CHECK(s.diagonal() == std::vector<long long>{1, 0});
    CHECK(oracles::valid_smith(m, s));
  }
  SUBCASE("rectangular") {
    auto m = from_rows({{6, 4, 2}, {4, 4, 0}});
    auto s = smith_normal_form(m);
    CHECK(oracles::valid_smith(m, s));
    CHECK(s.diagonal().size() == 2);
  }
  SUBCASE("negative entries") {
    auto m = from_rows({{-3, 1}, {2, -4}});
    auto s = smith_normal_form(m);
    CHECK(oracles::valid_smith(m, s));
    CHECK(s.diagonal() == std::vector<long long>{1, 10});
  }
}

TEST_CASE("smith normal form randomized against validity oracle") {
  oracles::Rng rng(20341);
  for (int trial = 0; trial < 300; ++trial) {
    int r = (int)rng.uniform(1, 4);
    int c = (int)rng.uniform(1, 4);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rng.uniform(-6, 6);
    auto s = smith_normal_form(m);
    REQUIRE(oracles::valid_smith(m, s));
    if (r == c) {
      long long prod = 1;
      for (long long x : s.diagonal()) prod *= x;
      long long dm = m.det();
      CHECK(prod == (dm < 0 ? -dm : dm));
    }
  }
}

TEST_CASE("cartan matrices match the standard tables") {
  SUBCASE("A2") {
    CHECK(cartan_matrix({'A', 2}) == from_rows({{2, -1}, {-1, 2}}));
  }
  SUBCASE("B3 has the -2 in row 2, column 3") {
    CHECK(cartan_matrix({'B', 3}) ==
          from_rows({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  }
  SUBCASE("C3 is the transpose of B3") {
    CHECK(cartan_matrix({'C', 3}) ==
          from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  }
  SUBCASE("G2") {
    CHECK(cartan_matrix({'G', 2}) == from_rows({{2, -1}, {-3, 2}}));
  }
  SUBCASE("D4 star shape") {
    CHECK(cartan_matrix({'D', 4}) ==
          from_rows({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
  }
  SUBCASE("F4") {
    CHECK(cartan_matrix({'F', 4}) ==
          from_rows({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
  }
  SUBCASE("E6 branch node") {
    auto m = cartan_matrix({'E', 6});
    // Node 2 attaches to node 4 only (0-based: 1 and 3).
    CHECK(m.at(1, 3) == -1);
    CHECK(m.at(3, 1) == -1);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(0, 2) == -1);  // chain 1-3
  }
}

TEST_CASE("cartan matrix structural invariants and determinants") {
  std::vector<std::pair<CartanType, long long>> table;
  for (int r = 1; r <= 8; ++r) table.push_back({{'A', r}, r + 1});
  for (int r = 2; r <= 8; ++r) table.push_back({{'B', r}, 2});
  for (int r = 2; r <= 8; ++r) table.push_back({{'C', r}, 2});
  for (int r = 3; r <= 8; ++r) table.push_back({{'D', r}, 4});
  table.push_back({{'E', 6}, 3});
  table.push_back({{'E', 7}, 2});
  table.push_back({{'E', 8}, 1});
  table.push_back({{'F', 4}, 1});
  table.push_back({{'G', 2}, 1});
  for (auto& [t, want_det] : table) {
    CAPTURE(t.str());
    auto m = cartan_matrix(t);
    REQUIRE(m.rows() == t.rank);
    for (int i = 0; i < m.rows(); ++i) {
      CHECK(m.at(i, i) == 2);
      for (int j = 0; j < m.cols(); ++j) {
        if (i == j) continue;
        CHECK(m.at(i, j) <= 0);
        CHECK(m.at(i, j) >= -3);
        CHECK((m.at(i, j) == 0) == (m.at(j, i) == 0));
      }
    }
    CHECK(m.det() == want_det);
  }
}

TEST_CASE("type validation rejects out-of-range ranks") {
  CHECK_THROWS_AS(validate_type({'B', 1}), Error);
  CHECK_THROWS_AS(validate_type({'D', 2}), Error);
  CHECK_THROWS_AS(validate_type({'E', 5}), Error);
  CHECK_THROWS_AS(validate_type({'F', 3}), Error);
  CHECK_THROWS_AS(validate_type({'G', 3}), Error);
  CHECK_THROWS_AS(validate_type({'H', 2}), Error);
  CHECK_NOTHROW(validate_type({'A', 1}));
  CHECK_NOTHROW(validate_type({'D', 3}));
  CHECK(parse_cartan_type_token("E8") == CartanType{'E', 8});
  CHECK(parse_cartan_type_token("a2") == CartanType{'A', 2});
  CHECK_THROWS_AS(parse_cartan_type_token("Q1"), Error);
  CHECK_THROWS_AS(parse_cartan_type_token("A"), Error);
  CHECK_THROWS_AS(parse_cartan_type_token("A0"), Error);
}

TEST_CASE("centers of the simply connected simple groups") {
  auto invs = [](const CartanType& t) {
    return center_of_sc({t}).invariant_factors();
  };
  for (int r = 1; r <= 8; ++r)
    CHECK(invs({'A', r}) == std::vector<long long>{r + 1});
  for (int r = 2; r <= 8; ++r) {
    CHECK(invs({'B', r}) == std::vector<long long>{2});
    CHECK(invs({'C', r}) == std::vector<long long>{2});
  }
  CHECK(invs({'D', 3}) == std::vector<long long>{4});
  CHECK(invs({'D', 4}) == std::vector<long long>{2, 2});
  CHECK(invs({'D', 5}) == std::vector<long long>{4});
  CHECK(invs({'D', 6}) == std::vector<long long>{2, 2});
  CHECK(invs({'D', 7}) == std::vector<long long>{4});
  CHECK(invs({'D', 8}) == std::vector<long long>{2, 2});
  CHECK(invs({'E', 6}) == std::vector<long long>{3});
  CHECK(invs({'E', 7}) == std::vector<long long>{2});
  CHECK(invs({'E', 8}).empty());
  CHECK(invs({'F', 4}).empty());
  CHECK(invs({'G', 2}).empty());
}

TEST_CASE("center of a product is the product of centers") {
  auto c = center_of_sc({{'A', 2}, {'A', 1}});
  // Z/3 x Z/2 = Z/6 in canonical form.
  CHECK(c.invariant_factors() == std::vector<long long>{6});
  auto c2 = center_of_sc({{'A', 1}, {'A', 3}});
  CHECK(c2.invariant_factors() == std::vector<long long>{2, 4});
  auto c3 = center_of_sc({{'G', 2}, {'A', 1}});
  CHECK(c3.invariant_factors() == std::vector<long long>{2});
}

TEST_CASE("finite abelian group arithmetic") {
  FiniteAbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.reduce({3, 7}) == FiniteAbelianGroup::Element{1, 3});
  CHECK(g.reduce({-1, -1}) == FiniteAbelianGroup::Element{1, 3});
  CHECK(g.add({1, 3}, {1, 2}) == FiniteAbelianGroup::Element{0, 1});
  CHECK(g.element_order({1, 2}) == 2);
  CHECK(g.element_order({0, 1}) == 4);
  CHECK(g.element_order({1, 1}) == 4);
  CHECK(g.elements().size() == 8);
  CHECK_THROWS_AS(FiniteAbelianGroup({4, 2}), Error);   // chain must ascend
  CHECK_THROWS_AS(FiniteAbelianGroup({2, 3}), Error);   // 2 does not divide 3
  CHECK_THROWS_AS(FiniteAbelianGroup({1, 2}), Error);   // no trivial factors
  CHECK(canonical_invariant_factors({3, 2}) == std::vector<long long>{6});
  CHECK(canonical_invariant_factors({2, 2, 3}) == std::vector<long long>{2, 6});
  CHECK(canonical_invariant_factors({4, 6}) == std::vector<long long>{2, 12});
  CHECK(canonical_invariant_factors({1, 1}).empty());
}

TEST_CASE("subgroup structure on fixed examples") {
  SUBCASE("even residues in Z/4") {
    FiniteAbelianGroup z4({4});
    auto s = subgroup(z4, {{{2}}});
    CHECK(s.group.invariant_factors() == std::vector<long long>{2});
  }
  SUBCASE("diagonal of Z/2 x Z/2") {
    FiniteAbelianGroup g({2, 2});
    auto s = subgroup(g, {{{1, 1}}});
    CHECK(s.group.invariant_factors() == std::vector<long long>{2});
  }
  SUBCASE("full group from two generators") {
    FiniteAbelianGroup g({2, 2});
    auto s = subgroup(g, {{{1, 0}, {0, 1}}});
    CHECK(s.group.invariant_factors() == std::vector<long long>{2, 2});
  }
  SUBCASE("trivial subgroup") {
    FiniteAbelianGroup g({2, 4});
    auto s = subgroup(g, {{}});
    CHECK(s.group.is_trivial());
    auto s2 = subgroup(g, {{{0, 0}}});
    CHECK(s2.group.is_trivial());
  }
  SUBCASE("generator order is irrelevant") {
    FiniteAbelianGroup g({2, 8});
    auto a = subgroup(g, {{{1, 2}, {0, 4}}});
    auto b = subgroup(g, {{{0, 4}, {1, 2}}});
    CHECK(a.group == b.group);
  }
}

TEST_CASE("subgroup structure randomized against closure oracle") {
  oracles::Rng rng(7711);
  std::vector<std::vector<long long>> ambients = {
      {4}, {6}, {12}, {2, 2}, {2, 4}, {2, 8}, {3, 9}, {2, 2, 4}, {2, 6}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& fac = ambients[(std::size_t)rng.uniform(0, (long long)ambients.size() - 1)];
    FiniteAbelianGroup amb(fac);
    int ngen = (int)rng.uniform(0, 3);
    SubgroupSpec spec;
    for (int i = 0; i < ngen; ++i) {
      FiniteAbelianGroup::Element e;
      for (long long f : fac) e.push_back(rng.uniform(0, f - 1));
      spec.generators.push_back(e);
    }
    auto s = subgroup(amb, spec);
    auto elems = oracles::closure(amb, spec.generators);
    CAPTURE(trial);
    REQUIRE((long long)elems.size() == s.group.order());
    CHECK(oracles::invariants_from_elements(amb, elems) == s.group.invariant_factors());
  }
}

TEST_CASE("semisimple group wires center and fundamental data together") {
  SemisimpleGroup pgl2({{'A', 1}}, {{{1}}});
  CHECK(pgl2.center().invariant_factors() == std::vector<long long>{2});
  CHECK(pgl2.gamma().invariant_factors() == std::vector<long long>{2});
  CHECK(pgl2.rank() == 1);

  SemisimpleGroup sl2({{'A', 1}}, {{}});
  CHECK(sl2.gamma().is_trivial());

  SemisimpleGroup so5({{'B', 2}}, {{{1}}});
  CHECK(so5.gamma().invariant_factors() == std::vector<long long>{2});

  // Generators must live in the center's coordinates.
  CHECK_THROWS_AS(SemisimpleGroup({{'A', 1}}, {{{1, 0}}}), Error);
  CHECK_THROWS_AS(SemisimpleGroup({{'E', 8}}, {{{1}}}), Error);
}
