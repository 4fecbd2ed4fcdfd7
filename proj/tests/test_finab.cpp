#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "invdmod/finab.hpp"
#include "oracles.hpp"

using namespace invdmod;

TEST_CASE("character enumeration and duality pairing") {
  FiniteAbelianGroup g({2, 4});
  auto chars = characters(g);
  REQUIRE(chars.size() == 8);
  CHECK(is_trivial_character(chars[0]));
  std::set<Character> uniq(chars.begin(), chars.end());
  CHECK(uniq.size() == 8);
  for (const auto& c : chars) {
    CHECK(character_order(g, c) >= 1);
    auto prod = character_product(g, c, character_inverse(g, c));
    CHECK(is_trivial_character(prod));
  }
  // Orders tally with the group: one character per element order pattern.
  long long max_order = 0;
  for (const auto& c : chars) max_order = std::max(max_order, character_order(g, c));
  CHECK(max_order == 4);

  FiniteAbelianGroup trivial;
  CHECK(characters(trivial).size() == 1);
  CHECK(is_trivial_character(characters(trivial)[0]));
}

TEST_CASE("class counting follows the stars-and-bars formula") {
  auto binom = [](long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::vector<std::vector<long long>> gammas = {{}, {2}, {3}, {4}, {2, 2}};
  for (const auto& f : gammas) {
    FiniteAbelianGroup g(f);
    long long m = g.order();
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(count_classes(g, n) == binom(m + n - 1, n));
      auto all = classify_semisimple(g, n);
      CHECK((long long)all.size() == count_classes(g, n));
      std::set<std::vector<std::pair<std::vector<long long>, long long>>> uniq;
      for (const auto& v : all) {
        CHECK(v.rank() == n);
        std::vector<std::pair<std::vector<long long>, long long>> key;
        for (const auto& e : v.entries()) key.push_back({e.character.residues, e.mult});
        uniq.insert(key);
      }
      CHECK(uniq.size() == all.size());
    }
  }
}

TEST_CASE("rank-1 classes on PGL2 and on simply connected groups") {
  SemisimpleGroup pgl2({{'A', 1}}, {{{1}}});
  auto classes = classify_semisimple(pgl2, 1);
  CHECK(classes.size() == 2);  // trivial and sign

  SemisimpleGroup sl2({{'A', 1}}, {{}});
  CHECK(classify_semisimple(sl2, 1).size() == 1);
  SemisimpleGroup e8({{'E', 8}}, {{}});
  CHECK(classify_semisimple(e8, 3).size() == 1);
}

TEST_CASE("rep class normalization") {
  FiniteAbelianGroup g({4});
  RepClass v(g, {{{{3}}, 1}, {{{1}}, 2}, {{{3}}, 1}});
  REQUIRE(v.entries().size() == 2);
  CHECK(v.entries()[0].character.residues == std::vector<long long>{1});
  CHECK(v.entries()[0].mult == 2);
  CHECK(v.entries()[1].mult == 2);
  CHECK(v.rank() == 4);
  CHECK(RepClass(g, {{{{1}}, 0}}).rank() == 0);  // zero multiplicity drops out
  CHECK_THROWS_AS(RepClass(g, {{{{1}}, -1}}), Error);
  CHECK_THROWS_AS(RepClass(g, {{{{1, 2}}, 1}}), Error);
  CHECK(trivial_rep(g, 3).rank() == 3);
  CHECK(invariants_dim(trivial_rep(g, 3)) == 3);
}

TEST_CASE("tensor, dual, and hom on fixed examples") {
  FiniteAbelianGroup g({2});
  Character triv{{0}}, sgn{{1}};
  RepClass one_sign(g, {{sgn, 1}});
  RepClass mixed(g, {{triv, 1}, {sgn, 1}});

  CHECK(tensor(one_sign, one_sign) == RepClass(g, {{triv, 1}}));
  CHECK(tensor(mixed, mixed) == RepClass(g, {{triv, 2}, {sgn, 2}}));
  CHECK(dual(one_sign) == one_sign);
  CHECK(invariants_dim(mixed) == 1);
  CHECK(invariants_dim(one_sign) == 0);
  CHECK(hom_dim(one_sign, mixed) == 1);
  CHECK(hom_dim(mixed, mixed) == 2);

  FiniteAbelianGroup z4({4});
  RepClass w(z4, {{{{1}}, 2}, {{{2}}, 1}});
  CHECK(dual(w) == RepClass(z4, {{{{2}}, 1}, {{{3}}, 2}}));
  CHECK_THROWS_AS(tensor(one_sign, w), Error);
  CHECK_THROWS_AS(hom_dim(one_sign, w), Error);
}

TEST_CASE("hom dimension equals invariants of dual tensor, randomized") {
  oracles::Rng rng(90127);
  std::vector<std::vector<long long>> gammas = {{2}, {3}, {4}, {2, 2}, {6}};
  for (int trial = 0; trial < 200; ++trial) {
    FiniteAbelianGroup g(gammas[(std::size_t)rng.uniform(0, (long long)gammas.size() - 1)]);
    auto chars = characters(g);
    auto random_rep = [&](int max_rank) {
      std::vector<RepClass::Entry> es;
      int pieces = (int)rng.uniform(1, 3);
      for (int i = 0; i < pieces; ++i)
        es.push_back({chars[(std::size_t)rng.uniform(0, (long long)chars.size() - 1)],
                      rng.uniform(1, max_rank)});
      return RepClass(g, es);
    };
    RepClass u = random_rep(2), w = random_rep(2);
    CAPTURE(trial);
    CHECK(hom_dim(u, w) == invariants_dim(tensor(dual(u), w)));
    CHECK(hom_dim(u, w) == hom_dim(dual(w), dual(u)));
  }
}

TEST_CASE("tensor is a commutative monoid with duality involution") {
  oracles::Rng rng(5150);
  FiniteAbelianGroup g({2, 4});
  auto chars = characters(g);
  auto random_rep = [&]() {
    std::vector<RepClass::Entry> es;
    int pieces = (int)rng.uniform(1, 3);
    for (int i = 0; i < pieces; ++i)
      es.push_back({chars[(std::size_t)rng.uniform(0, (long long)chars.size() - 1)],
                    rng.uniform(1, 2)});
    return RepClass(g, es);
  };
  RepClass unit = trivial_rep(g, 1);
  for (int trial = 0; trial < 60; ++trial) {
    RepClass a = random_rep(), b = random_rep(), c = random_rep();
    CHECK(tensor(a, unit) == a);
    CHECK(tensor(unit, a) == a);
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(dual(dual(a)) == a);
    CHECK(dual(tensor(a, b)) == tensor(dual(a), dual(b)));
    CHECK(tensor(a, b).rank() == a.rank() * b.rank());
  }
}
