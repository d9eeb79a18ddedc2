#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iolog/logic.hpp"

using namespace iolog;

TEST_CASE("modus ponens holds on the Heyting chain") {
  CatalogEntry e = catalog("chain(3)");
  CHECK(entails(e.algebra, e.binding, {parse("p"), parse("p -> q")}, *parse("q")));
}

TEST_CASE("excluded middle separates the Boolean and Heyting bases") {
  CatalogEntry b2 = catalog("B2");
  CHECK(entails(b2.algebra, b2.binding, {}, *parse("p | ~p")));
  CatalogEntry c3 = catalog("chain(3)");
  CHECK(!entails(c3.algebra, c3.binding, {}, *parse("p | ~p")));
}

TEST_CASE("falsum entails everything") {
  CatalogEntry e = catalog("B4");
  CHECK(entails(e.algebra, e.binding, {parse("F")}, *parse("q")));
}

TEST_CASE("entailment is reflexive and monotone") {
  CatalogEntry e = catalog("DM4");
  std::vector<FormulaPtr> gamma = {parse("p & q"), parse("~r")};
  for (const auto& f : gamma) CHECK(entails(e.algebra, e.binding, gamma, *f));

  // enlarging the premise set preserves entailment
  CHECK(entails(e.algebra, e.binding, {parse("p")}, *parse("p | q")));
  CHECK(entails(e.algebra, e.binding, {parse("p"), parse("r")}, *parse("p | q")));
}

TEST_CASE("cut holds on sampled instances") {
  CatalogEntry e = catalog("B4");
  std::mt19937_64 rng(3);
  const char* pool[] = {"p", "q", "~p", "p & q", "p | q", "~p | q", "T", "F"};
  for (int i = 0; i < 300; ++i) {
    std::vector<FormulaPtr> delta = {parse(pool[rng() % 8]), parse(pool[rng() % 8])};
    std::vector<FormulaPtr> gamma = {parse(pool[rng() % 8]), parse(pool[rng() % 8])};
    auto phi = parse(pool[rng() % 8]);
    bool delta_phi = entails(e.algebra, e.binding, delta, *phi);
    bool gamma_all = true;
    for (const auto& d : delta)
      if (!entails(e.algebra, e.binding, gamma, *d)) gamma_all = false;
    if (delta_phi && gamma_all) CHECK(entails(e.algebra, e.binding, gamma, *phi));
  }
}

TEST_CASE("inconsistency is meet-to-bottom") {
  CatalogEntry b4 = catalog("B4");
  CHECK(inconsistent(b4.algebra, ElementSet::of({1, 2})));
  CHECK(!inconsistent(b4.algebra, ElementSet::of({3})));
  CatalogEntry dm4 = catalog("DM4");
  CHECK(!inconsistent(dm4.algebra, ElementSet::of({1, 2})));
  CHECK_THROWS_WITH_AS(inconsistent(b4.algebra, ElementSet{}), doctest::Contains("EmptySet"),
                       Error);
}

TEST_CASE("inconsistency is symmetric and monotone") {
  CatalogEntry e = catalog("B8");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Element x = Element(rng() % 8), y = Element(rng() % 8);
    CHECK(inconsistent(e.algebra, ElementSet::of({x, y})) ==
          inconsistent(e.algebra, ElementSet::of({y, x})));
    ElementSet s = ElementSet::of({x, y});
    if (inconsistent(e.algebra, s)) {
      s.add(Element(rng() % 8));
      CHECK(inconsistent(e.algebra, s));
    }
  }
}

TEST_CASE("theorem sets") {
  CatalogEntry b2 = catalog("B2");
  CHECK(theorems(b2.algebra, b2.binding) == ElementSet::of({1}));
  CatalogEntry c3 = catalog("chain(3)");
  CHECK(theorems(c3.algebra, c3.binding) == ElementSet::of({2}));
  Binding no_top = b2.binding;
  no_top.top.reset();
  CHECK(theorems(b2.algebra, no_top).empty());
}
