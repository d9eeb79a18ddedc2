#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iolog/syntax.hpp"

using namespace iolog;

TEST_CASE("precedence: negation binds tightest, coimplication loosest") {
  auto f = parse("~p & q -> r");
  REQUIRE(f->kind == Conn::Impl);
  CHECK(f->lhs->kind == Conn::And);
  CHECK(f->lhs->lhs->kind == Conn::Neg);
  CHECK(f->rhs->atom == "r");

  auto g = parse("p -< q | r");
  REQUIRE(g->kind == Conn::Coimpl);
  CHECK(g->lhs->atom == "p");
  CHECK(g->rhs->kind == Conn::Or);
}

TEST_CASE("implication is right-associative, coimplication left-associative") {
  auto f = parse("p -> q -> r");
  REQUIRE(f->kind == Conn::Impl);
  CHECK(f->rhs->kind == Conn::Impl);

  auto g = parse("p -< q -< r");
  REQUIRE(g->kind == Conn::Coimpl);
  CHECK(g->lhs->kind == Conn::Coimpl);
}

TEST_CASE("parse errors carry the byte offset") {
  try {
    parse("p & & q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
    CHECK(!e.expected.empty());
  }
  CHECK_THROWS_AS(parse("p -"), ParseError);
  CHECK_THROWS_AS(parse("(p & q"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
}

TEST_CASE("unicode connectives normalize to the ASCII forms") {
  CHECK(same_formula(*parse("¬p ∧ q"), *parse("~p & q")));
  CHECK(same_formula(*parse("p → ⊥"), *parse("p -> F")));
  CHECK(same_formula(*parse("⊤ ⤙ q"), *parse("T -< q")));
  CHECK(same_formula(*parse("p ∨ q"), *parse("p | q")));
}

TEST_CASE("atom names follow the lexical rule") {
  CHECK(parse("abc_12")->atom == "abc_12");
  CHECK_THROWS_AS(parse("Abc"), ParseError);  // 'A' is not T/F or lowercase
  CHECK_THROWS_AS(parse("_x"), ParseError);
}

namespace {

FormulaPtr random_formula(std::mt19937_64& rng, int depth) {
  static const char* atoms[] = {"p", "q", "r", "ab2", "x_y"};
  if (depth == 0 || rng() % 4 == 0) {
    switch (rng() % 7) {
      case 0: return mk_top();
      case 1: return mk_bot();
      default: return mk_atom(atoms[rng() % 5]);
    }
  }
  switch (rng() % 5) {
    case 0: return mk_neg(random_formula(rng, depth - 1));
    case 1: return mk_and(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 2: return mk_or(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3: return mk_impl(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return mk_coimpl(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("print/parse round-trips on random trees") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto f = random_formula(rng, 5);
    auto back = parse(print(*f));
    CHECK(same_formula(*f, *back));
  }
}

TEST_CASE("printed canonical form reparses to itself") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto f = random_formula(rng, 4);
    std::string once = print(*f);
    CHECK(print(*parse(once)) == once);
  }
}

TEST_CASE("evaluation follows the bound tables") {
  CatalogEntry dm4 = catalog("DM4");
  Assignment v{{"p", 1}};
  CHECK(evaluate(*parse("~p"), dm4.algebra, dm4.binding, v) == 2);

  CatalogEntry b2 = catalog("B2");
  Assignment w{{"p", 1}};
  CHECK(evaluate(*parse("p & ~p"), b2.algebra, b2.binding, w) == 0);

  CatalogEntry c3 = catalog("chain(3)");
  Assignment u{{"p", 2}, {"q", 1}};
  CHECK(evaluate(*parse("p -> q"), c3.algebra, c3.binding, u) == 1);
}

TEST_CASE("evaluation is compositional") {
  CatalogEntry e = catalog("B8");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto f = random_formula(rng, 3);
    auto g = random_formula(rng, 3);
    Assignment v;
    for (const char* a : {"p", "q", "r", "ab2", "x_y"})
      v[a] = Element(rng() % e.algebra.n);
    Element fv = evaluate(*f, e.algebra, e.binding, v);
    Element gv = evaluate(*g, e.algebra, e.binding, v);
    CHECK(evaluate(*mk_and(f, g), e.algebra, e.binding, v) == e.algebra.meet(fv, gv));
    CHECK(evaluate(*mk_or(f, g), e.algebra, e.binding, v) == e.algebra.join(fv, gv));
    CHECK(evaluate(*mk_neg(f), e.algebra, e.binding, v) == (*e.binding.neg)[fv]);
  }
}

TEST_CASE("evaluation depends only on occurring atoms") {
  CatalogEntry e = catalog("B4");
  auto f = parse("p | ~p");
  Assignment v1{{"p", 1}, {"q", 0}};
  Assignment v2{{"p", 1}, {"q", 3}};
  CHECK(evaluate(*f, e.algebra, e.binding, v1) == evaluate(*f, e.algebra, e.binding, v2));
}

TEST_CASE("unbound connectives and unassigned atoms are reported") {
  CatalogEntry n5 = catalog("N5");
  Assignment v{{"p", 1}};
  CHECK_THROWS_WITH_AS(evaluate(*parse("~p"), n5.algebra, n5.binding, v),
                       doctest::Contains("UnboundConnective"), Error);
  CatalogEntry b2 = catalog("B2");
  CHECK_THROWS_WITH_AS(evaluate(*parse("p & z"), b2.algebra, b2.binding, v),
                       doctest::Contains("UnassignedAtom"), Error);
}
