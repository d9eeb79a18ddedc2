#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iolog/algebra.hpp"

using namespace iolog;

namespace {

AlgebraSpec b4_spec() {
  // Powerset of two atoms with element ids as bit masks.
  AlgebraSpec s;
  s.name = "B4";
  s.size = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if ((i | j) == j) s.leq.push_back({i, j});
  return s;
}

bool holds(const CatalogEntry& e, MetaProp p) {
  return check_metaproperty(e.algebra, e.binding, p).holds;
}

}  // namespace

TEST_CASE("powerset of two atoms builds the expected Boolean lattice") {
  FiniteAlgebra a = build_algebra(b4_spec());
  CHECK(a.bottom == 0);
  CHECK(a.top == 3);
  CHECK(a.meet(1, 2) == 0);
  CHECK(a.join(1, 2) == 3);
  CHECK(a.leq(0, 2));
  CHECK(!a.leq(1, 2));
}

TEST_CASE("missing transitive order pairs are completed") {
  AlgebraSpec s;
  s.name = "chain3-gap";
  s.size = 3;
  s.leq = {{0, 1}, {1, 2}};  // (0,2) omitted on purpose
  FiniteAlgebra a = build_algebra(s);
  CHECK(a.leq(0, 2));
  CHECK(a.meet(0, 2) == 0);
}

TEST_CASE("antisymmetry violations are rejected") {
  AlgebraSpec s;
  s.size = 3;
  s.leq = {{0, 1}, {1, 0}, {1, 2}};
  CHECK_THROWS_WITH_AS(build_algebra(s), doctest::Contains("NotAPartialOrder"), Error);
}

TEST_CASE("posets without bounds are rejected as lattices") {
  AlgebraSpec s;
  s.size = 2;
  s.leq = {};  // two incomparable points: no meet or join
  CHECK_THROWS_WITH_AS(build_algebra(s), doctest::Contains("NotALattice"), Error);
}

TEST_CASE("operation tables must be total and in range") {
  AlgebraSpec s = b4_spec();
  s.unary_ops["neg"] = {3, 2, 1};  // one entry short
  CHECK_THROWS_WITH_AS(build_algebra(s), doctest::Contains("BadTable"), Error);
  s.unary_ops["neg"] = {3, 2, 1, 7};
  CHECK_THROWS_WITH_AS(build_algebra(s), doctest::Contains("BadTable"), Error);
}

TEST_CASE("supplied meet/join tables are cross-checked against the order") {
  AlgebraSpec s = b4_spec();
  std::vector<Element> meet(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) meet[i * 4 + j] = i & j;
  s.binary_ops["meet"] = meet;
  CHECK_NOTHROW(build_algebra(s));
  s.binary_ops["meet"][1 * 4 + 2] = 3;
  CHECK_THROWS_WITH_AS(build_algebra(s), doctest::Contains("BadTable"), Error);
}

TEST_CASE("an unspecified implication is derived by residuation when possible") {
  AlgebraSpec s;
  s.name = "bare-chain3";
  s.size = 3;
  s.leq = {{0, 1}, {1, 2}};
  FiniteAlgebra a = build_algebra(s);
  const auto* impl = a.binary("impl");
  REQUIRE(impl != nullptr);
  CHECK((*impl)[1 * 3 + 0] == 0);  // h -> bot = bot
  CHECK((*impl)[0 * 3 + 0] == 2);
  CHECK((*impl)[2 * 3 + 1] == 1);

  // non-residuated lattices stay without one
  AlgebraSpec n5;
  n5.size = 5;
  n5.leq = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  CHECK(build_algebra(n5).binary("impl") == nullptr);
  AlgebraSpec m3;
  m3.size = 5;
  m3.leq = {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}};
  CHECK(build_algebra(m3).binary("impl") == nullptr);
  CHECK(build_algebra(m3).binary("coimpl") == nullptr);
}

TEST_CASE("catalog bindings name exactly the logic's signature") {
  CHECK(!catalog("DM4").binding.impl.has_value());
  CHECK(!catalog("O6").binding.impl.has_value());
  CHECK(!catalog("chain(3)").binding.coimpl.has_value());
  CHECK(catalog("B4").binding.coimpl.has_value());
  CHECK(!catalog("N5").binding.neg.has_value());
}

TEST_CASE("Heyting chain implication comes out of residuation") {
  CatalogEntry e = catalog("chain(3)");
  const auto& impl = *e.binding.impl;
  const int n = 3;
  // Independent residuation search: a -> b = max{c : a /\ c <= b}.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element best = -1;
      for (Element c = 0; c < n; ++c)
        if (e.algebra.leq(e.algebra.meet(a, c), b)) best = std::max(best, c);
      CHECK(impl[a * n + b] == best);
    }
  CHECK(impl[2 * n + 0] == 0);  // top -> bot
  CHECK((*e.binding.neg)[1] == 0);
}

TEST_CASE("DM4 carries an involutive antitone negation") {
  CatalogEntry e = catalog("DM4");
  const auto& neg = *e.binding.neg;
  CHECK(neg == std::vector<Element>{3, 2, 1, 0});
  CHECK(holds(e, MetaProp::NegI));
  CHECK(holds(e, MetaProp::NegW));
}

TEST_CASE("unknown catalog names are rejected") {
  CHECK_THROWS_WITH_AS(catalog("B5"), doctest::Contains("UnknownCatalogName"), Error);
  CHECK_THROWS_WITH_AS(catalog("chain(1)"), doctest::Contains("UnknownCatalogName"), Error);
}

TEST_CASE("B2 is fully classical") {
  CatalogEntry e = catalog("B2");
  for (MetaProp p : kAllMetaProps) CHECK(holds(e, p));
}

TEST_CASE("chain(3) property verdicts") {
  CatalogEntry e = catalog("chain(3)");
  auto il = check_metaproperty(e.algebra, e.binding, MetaProp::NegIl);
  CHECK(!il.holds);
  REQUIRE(il.witness.has_value());
  CHECK((*il.witness)[0] == 1);  // the middle element: ~~h = top
  CHECK(holds(e, MetaProp::NegIr));
  CHECK(holds(e, MetaProp::NegA));
  CHECK(holds(e, MetaProp::ImplP));
  CHECK(!holds(e, MetaProp::TildeA));
}

TEST_CASE("DM4 fails the absurd negation with a reproducible witness") {
  CatalogEntry e = catalog("DM4");
  auto r = check_metaproperty(e.algebra, e.binding, MetaProp::NegA);
  CHECK(!r.holds);
  REQUIRE(r.witness.has_value());
  Element a = (*r.witness)[0];
  CHECK(e.algebra.meet(a, (*e.binding.neg)[a]) != e.algebra.bottom);
}

TEST_CASE("neg_I is the conjunction of its two halves on every catalog algebra") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog(name);
    bool both = holds(e, MetaProp::NegIr) && holds(e, MetaProp::NegIl);
    CHECK(holds(e, MetaProp::NegI) == both);
  }
}

TEST_CASE("right involution agrees with the exchange characterization") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog(name);
    if (!e.binding.neg || !holds(e, MetaProp::NegW)) continue;
    const auto& neg = *e.binding.neg;
    bool exchange = true;
    for (Element a = 0; a < e.algebra.n; ++a)
      for (Element x = 0; x < e.algebra.n; ++x)
        if (e.algebra.leq(a, neg[x]) != e.algebra.leq(x, neg[a])) exchange = false;
    CHECK(holds(e, MetaProp::NegIr) == exchange);
  }
}

TEST_CASE("Heyting chains detach through their implication") {
  for (const char* name : {"chain(3)", "chain(5)"}) {
    CatalogEntry e = catalog(name);
    CHECK(holds(e, MetaProp::ImplP));
    const auto& impl = *e.binding.impl;
    for (Element a = 0; a < e.algebra.n; ++a)
      for (Element b = 0; b < e.algebra.n; ++b)
        CHECK(e.algebra.leq(e.algebra.meet(a, impl[a * e.algebra.n + b]), b));
  }
}

TEST_CASE("unbound symbols report false with a note") {
  CatalogEntry e = catalog("N5");
  auto r = check_metaproperty(e.algebra, e.binding, MetaProp::NegW);
  CHECK(!r.holds);
  CHECK(r.notes == "symbol unbound: neg");
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->empty());
}

TEST_CASE("reports are deterministic") {
  CatalogEntry e = catalog("O6");
  for (MetaProp p : kAllMetaProps) {
    auto r1 = check_metaproperty(e.algebra, e.binding, p);
    auto r2 = check_metaproperty(e.algebra, e.binding, p);
    CHECK(r1.holds == r2.holds);
    CHECK(r1.witness == r2.witness);
    CHECK(r1.notes == r2.notes);
  }
}

TEST_CASE("a theorem-free binding fails the top properties only") {
  CatalogEntry e = catalog("B4");
  Binding b = e.binding;
  b.top.reset();
  CHECK(!check_metaproperty(e.algebra, b, MetaProp::TopW).holds);
  CHECK(!check_metaproperty(e.algebra, b, MetaProp::TopP).holds);
  CHECK(check_metaproperty(e.algebra, b, MetaProp::BotP).holds);
  CHECK(check_metaproperty(e.algebra, b, MetaProp::AndP).holds);
}

TEST_CASE("metaprop ids round-trip and accept aliases") {
  for (MetaProp p : kAllMetaProps) CHECK(parse_metaprop(to_string(p)) == p);
  CHECK(parse_metaprop("∧_P") == MetaProp::AndP);
  CHECK(parse_metaprop("~_A") == MetaProp::TildeA);
  CHECK_THROWS_AS(parse_metaprop("nope"), Error);
}
