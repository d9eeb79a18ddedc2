#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iolog/permissions.hpp"

using namespace iolog;

namespace {

NormRelation rel(int n, std::initializer_list<std::pair<Element, Element>> ps) {
  NormRelation r(n);
  for (auto [a, x] : ps) r.add(a, x);
  return r;
}

NormRelation random_rel(const FiniteAlgebra& a, std::mt19937_64& rng, int max_pairs) {
  NormRelation r(a.n);
  int k = int(rng() % uint64_t(max_pairs + 1));
  for (int i = 0; i < k; ++i) r.add(Element(rng() % a.n), Element(rng() % a.n));
  return r;
}

const RuleSet kN1 = RuleSet::preset("N1");

}  // namespace

TEST_CASE("negative permission of the one-norm system") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  NormRelation p = negative_permission(b4, rel(4, {{1, 2}}));
  CHECK(p.complement() == rel(4, {{1, 1}, {1, 0}}));
}

TEST_CASE("negative permission degenerate inputs") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  CHECK(negative_permission(b4, NormRelation(4)) == NormRelation::full(4));

  FiniteAlgebra b2 = catalog("B2").algebra;
  NormRelation n = close_relation(b2, rel(2, {{1, 1}}), kN1);
  CHECK(negative_permission(b2, n) == rel(2, {{0, 1}, {1, 1}}));
}

TEST_CASE("negation-based permission coincides on weakening-closed Boolean systems") {
  CatalogEntry b2 = catalog("B2");
  for (uint64_t mask = 0; mask < 16; ++mask) {
    NormRelation n(2);
    for (int i = 0; i < 4; ++i)
      if ((mask >> i) & 1) n.add(i / 2, i % 2);
    if (!is_closed_under(b2.algebra, n, Rule::WO)) continue;
    CHECK(negative_permission(b2.algebra, n) ==
          negative_permission_classical(b2.algebra, n, *b2.binding.neg));
  }
  CHECK(negative_permission_classical(b2.algebra, NormRelation(2), *b2.binding.neg) ==
        NormRelation::full(2));
  CHECK(negative_permission_classical(b2.algebra, NormRelation::full(2), *b2.binding.neg) ==
        NormRelation(2));
}

TEST_CASE("dual negative permission on the closed fixture") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  NormRelation n = close_relation(b4, rel(4, {{1, 2}}), kN1);
  NormRelation d = dual_negative(b4, n);
  CHECK(d.contains(1, 2));   // witness: (q,q) is not obligated and p&q = bot
  CHECK(!d.contains(0, 3));  // every (b,top) is obligated
  CHECK(dual_negative(b4, NormRelation::full(4)) == NormRelation(4));
}

TEST_CASE("negation-based dual coincides on strengthening-closed Boolean systems") {
  CatalogEntry b2 = catalog("B2");
  for (uint64_t mask = 0; mask < 16; ++mask) {
    NormRelation n(2);
    for (int i = 0; i < 4; ++i)
      if ((mask >> i) & 1) n.add(i / 2, i % 2);
    if (!is_closed_under(b2.algebra, n, Rule::SI)) continue;
    CHECK(dual_negative(b2.algebra, n) ==
          dual_negative_classical(b2.algebra, n, *b2.binding.neg));
  }
  CHECK(dual_negative_classical(b2.algebra, NormRelation(2), *b2.binding.neg) ==
        NormRelation::full(2));
  CHECK(dual_negative_classical(b2.algebra, NormRelation::full(2), *b2.binding.neg) ==
        NormRelation(2));
}

TEST_CASE("static positive permission fixture") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  auto s = static_positive(b4, rel(4, {{2, 1}}), rel(4, {{1, 2}}), kN1);
  NormRelation want = rel(4, {{3, 3}, {1, 2}, {2, 1}, {1, 3}, {2, 3},
                              {0, 0}, {0, 1}, {0, 2}, {0, 3}});
  CHECK(s.relation == want);
  CHECK(s.hypothesis_ok);

  // the empty permission system falls back to the plain closure
  auto s0 = static_positive(b4, NormRelation(4), rel(4, {{1, 2}}), kN1);
  CHECK(s0.relation == close_relation(b4, rel(4, {{1, 2}}), kN1));

  // the closure of N is always included
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    NormRelation n = random_rel(b4, rng, 4);
    NormRelation p = random_rel(b4, rng, 2);
    CHECK(close_relation(b4, n, kN1)
              .subset_of(static_positive(b4, p, n, kN1).relation));
  }
}

TEST_CASE("the standing hypothesis is reported, not enforced") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  auto s = static_positive(b4, rel(4, {{1, 1}}), rel(4, {{1, 2}}), kN1);
  CHECK(!s.hypothesis_ok);
  REQUIRE(s.hypothesis_violation.has_value());
  CHECK(*s.hypothesis_violation == std::pair<Element, Element>{1, 1});
}

TEST_CASE("cross-coherence fixtures") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  CHECK(cross_coherent(b4, rel(4, {{2, 1}}), rel(4, {{1, 2}}), kN1).holds);

  auto bad = cross_coherent(b4, rel(4, {{1, 1}}), rel(4, {{1, 2}}), kN1);
  CHECK(!bad.holds);
  REQUIRE(bad.witness.has_value());
  auto w = *bad.witness;
  CHECK(w[0] == 1);
  CHECK(b4.meet(w[1], w[2]) == 0);  // re-evaluating the witness reproduces the clash

  CHECK(cross_coherent(b4, rel(4, {{1, 1}}), NormRelation(4), kN1).holds);
}

TEST_CASE("dynamic positive permission fixture and degeneracy") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  NormRelation d = dynamic_positive(b4, rel(4, {{2, 1}}), rel(4, {{1, 2}}), kN1);
  CHECK(d.contains(2, 1));

  // with nothing forbidden the prohibition of bot clashes for every a != bot
  NormRelation deg = dynamic_positive(b4, NormRelation(4), NormRelation(4), kN1);
  NormRelation want(4);
  for (Element a = 1; a < 4; ++a)
    for (Element x = 0; x < 4; ++x) want.add(a, x);
  CHECK(deg == want);
}

TEST_CASE("negation-based dynamic permission") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  const auto neg = *catalog("B4").binding.neg;
  NormRelation d =
      dynamic_positive_classical(b4, rel(4, {{2, 1}}), rel(4, {{1, 2}}), kN1, neg);
  CHECK(d.contains(2, 1));

  FiniteAlgebra b2 = catalog("B2").algebra;
  const auto neg2 = *catalog("B2").binding.neg;
  CHECK(dynamic_positive_classical(b2, NormRelation(2), NormRelation(2), kN1, neg2) ==
        rel(2, {{1, 1}}));
}

TEST_CASE("negation-based dynamic permission refines the general one") {
  std::mt19937_64 rng(11);
  for (const char* name : {"B2", "B4"}) {
    CatalogEntry e = catalog(name);
    for (int i = 0; i < 60; ++i) {
      NormRelation n = random_rel(e.algebra, rng, 3);
      NormRelation p = random_rel(e.algebra, rng, 2);
      CHECK(dynamic_positive_classical(e.algebra, p, n, kN1, *e.binding.neg)
                .subset_of(dynamic_positive(e.algebra, p, n, kN1)));
    }
  }
}

TEST_CASE("generalized dynamic permission and family validation") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  Binding b = catalog("B4").binding;
  NormRelation n = rel(4, {{1, 2}});
  NormRelation p(4);

  NormRelation h0 = close_relation(b4, n, kN1);
  ExtensionFamily singleton{{h0}};
  CHECK(generalized_dynamic(b4, p, n, kN1, singleton) == negative_permission(b4, h0));

  // every member bounds the intersection
  NormRelation bigger = h0;
  bigger.add(2, 2);
  NormRelation h1 = close_relation(b4, bigger, kN1);
  ExtensionFamily chain{{h0, h1}};
  NormRelation e = generalized_dynamic(b4, p, n, kN1, chain);
  CHECK(e.subset_of(negative_permission(b4, h0)));
  CHECK(e.subset_of(negative_permission(b4, h1)));

  CHECK_THROWS_WITH_AS(generalized_dynamic(b4, p, n, kN1, ExtensionFamily{}),
                       doctest::Contains("FamilyEmpty"), Error);
  CHECK_THROWS_WITH_AS(generalized_dynamic(b4, p, n, kN1, ExtensionFamily{{NormRelation(4)}}),
                       doctest::Contains("MemberMissingBase"), Error);
  CHECK_THROWS_WITH_AS(generalized_dynamic(b4, p, n, kN1, ExtensionFamily{{n}}),
                       doctest::Contains("MemberNotClosed"), Error);

  // two incomparable members with no listed upper bound
  NormRelation left = h0, right = h0;
  left.add(2, 2);
  right.add(2, 1);
  ExtensionFamily split{{close_relation(b4, left, kN1), close_relation(b4, right, kN1)}};
  CHECK_THROWS_WITH_AS(generalized_dynamic(b4, p, n, kN1, split),
                       doctest::Contains("FamilyNotUpDirected"), Error);

  NormRelation bad_p = rel(4, {{1, 1}});
  CHECK_THROWS_WITH_AS(generalized_dynamic(b4, bad_p, n, kN1, singleton),
                       doctest::Contains("MemberNotCrossCoherent"), Error);
  (void)b;
}

TEST_CASE("audit fixtures on the one-norm system") {
  CatalogEntry e = catalog("B4");
  NormRelation n = rel(4, {{1, 2}});
  NormRelation pc = negative_permission(e.algebra, n).complement();

  CHECK(check_rule_closure(e.algebra, pc, AuditVariant::WOR, n, e.binding).holds);

  auto si = check_rule_closure(e.algebra, pc, AuditVariant::SIR, n, e.binding);
  CHECK(!si.holds);  // the base is not strengthening-closed
  REQUIRE(si.witness.has_value());
  {
    // the witness re-evaluates as a genuine escape: a <= b, (b,x) in, (a,x) out
    auto w = *si.witness;
    CHECK(e.algebra.leq(w[0], w[1]));
    CHECK(pc.contains(w[1], w[2]));
    CHECK(!pc.contains(w[0], w[2]));
  }
  // the documented instance: bot <= p with (p,p) inside but (bot,p) escaping
  CHECK(pc.contains(1, 1));
  CHECK(!pc.contains(0, 1));

  // the static fixture is closed under the obligation/permission meet rule
  auto s = static_positive(e.algebra, rel(4, {{2, 1}}), n, kN1).relation;
  CHECK(check_rule_closure(e.algebra, s, AuditVariant::AndD, n, e.binding).holds);
}

TEST_CASE("audits needing a connective report it") {
  CatalogEntry dm4 = catalog("DM4");
  NormRelation r(4), n(4);
  CHECK_THROWS_WITH_AS(
      check_rule_closure(dm4.algebra, r, AuditVariant::EXR, n, dm4.binding),
      doctest::Contains("UnboundConnective"), Error);
  CHECK_THROWS_WITH_AS(
      check_rule_closure(dm4.algebra, r, AuditVariant::CTL, n, dm4.binding),
      doctest::Contains("UnboundConnective"), Error);
}

TEST_CASE("audit variant ids round-trip") {
  for (int i = 0; i <= int(AuditVariant::CTD); ++i) {
    AuditVariant v = AuditVariant(i);
    CHECK(parse_audit_variant(to_string(v)) == v);
  }
  CHECK(parse_audit_variant("SI▷") == AuditVariant::SIR);
  CHECK(parse_audit_variant("AND↓") == AuditVariant::AndD);
  CHECK_THROWS_AS(parse_audit_variant("??"), Error);
}

TEST_CASE("antitonicity and coherence bounds") {
  FiniteAlgebra b4 = catalog("B4").algebra;
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    NormRelation n = random_rel(b4, rng, 4);
    NormRelation m = n;
    m |= random_rel(b4, rng, 3);
    CHECK(negative_permission(b4, m).subset_of(negative_permission(b4, n)));
    if (internally_coherent(b4, n).holds)
      CHECK(almost_included(b4, n, negative_permission(b4, n)));
  }
}
