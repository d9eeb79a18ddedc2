#include "iolog/verifier.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "iolog/logic.hpp"

namespace iolog {

namespace {

struct Ctx {
  const FiniteAlgebra& alg;
  const Binding& b;
  Strategy strategy;
  uint64_t seed;
  int samples;
};

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= uint8_t(c);
    h *= 1099511628211ull;
  }
  return h;
}

bool prop(const Ctx& c, MetaProp p) { return check_metaproperty(c.alg, c.b, p).holds; }

std::string missing_props(const Ctx& c, const std::vector<MetaProp>& ps) {
  std::string missing;
  for (MetaProp p : ps)
    if (!prop(c, p)) {
      if (!missing.empty()) missing += ",";
      missing += to_string(p);
    }
  return missing;
}

PropertyReport skipped(const std::string& id, const std::string& why) {
  PropertyReport r;
  r.check_id = id;
  r.holds = true;
  r.notes = "skipped: " + why;
  r.instances = 0;
  return r;
}

PropertyReport pass(const std::string& id, long long instances, std::string notes = {}) {
  PropertyReport r;
  r.check_id = id;
  r.holds = true;
  r.instances = instances;
  r.notes = std::move(notes);
  return r;
}

PropertyReport violated(const std::string& id, long long instances, std::vector<Element> w,
                        std::string notes) {
  PropertyReport r;
  r.check_id = id;
  r.holds = false;
  r.instances = instances;
  r.witness = std::move(w);
  r.notes = std::move(notes);
  return r;
}

struct Violation {
  std::vector<Element> witness;
  std::string note;
};

using Rng = std::mt19937_64;

NormRelation draw_relation(const FiniteAlgebra& alg, Rng& rng) {
  NormRelation r(alg.n);
  int k = int(rng() % uint64_t(alg.n + 3));
  for (int i = 0; i < k; ++i) {
    Element a = Element(rng() % uint64_t(alg.n));
    Element x = Element(rng() % uint64_t(alg.n));
    r.add(a, x);
  }
  return r;
}

NormRelation draw_subset(const NormRelation& from, int carrier, Rng& rng, int max_pairs) {
  NormRelation r(carrier);
  auto ps = from.pairs();
  if (ps.empty()) return r;
  int k = int(rng() % uint64_t(max_pairs + 1));
  for (int i = 0; i < k; ++i) {
    auto [a, x] = ps[rng() % ps.size()];
    r.add(a, x);
  }
  return r;
}

NormRelation from_mask(int n, uint64_t mask) {
  NormRelation r(n);
  for (int i = 0; i < n * n; ++i)
    if ((mask >> i) & 1) r.add(i / n, i % n);
  return r;
}

uint64_t to_mask(const NormRelation& r) {
  uint64_t m = 0;
  const int n = r.carrier();
  r.for_each([&](Element a, Element x) { m |= uint64_t(1) << (a * n + x); });
  return m;
}

// Quantifies a check body over normative systems. Sampled draws are closed
// under `ctor` so the closure hypotheses hold by construction; exhaustive
// enumeration closes every raw relation the same way. The body reports a
// violation or nothing.
template <class Body>
PropertyReport norm_check(const Ctx& c, const std::string& id, RuleSet ctor,
                          const std::vector<MetaProp>& hyps, int sample_cap, Body&& body) {
  std::string missing = missing_props(c, hyps);
  if (!missing.empty()) return skipped(id, "hypotheses not satisfied (" + missing + ")");

  Rng rng(c.seed ^ fnv1a(id) ^ fnv1a(c.alg.name));
  long long instances = 0;
  auto run_one = [&](const NormRelation& raw) -> std::optional<PropertyReport> {
    NormRelation n = ctor.empty() ? raw : close_relation(c.alg, raw, ctor);
    ++instances;
    std::optional<Violation> v = body(n, rng);
    if (!v) return std::nullopt;
    return violated(id, instances, std::move(v->witness),
                    v->note + " [N=" + n.to_text() + "]");
  };

  Strategy st = c.strategy;
  if (st == Strategy::ExhaustiveElements) st = Strategy::SampledNorms;
  if (st == Strategy::ExhaustiveNorms) {
    if (c.alg.n > 4)
      fail("InfeasibleStrategy",
           "exhaustive norm enumeration needs carrier <= 4, got " + std::to_string(c.alg.n));
    const uint64_t total = uint64_t(1) << (c.alg.n * c.alg.n);
    for (uint64_t m = 0; m < total; ++m)
      if (auto r = run_one(from_mask(c.alg.n, m))) return *r;
  } else {
    int want = c.samples;
    if (sample_cap > 0 && want > sample_cap) want = sample_cap;
    for (int i = 0; i < want; ++i)
      if (auto r = run_one(draw_relation(c.alg, rng))) return *r;
  }
  return pass(id, instances);
}

// Where a permission system P must accompany each normative system. `pool`
// selects P's ambient relation (everything, or the negative permission of N
// when the statement carries that standing hypothesis). On a 2-carrier the
// exhaustive strategy enumerates every (N, P) pair outright; larger carriers
// pair each N with one seeded subset of the pool.
enum class PermPool { Full, NegPerm };

template <class Body>
PropertyReport norm_perm_check(const Ctx& c, const std::string& id, RuleSet ctor,
                               const std::vector<MetaProp>& hyps, int sample_cap,
                               PermPool pool, Body&& body) {
  std::string missing = missing_props(c, hyps);
  if (!missing.empty()) return skipped(id, "hypotheses not satisfied (" + missing + ")");

  Rng rng(c.seed ^ fnv1a(id) ^ fnv1a(c.alg.name));
  long long instances = 0;
  auto pool_of = [&](const NormRelation& n) {
    return pool == PermPool::NegPerm ? negative_permission(c.alg, n)
                                     : NormRelation::full(c.alg.n);
  };
  auto run_one = [&](const NormRelation& n,
                     const NormRelation& p) -> std::optional<PropertyReport> {
    ++instances;
    std::optional<Violation> v = body(n, p, rng);
    if (!v) return std::nullopt;
    return violated(id, instances, std::move(v->witness),
                    v->note + " [N=" + n.to_text() + ", P=" + p.to_text() + "]");
  };

  Strategy st = c.strategy;
  if (st == Strategy::ExhaustiveElements) st = Strategy::SampledNorms;
  if (st == Strategy::ExhaustiveNorms) {
    if (c.alg.n > 4)
      fail("InfeasibleStrategy",
           "exhaustive norm enumeration needs carrier <= 4, got " + std::to_string(c.alg.n));
    const uint64_t total = uint64_t(1) << (c.alg.n * c.alg.n);
    for (uint64_t m = 0; m < total; ++m) {
      NormRelation n = ctor.empty() ? from_mask(c.alg.n, m)
                                    : close_relation(c.alg, from_mask(c.alg.n, m), ctor);
      NormRelation ambient = pool_of(n);
      if (c.alg.n == 2) {
        const uint64_t pool_mask = to_mask(ambient);
        uint64_t sub = 0;
        do {
          if (auto r = run_one(n, from_mask(2, sub))) return *r;
          sub = (sub - pool_mask) & pool_mask;
        } while (sub != 0);
      } else {
        if (auto r = run_one(n, draw_subset(ambient, c.alg.n, rng, 3))) return *r;
      }
    }
  } else {
    int want = c.samples;
    if (sample_cap > 0 && want > sample_cap) want = sample_cap;
    for (int i = 0; i < want; ++i) {
      NormRelation n = close_relation(c.alg, draw_relation(c.alg, rng), ctor);
      if (auto r = run_one(n, draw_subset(pool_of(n), c.alg.n, rng, 3))) return *r;
    }
  }
  return pass(id, instances);
}

// Element-only checks share this wrapper for hypothesis handling.
template <class Body>
PropertyReport element_check(const Ctx& c, const std::string& id,
                             const std::vector<MetaProp>& hyps, Body&& body) {
  std::string missing = missing_props(c, hyps);
  if (!missing.empty()) return skipped(id, "hypotheses not satisfied (" + missing + ")");
  long long instances = 0;
  std::optional<Violation> v = body(instances);
  if (v) return violated(id, instances, std::move(v->witness), std::move(v->note));
  return pass(id, instances);
}

const std::vector<Element>& neg_table(const Ctx& c) { return *c.b.neg; }

// ---------------------------------------------------------------------------
// Derived-negation entailments.

PropertyReport lneg(const Ctx& c, const std::string& id, int item) {
  std::vector<MetaProp> base = {MetaProp::AndP, MetaProp::OrP, MetaProp::NegW};
  std::vector<MetaProp> withIl = {MetaProp::AndP, MetaProp::OrP, MetaProp::NegW,
                                            MetaProp::NegIl};
  std::vector<MetaProp> strong = {MetaProp::AndP, MetaProp::OrP, MetaProp::NegW,
                                            MetaProp::NegS, MetaProp::NegA, MetaProp::OrS};
  auto hyps = item == 1 ? base : item == 2 ? withIl : item == 3 ? base : strong;
  return element_check(c, id, hyps, [&](long long& instances) -> std::optional<Violation> {
    const auto& ng = neg_table(c);
    const auto& A = c.alg;
    for (Element a = 0; a < A.n; ++a)
      for (Element x = 0; x < A.n; ++x) {
        ++instances;
        bool ok = true;
        switch (item) {
          case 1: ok = A.leq(A.join(ng[a], ng[x]), ng[A.meet(a, x)]); break;
          case 2: ok = A.leq(ng[A.meet(a, x)], A.join(ng[a], ng[x])); break;
          case 3: ok = A.leq(ng[A.join(a, x)], A.meet(ng[a], ng[x])); break;
          case 4: ok = A.leq(A.meet(ng[a], ng[x]), ng[A.join(a, x)]); break;
        }
        if (!ok) return Violation{{a, x}, "entailment fails"};
      }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Consequence-level facts (P-PRE family).

PropertyReport pre_check(const Ctx& c, const std::string& id, int item) {
  const auto& A = c.alg;
  const int n = A.n;

  switch (item) {
    case 1:
      return element_check(c, id, {MetaProp::AndP, MetaProp::OrS},
                           [&](long long& k) -> std::optional<Violation> {
        for (Element a = 0; a < n; ++a)
          for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
              ++k;
              if (!A.leq(A.meet(a, A.join(x, y)), A.join(A.meet(a, x), A.meet(a, y))))
                return Violation{{a, x, y}, "distribution entailment fails"};
            }
        return std::nullopt;
      });
    case 2:
      return element_check(c, id, {}, [&](long long& k) -> std::optional<Violation> {
        for (Element a = 0; a < n; ++a)
          for (Element x = 0; x < n; ++x)
            for (Element g = 0; g < n; ++g) {
              ++k;
              if (A.leq(x, a) && !A.leq(A.meet(g, x), A.meet(g, a)))
                return Violation{{a, x, g}, "context monotonicity fails"};
            }
        return std::nullopt;
      });
    case 3:
      // Two independent routes must agree: the double-negation expansion scan
      // and the exchange scan a<=~x iff x<=~a.
      return element_check(c, id, {MetaProp::NegW}, [&](long long& k) -> std::optional<Violation> {
        const auto& ng = neg_table(c);
        bool route1 = prop(c, MetaProp::NegIr);
        bool route2 = true;
        for (Element a = 0; a < n && route2; ++a)
          for (Element x = 0; x < n && route2; ++x) {
            ++k;
            if (A.leq(a, ng[x]) != A.leq(x, ng[a])) route2 = false;
          }
        if (route1 != route2) return Violation{{}, "the two routes disagree"};
        return std::nullopt;
      });
    case 4:
      return element_check(c, id, {}, [&](long long& k) -> std::optional<Violation> {
        bool top_p = prop(c, MetaProp::TopP), top_w = prop(c, MetaProp::TopW);
        bool theorems_nonempty = c.b.top.has_value();
        ++k;
        if (top_p && !top_w) return Violation{{}, "top_P without top_W"};
        if (theorems_nonempty && top_w && !top_p) return Violation{{}, "top_W without top_P"};
        return std::nullopt;
      });
    case 5:
      return element_check(c, id, {MetaProp::BotP, MetaProp::NegW, MetaProp::NegIr},
                           [&](long long& k) -> std::optional<Violation> {
        const auto& ng = neg_table(c);
        Element nb = ng[*c.b.bot];
        for (Element a = 0; a < n; ++a) {
          ++k;
          if (!A.leq(a, nb)) return Violation{{a}, "~bot is not a greatest element"};
        }
        if (c.b.top && nb != *c.b.top) return Violation{{nb}, "~bot differs from the bound top"};
        return std::nullopt;
      });
    case 6:
      return element_check(c, id, {MetaProp::TopW, MetaProp::AndP, MetaProp::BotP, MetaProp::NegW},
                           [&](long long& k) -> std::optional<Violation> {
        const auto& ng = neg_table(c);
        bool lhs = prop(c, MetaProp::NegIr) && prop(c, MetaProp::NegA) && prop(c, MetaProp::NegP);
        bool rhs = true;
        for (Element a = 0; a < n && rhs; ++a)
          for (Element x = 0; x < n && rhs; ++x) {
            ++k;
            if ((A.meet(a, x) == A.bottom) != A.leq(a, ng[x])) rhs = false;
          }
        if (lhs != rhs) return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 7:
      return element_check(c, id, {MetaProp::AndP, MetaProp::OrS, MetaProp::NegW},
                           [&](long long& k) -> std::optional<Violation> {
        ++k;
        if (prop(c, MetaProp::NegIl) && prop(c, MetaProp::NegA) && !prop(c, MetaProp::NegP))
          return Violation{{}, "pseudo negation does not follow"};
        return std::nullopt;
      });
    case 8:
      if (!c.b.coimpl) return skipped(id, "hypotheses not satisfied (coimpl unbound)");
      return element_check(c, id, {MetaProp::OrP}, [&](long long& k) -> std::optional<Violation> {
        const auto& t = *c.b.coimpl;
        bool route1 = prop(c, MetaProp::CoimplP);
        bool route2 = true;
        // Membership route: (a -< x) <= y iff everything above both y and x
        // is above a.
        for (Element a = 0; a < n && route2; ++a)
          for (Element x = 0; x < n && route2; ++x)
            for (Element y = 0; y < n && route2; ++y) {
              ++k;
              bool upper = true;
              for (Element d = 0; d < n; ++d)
                if (A.leq(y, d) && A.leq(x, d) && !A.leq(a, d)) upper = false;
              if (A.leq(t[a * n + x], y) != upper) route2 = false;
            }
        if (route1 != route2) return Violation{{}, "the two routes disagree"};
        return std::nullopt;
      });
    case 9:
      return element_check(
          c, id, {MetaProp::TopW, MetaProp::BotP, MetaProp::NegW, MetaProp::NegIr, MetaProp::NegP},
          [&](long long& k) -> std::optional<Violation> {
            ++k;
            if (!prop(c, MetaProp::NegS)) return Violation{{}, "strong negation does not follow"};
            return std::nullopt;
          });
    case 10:
      if (!c.b.impl) return skipped(id, "hypotheses not satisfied (impl unbound)");
      return element_check(c, id, {MetaProp::AndP}, [&](long long& k) -> std::optional<Violation> {
        bool route1 = prop(c, MetaProp::ImplP);
        // Formula route through the parser and evaluator.
        auto lhs = parse("r -> (p -> q)");
        auto rhs = parse("(p & r) -> q");
        (void)lhs;
        (void)rhs;
        auto chi = parse("r"), it = parse("p -> q"), pr = parse("p & r"), q = parse("q");
        bool route2 = true;
        Assignment v;
        for (Element a = 0; a < n && route2; ++a)
          for (Element x = 0; x < n && route2; ++x)
            for (Element g = 0; g < n && route2; ++g) {
              ++k;
              v["p"] = a;
              v["q"] = x;
              v["r"] = g;
              bool left = A.leq(evaluate(*chi, A, c.b, v), evaluate(*it, A, c.b, v));
              bool right = A.leq(evaluate(*pr, A, c.b, v), evaluate(*q, A, c.b, v));
              if (left != right) route2 = false;
            }
        if (route1 != route2) return Violation{{}, "the two routes disagree"};
        return std::nullopt;
      });
    case 11:
      return element_check(c, id, {MetaProp::CoimplP}, [&](long long& k) -> std::optional<Violation> {
        const auto& t = *c.b.coimpl;
        for (Element a = 0; a < n; ++a)
          for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
              ++k;
              if (!A.leq(x, y)) continue;
              if (!A.leq(t[a * n + y], t[a * n + x]))
                return Violation{{a, x, y}, "second argument not antitone"};
              if (!A.leq(t[x * n + a], t[y * n + a]))
                return Violation{{a, x, y}, "first argument not monotone"};
            }
        return std::nullopt;
      });
    case 12:
    case 13:
      return element_check(c, id, {MetaProp::ImplP}, [&](long long& k) -> std::optional<Violation> {
        const auto& t = *c.b.impl;
        for (Element a = 0; a < n; ++a)
          for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
              ++k;
              if (!A.leq(x, y)) continue;
              if (item == 12 && !A.leq(t[a * n + x], t[a * n + y]))
                return Violation{{a, x, y}, "consequent side not monotone"};
              if (item == 13 && !A.leq(t[y * n + a], t[x * n + a]))
                return Violation{{a, x, y}, "antecedent side not antitone"};
            }
        return std::nullopt;
      });
  }
  fail("UnknownCheck", id);
}

// ---------------------------------------------------------------------------
// Negative permission facts.

PropertyReport np_char(const Ctx& c, const std::string& id) {
  return norm_check(c, id, {Rule::WO}, {MetaProp::NegS, MetaProp::NegA}, 0,
                    [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
    const auto& A = c.alg;
    NormRelation p = negative_permission(A, n);
    for (Element a = 0; a < A.n; ++a)
      for (Element x = 0; x < A.n; ++x) {
        if (p.contains(a, x)) {
          for (Element y = 0; y < A.n; ++y)
            if (n.contains(a, y) && A.meet(x, y) == A.bottom)
              return Violation{{a, x, y}, "permitted outcome clashes with an obligation"};
        } else {
          bool blocked = false;
          for (Element y = 0; y < A.n && !blocked; ++y)
            if (n.contains(a, y) && A.meet(x, y) == A.bottom) blocked = true;
          if (!blocked) return Violation{{a, x}, "not largest: unblocked pair excluded"};
        }
      }
    return std::nullopt;
  });
}

PropertyReport np_eq(const Ctx& c, const std::string& id, bool with_hyps) {
  auto hyps = with_hyps
                  ? std::vector<MetaProp>{MetaProp::NegS, MetaProp::NegA}
                  : std::vector<MetaProp>{MetaProp::NegW};
  return norm_check(c, id, {Rule::WO}, hyps, 0,
                    [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
    NormRelation a = negative_permission(c.alg, n);
    NormRelation b = negative_permission_classical(c.alg, n, neg_table(c));
    if (a == b) return std::nullopt;
    for (Element i = 0; i < c.alg.n; ++i)
      for (Element j = 0; j < c.alg.n; ++j)
        if (a.contains(i, j) != b.contains(i, j))
          return Violation{{i, j}, "general and negation-based permissions disagree"};
    return std::nullopt;
  });
}

PropertyReport np_coh(const Ctx& c, const std::string& id) {
  return norm_check(c, id, {}, {}, 0,
                    [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
    if (!internally_coherent(c.alg, n).holds) return std::nullopt;
    if (!almost_included(c.alg, n, negative_permission(c.alg, n)))
      return Violation{{}, "coherent system not almost included in its negative permission"};
    return std::nullopt;
  });
}

PropertyReport np_anti(const Ctx& c, const std::string& id) {
  return norm_check(c, id, {}, {}, 0,
                    [&](const NormRelation& n, Rng& rng) -> std::optional<Violation> {
    NormRelation m = n;
    NormRelation extra = draw_relation(c.alg, rng);
    m |= extra;
    if (!negative_permission(c.alg, m).subset_of(negative_permission(c.alg, n)))
      return Violation{{}, "antitonicity fails for M=" + m.to_text()};
    return std::nullopt;
  });
}

// One entry per statement about the complement of the negative permission.
PropertyReport npl(const Ctx& c, const std::string& id, int item) {
  const std::vector<MetaProp> bounds = {MetaProp::BotP, MetaProp::TopW};
  const std::vector<MetaProp> negs = {MetaProp::BotP, MetaProp::TopP, MetaProp::NegI,
                                                MetaProp::NegA, MetaProp::NegP};
  const std::vector<MetaProp> none = {};
  auto audit = [&](const NormRelation& n, AuditVariant v) {
    NormRelation pc = negative_permission(c.alg, n).complement();
    return check_rule_closure(c.alg, pc, v, n, c.b).holds;
  };
  auto has_top_row = [&](const NormRelation& n) {
    for (Element y = 0; y < c.alg.n; ++y)
      if (n.contains(c.alg.top, y)) return true;
    return false;
  };
  switch (item) {
    case 1:
      return norm_check(c, id, {}, bounds, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (audit(n, AuditVariant::TopR) != has_top_row(n))
          return Violation{{}, "membership characterization fails"};
        return std::nullopt;
      });
    case 2:
      return norm_check(c, id, {Rule::WO}, bounds, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::Top) != audit(n, AuditVariant::TopR))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 3:
      return norm_check(c, id, {}, bounds, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (audit(n, AuditVariant::BotR) != n.contains(c.alg.bottom, c.alg.bottom))
          return Violation{{}, "membership characterization fails"};
        return std::nullopt;
      });
    case 4:
      return norm_check(c, id, {Rule::WO}, bounds, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::Bot) != audit(n, AuditVariant::BotR))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 5:
      return norm_check(c, id, {}, none, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::WOR)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    case 6:
      return norm_check(c, id, {Rule::SI}, none, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::SIR)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    case 7:
      return norm_check(c, id, {Rule::WO}, negs, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::SI) != audit(n, AuditVariant::SIR))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 8:
      return norm_check(c, id, {Rule::And}, {MetaProp::AndP, MetaProp::OrS}, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::AndR)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    case 9:
      return norm_check(c, id, {Rule::WO}, negs, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::And) != audit(n, AuditVariant::AndR))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 10:
      return norm_check(c, id, {Rule::Or, Rule::WO}, {MetaProp::OrS}, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::OrR)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    case 11:
      return norm_check(c, id, {Rule::WO}, negs, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::Or) != audit(n, AuditVariant::OrR))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 12:
      return norm_check(c, id, {Rule::CT}, none, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::CTR)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    case 13:
      return norm_check(c, id, {Rule::WO}, negs, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::CT) != audit(n, AuditVariant::CTR))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
  }
  fail("UnknownCheck", id);
}

// ---------------------------------------------------------------------------
// Dual negative permission facts.

PropertyReport dnp_eq(const Ctx& c, const std::string& id) {
  return norm_check(c, id, {Rule::SI}, {MetaProp::NegS, MetaProp::NegA}, 0,
                    [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
    NormRelation a = dual_negative(c.alg, n);
    NormRelation b = dual_negative_classical(c.alg, n, neg_table(c));
    if (a == b) return std::nullopt;
    for (Element i = 0; i < c.alg.n; ++i)
      for (Element j = 0; j < c.alg.n; ++j)
        if (a.contains(i, j) != b.contains(i, j))
          return Violation{{i, j}, "general and negation-based duals disagree"};
    return std::nullopt;
  });
}

PropertyReport dnpl(const Ctx& c, const std::string& id, int item) {
  const std::vector<MetaProp> bounds = {MetaProp::BotP, MetaProp::TopW};
  const std::vector<MetaProp> negs = {MetaProp::BotP, MetaProp::TopP, MetaProp::NegI,
                                                MetaProp::NegA, MetaProp::NegP};
  const std::vector<MetaProp> none = {};
  auto audit = [&](const NormRelation& n, AuditVariant v) {
    NormRelation dc = dual_negative(c.alg, n).complement();
    return check_rule_closure(c.alg, dc, v, n, c.b).holds;
  };
  auto full_top_col = [&](const NormRelation& n) {
    for (Element a = 0; a < c.alg.n; ++a)
      if (!n.contains(a, c.alg.top)) return false;
    return true;
  };
  switch (item) {
    case 1:
      return norm_check(c, id, {}, bounds, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (audit(n, AuditVariant::TopL) != full_top_col(n))
          return Violation{{}, "membership characterization fails"};
        return std::nullopt;
      });
    case 2:
      return norm_check(c, id, {Rule::SI}, bounds, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (audit(n, AuditVariant::TopL) != is_closed_under(c.alg, n, Rule::Top))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 3:
      return norm_check(c, id, {}, bounds, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (audit(n, AuditVariant::BotL) != n.contains(c.alg.bottom, c.alg.bottom))
          return Violation{{}, "membership characterization fails"};
        return std::nullopt;
      });
    case 4:
      return norm_check(c, id, {Rule::SI}, bounds, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (audit(n, AuditVariant::BotL) != is_closed_under(c.alg, n, Rule::Bot))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 5:
      return norm_check(c, id, {}, none, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::SIL)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    case 6:
      return norm_check(c, id, {Rule::WO}, none, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::WOL)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    case 7:
      return norm_check(c, id, {Rule::SI}, negs, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::WO) != audit(n, AuditVariant::WOL))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    case 8:
      return norm_check(c, id, {Rule::And}, {MetaProp::AndP}, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::AndL)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    case 9: {
      std::vector<MetaProp> hyps = {MetaProp::AndP,  MetaProp::BotP, MetaProp::TopP,
                                              MetaProp::NegI, MetaProp::NegA, MetaProp::NegP};
      return norm_check(c, id, {Rule::SI}, hyps, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::And) != audit(n, AuditVariant::AndL))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    }
    case 10: {
      std::vector<MetaProp> hyps = {MetaProp::AndP, MetaProp::OrP,  MetaProp::BotP,
                                              MetaProp::TopP, MetaProp::NegI, MetaProp::NegA,
                                              MetaProp::NegP};
      return norm_check(c, id, {Rule::SI, Rule::Or}, hyps, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (!audit(n, AuditVariant::OrL)) return Violation{{}, "closure fails"};
        return std::nullopt;
      });
    }
    case 11: {
      std::vector<MetaProp> hyps = {MetaProp::AndP, MetaProp::OrS,  MetaProp::BotP,
                                              MetaProp::TopP, MetaProp::NegI, MetaProp::NegA,
                                              MetaProp::NegP};
      return norm_check(c, id, {Rule::SI}, hyps, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::Or) != audit(n, AuditVariant::OrL))
          return Violation{{}, "equivalence fails"};
        return std::nullopt;
      });
    }
    case 12:
      return norm_check(c, id, {Rule::WO, Rule::SI, Rule::EX},
                        {MetaProp::OrP, MetaProp::CoimplP}, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (is_closed_under(c.alg, n, Rule::CT) && !audit(n, AuditVariant::CTL))
          return Violation{{}, "implication fails"};
        return std::nullopt;
      });
    case 13: {
      std::vector<MetaProp> hyps = {MetaProp::CoimplP, MetaProp::OrS,
                                              MetaProp::OrP,     MetaProp::TopP,
                                              MetaProp::NegA,    MetaProp::NegS,
                                              MetaProp::NegIr,   MetaProp::TildeA};
      return norm_check(c, id, {Rule::SI}, hyps, 0,
                        [&](const NormRelation& n, Rng&) -> std::optional<Violation> {
        if (audit(n, AuditVariant::CTL) && !is_closed_under(c.alg, n, Rule::CT))
          return Violation{{}, "implication fails"};
        return std::nullopt;
      });
    }
  }
  fail("UnknownCheck", id);
}

// ---------------------------------------------------------------------------
// Static positive permission facts.

RuleSet rotate_preset(long long i) {
  static const char* names[] = {"N1", "N2", "N3"};
  return RuleSet::preset(names[i % 3]);
}

PropertyReport sp_coh(const Ctx& c, const std::string& id) {
  long long counter = 0;
  return norm_perm_check(c, id, {}, {}, 0, PermPool::Full,
                         [&](const NormRelation& n, const NormRelation& p,
                             Rng&) -> std::optional<Violation> {
    RuleSet rules = rotate_preset(counter++);
    NormRelation s = static_positive(c.alg, p, n, rules).relation;
    bool incl = almost_included(c.alg, s, negative_permission(c.alg, n));
    bool coh = cross_coherent(c.alg, p, n, rules).holds;
    if (incl != coh) return Violation{{}, "inclusion and coherence disagree"};
    return std::nullopt;
  });
}

PropertyReport spl(const Ctx& c, const std::string& id, int item) {
  return norm_perm_check(c, id, {}, {}, 0, PermPool::NegPerm,
                         [&](const NormRelation& n, const NormRelation& p,
                             Rng&) -> std::optional<Violation> {
    switch (item) {
      case 1: {
        NormRelation s = static_positive(c.alg, p, n, {Rule::And}).relation;
        if (!check_rule_closure(c.alg, s, AuditVariant::AndD, n, c.b).holds)
          return Violation{{}, "ANDv closure fails"};
        return std::nullopt;
      }
      case 2: {
        NormRelation s = static_positive(c.alg, p, n, {Rule::Or}).relation;
        if (!check_rule_closure(c.alg, s, AuditVariant::OrD, n, c.b).holds)
          return Violation{{}, "ORv closure fails"};
        return std::nullopt;
      }
      case 3: {
        RuleSet ct{Rule::CT};
        if (!is_closed_under(c.alg, close_relation(c.alg, n, ct), Rule::And))
          return std::nullopt;  // hypothesis absent on this instance
        bool hyp = true;
        p.for_each([&](Element a, Element x) {
          NormRelation ext = n;
          ext.add(a, x);
          if (!is_closed_under(c.alg, close_relation(c.alg, ext, ct), Rule::And)) hyp = false;
        });
        if (!hyp) return std::nullopt;
        NormRelation s = static_positive(c.alg, p, n, ct).relation;
        if (!check_rule_closure(c.alg, s, AuditVariant::CTD, n, c.b).holds)
          return Violation{{}, "CTv closure fails"};
        return std::nullopt;
      }
      case 4: {
        for (Rule r : {Rule::Top, Rule::SI, Rule::WO}) {
          NormRelation s = static_positive(c.alg, p, n, RuleSet{r}).relation;
          if (!is_closed_under(c.alg, s, r))
            return Violation{{}, std::string("rule ") + to_string(r) + " escapes"};
        }
        return std::nullopt;
      }
      case 5: {
        for (const char* preset : {"N1", "N2", "N3"}) {
          NormRelation s = static_positive(c.alg, p, n, RuleSet::preset(preset)).relation;
          if (!is_closed_under(c.alg, s, Rule::SI)) continue;
          if (!check_rule_closure(c.alg, s, AuditVariant::CTD, n, c.b).holds) continue;
          if (!check_rule_closure(c.alg, s, AuditVariant::AndD, n, c.b).holds)
            return Violation{{}, std::string("ANDv does not follow for ") + preset};
        }
        return std::nullopt;
      }
    }
    fail("UnknownCheck", id);
  });
}

// ---------------------------------------------------------------------------
// Dynamic permission facts.

PropertyReport l_sd(const Ctx& c, const std::string& id) {
  long long counter = 0;
  return norm_perm_check(c, id, {}, {MetaProp::NegA}, 0, PermPool::Full,
                         [&](const NormRelation& n, const NormRelation& p,
                             Rng&) -> std::optional<Violation> {
    RuleSet rules = rotate_preset(counter++);
    NormRelation s = static_positive(c.alg, p, n, rules).relation;
    NormRelation d = dynamic_positive(c.alg, p, n, rules);
    if (!almost_included(c.alg, s, d))
      return Violation{{}, "static permission escapes the dynamic one"};
    return std::nullopt;
  });
}

// Membership reformulation: (a,x) is dynamically permitted exactly when some
// prohibition x' disjoint from x makes the extended closure clash with the
// static permissions of the base pair (P,N).
bool clashes_with_static(const FiniteAlgebra& A, const NormRelation& h, const NormRelation& s) {
  for (Element cc = 0; cc < A.n; ++cc) {
    if (cc == A.bottom) continue;
    for (Element w = 0; w < A.n; ++w) {
      if (!s.contains(cc, w)) continue;
      for (Element wp = 0; wp < A.n; ++wp)
        if (h.contains(cc, wp) && A.meet(w, wp) == A.bottom) return true;
    }
  }
  return false;
}

PropertyReport dyn1(const Ctx& c, const std::string& id) {
  long long counter = 0;
  return norm_perm_check(c, id, {}, {}, 0, PermPool::Full,
                         [&](const NormRelation& n, const NormRelation& p,
                             Rng&) -> std::optional<Violation> {
    const auto& A = c.alg;
    RuleSet rules = rotate_preset(counter++);
    NormRelation d = dynamic_positive(A, p, n, rules);
    NormRelation s = static_positive(A, p, n, rules).relation;
    for (Element a = 0; a < A.n; ++a)
      for (Element x = 0; x < A.n; ++x) {
        bool member = false;
        for (Element xp = 0; xp < A.n && !member; ++xp) {
          if (A.meet(x, xp) != A.bottom) continue;
          NormRelation ext = n;
          ext.add(a, xp);
          if (clashes_with_static(A, close_relation(A, ext, rules), s)) member = true;
        }
        if (member != d.contains(a, x))
          return Violation{{a, x}, "reformulation disagrees"};
      }
    return std::nullopt;
  });
}

PropertyReport dyn2(const Ctx& c, const std::string& id) {
  const auto& A = c.alg;
  if (A.n > 4) return skipped(id, "extension enumeration needs carrier <= 4");
  // Each instance walks every rule-closed extension; on a 4-carrier that is
  // 2^16 candidates, so the outer quantifier stays sampled and capped there.
  Ctx local{c.alg, c.b, c.strategy, c.seed, c.samples};
  int cap = 0;
  if (A.n == 4) {
    local.strategy = Strategy::SampledNorms;
    cap = 120;
  }
  long long counter = 0;
  return norm_perm_check(local, id, {}, {}, cap, PermPool::Full,
                         [&](const NormRelation& n, const NormRelation& p,
                             Rng&) -> std::optional<Violation> {
    RuleSet rules = rotate_preset(counter++);
    if (!cross_coherent(A, p, n, rules).holds) return std::nullopt;
    NormRelation s = static_positive(A, p, n, rules).relation;
    NormRelation d = dynamic_positive(A, p, n, rules);

    NormRelation inter = NormRelation::full(A.n);
    const uint64_t base = to_mask(n);
    const int bits = A.n * A.n;
    const uint64_t free = (~base) & ((bits == 64 ? ~0ull : (uint64_t(1) << bits) - 1));
    // All supersets of N: iterate the submasks of the free positions.
    uint64_t sub = 0;
    bool any = false;
    do {
      NormRelation h = from_mask(A.n, base | sub);
      if (is_closed(A, h, rules) && !clashes_with_static(A, h, s)) {
        inter &= negative_permission(A, h);
        any = true;
      }
      sub = (sub - free) & free;
    } while (sub != 0);
    if (!any) return std::nullopt;  // empty family: nothing to bound
    for (Element a = 0; a < A.n; ++a)
      for (Element x = 0; x < A.n; ++x)
        if (inter.contains(a, x) && !d.contains(a, x))
          return Violation{{a, x}, "family intersection escapes the dynamic permission"};
    return std::nullopt;
  });
}

PropertyReport pe(const Ctx& c, const std::string& id, int item) {
  const auto& A = c.alg;
  std::vector<MetaProp> hyps =
      item == 2 ? std::vector<MetaProp>{MetaProp::AndP, MetaProp::OrS}
      : item == 3 ? std::vector<MetaProp>{MetaProp::OrS}
                  : std::vector<MetaProp>{};
  return norm_perm_check(c, id, {}, hyps, 0, PermPool::Full,
                         [&](const NormRelation& n, const NormRelation& p,
                             Rng& rng) -> std::optional<Violation> {
    std::vector<std::pair<RuleSet, AuditVariant>> cases;
    if (item == 1)
      cases = {{RuleSet{Rule::Top}, AuditVariant::TopR},
               {RuleSet{Rule::Bot}, AuditVariant::BotR},
               {RuleSet{Rule::SI}, AuditVariant::SIR},
               {RuleSet{Rule::WO}, AuditVariant::WOR},
               {RuleSet{Rule::CT}, AuditVariant::CTR}};
    else if (item == 2)
      cases = {{RuleSet{Rule::And}, AuditVariant::AndR}};
    else
      cases = {{RuleSet{Rule::WO, Rule::Or}, AuditVariant::OrR}};

    for (auto& [rules, variant] : cases) {
      ExtensionFamily family;
      NormRelation h = close_relation(A, n, rules);
      if (!cross_coherent(A, p, h, rules).holds) continue;
      family.members.push_back(h);
      for (int grow = 0; grow < 2; ++grow) {
        NormRelation ext = family.members.back();
        ext.add(Element(rng() % A.n), Element(rng() % A.n));
        NormRelation h2 = close_relation(A, ext, rules);
        if (cross_coherent(A, p, h2, rules).holds) family.members.push_back(h2);
      }
      NormRelation e = generalized_dynamic(A, p, n, rules, family);
      if (!check_rule_closure(A, e.complement(), variant, n, c.b).holds)
        return Violation{{}, to_string(variant) + " closure fails on the complement (" +
                                 std::to_string(family.members.size()) + " members)"};
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Expected property matrix for the catalog.

PropertyReport ex21(const Ctx& c, const std::string& id) {
  // Rows follow kAllMetaProps order.
  static const std::map<std::string, std::array<bool, 17>> expected = {
      {"B2", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"B4", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"B8", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"chain(3)", {1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0}},
      {"DM4", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0}},
      {"O6", {1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0}},
      {"N5", {1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {"M3", {1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
  };
  auto it = expected.find(c.alg.name);
  if (it == expected.end()) return skipped(id, "no expected row for " + c.alg.name);
  long long instances = 0;
  std::string row;
  for (size_t i = 0; i < kAllMetaProps.size(); ++i) {
    ++instances;
    bool got = prop(c, kAllMetaProps[i]);
    row += (i ? " " : "") + to_string(kAllMetaProps[i]) + "=" + (got ? "T" : "F");
    if (got != it->second[i])
      return violated(id, instances, {Element(i)},
                      "property " + to_string(kAllMetaProps[i]) + " expected " +
                          (it->second[i] ? "true" : "false"));
  }
  std::string note = "row: " + row;
  if (c.alg.name == "O6")
    note += "; tilde_A holds in this single model though the associated logic lacks it";
  if (c.alg.name == "DM4")
    note += "; neg_S holds in this single model though the associated logic lacks it";
  return pass(id, instances, note);
}

// ---------------------------------------------------------------------------
// Registry.

struct CheckDef {
  std::string id;
  std::string title;
  std::function<PropertyReport(const Ctx&)> run;
  bool norm_level = false;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    auto add = [&](std::string id, std::string title,
                   std::function<PropertyReport(const Ctx&)> fn, bool norm_level) {
      v.push_back({std::move(id), std::move(title), std::move(fn), norm_level});
    };

    add("L-NEG-1", "negations of a meet entail the negated meet",
        [](const Ctx& c) { return lneg(c, "L-NEG-1", 1); }, false);
    add("L-NEG-2", "negated meet entails the join of negations (left-involutive)",
        [](const Ctx& c) { return lneg(c, "L-NEG-2", 2); }, false);
    add("L-NEG2-1", "negated join entails the meet of negations",
        [](const Ctx& c) { return lneg(c, "L-NEG2-1", 3); }, false);
    add("L-NEG2-2", "meet of negations entails the negated join (strong negation)",
        [](const Ctx& c) { return lneg(c, "L-NEG2-2", 4); }, false);
    for (int i = 1; i <= 13; ++i)
      add("P-PRE-" + std::to_string(i), "consequence-level fact " + std::to_string(i),
          [i](const Ctx& c) { return pre_check(c, "P-PRE-" + std::to_string(i), i); }, false);

    add("P-CHAR", "negative permission is the largest compatible system",
        [](const Ctx& c) { return np_char(c, "P-CHAR"); }, true);
    add("P-NP-EQ", "negative permission coincides with the negation-based one",
        [](const Ctx& c) { return np_eq(c, "P-NP-EQ", true); }, true);
    add("P-NP-COH", "coherent systems are almost included in their negative permission",
        [](const Ctx& c) { return np_coh(c, "P-NP-COH"); }, true);
    add("P-NP-ANTI", "negative permission is antitone in the normative system",
        [](const Ctx& c) { return np_anti(c, "P-NP-ANTI"); }, true);
    for (int i = 1; i <= 13; ++i)
      add("P-NPL-" + std::to_string(i),
          "prohibition-complement closure fact " + std::to_string(i),
          [i](const Ctx& c) { return npl(c, "P-NPL-" + std::to_string(i), i); }, true);

    add("P-DNP-EQ", "dual negative permission coincides with the negation-based one",
        [](const Ctx& c) { return dnp_eq(c, "P-DNP-EQ"); }, true);
    for (int i = 1; i <= 13; ++i)
      add("P-DNPL-" + std::to_string(i),
          "dual-complement closure fact " + std::to_string(i),
          [i](const Ctx& c) { return dnpl(c, "P-DNPL-" + std::to_string(i), i); }, true);

    add("P-SP-COH", "almost inclusion in the negative permission equals cross-coherence",
        [](const Ctx& c) { return sp_coh(c, "P-SP-COH"); }, true);
    for (int i = 1; i <= 5; ++i)
      add("P-SPL-" + std::to_string(i),
          "static positive permission closure fact " + std::to_string(i),
          [i](const Ctx& c) { return spl(c, "P-SPL-" + std::to_string(i), i); }, true);

    add("L-SD", "static permissions are almost included in dynamic ones",
        [](const Ctx& c) { return l_sd(c, "L-SD"); }, true);
    add("P-DYN-1", "dynamic permission matches its clash reformulation",
        [](const Ctx& c) { return dyn1(c, "P-DYN-1"); }, true);
    add("P-DYN-2", "coherent-extension intersections are dynamically permitted",
        [](const Ctx& c) { return dyn2(c, "P-DYN-2"); }, true);
    add("P-E-1", "generalized dynamic complement closed under the family rule",
        [](const Ctx& c) { return pe(c, "P-E-1", 1); }, true);
    add("P-E-2", "generalized dynamic complement closed under AND> on distributive bases",
        [](const Ctx& c) { return pe(c, "P-E-2", 2); }, true);
    add("P-E-3", "generalized dynamic complement closed under OR> with WO+OR families",
        [](const Ctx& c) { return pe(c, "P-E-3", 3); }, true);

    add("EX21-matrix", "catalog algebras reproduce the expected property matrix",
        [](const Ctx& c) { return ex21(c, "EX21-matrix"); }, false);

    // Diagnostic variant outside every suite: the permission coincidence with
    // its negation hypotheses relaxed to "a negation exists". Used to
    // demonstrate that those hypotheses carry weight.
    add("X-NP-EQ-NOHYP", "negation-based coincidence with relaxed hypotheses",
        [](const Ctx& c) { return np_eq(c, "X-NP-EQ-NOHYP", false); }, true);
    return v;
  }();
  return defs;
}

const CheckDef* find_check(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return &d;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& registered_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

std::string check_title(const std::string& check_id) {
  const CheckDef* d = find_check(check_id);
  if (!d) fail("UnknownCheck", check_id);
  return d->title;
}

PropertyReport run_check(const std::string& check_id, const FiniteAlgebra& alg,
                         const Binding& b, const CheckOptions& opts) {
  const CheckDef* d = find_check(check_id);
  if (!d) fail("UnknownCheck", check_id);
  Strategy st;
  if (opts.strategy) {
    st = *opts.strategy;
    if (st == Strategy::ExhaustiveNorms && alg.n > 4)
      fail("InfeasibleStrategy",
           "exhaustive norm enumeration needs carrier <= 4, got " + std::to_string(alg.n));
  } else {
    st = d->norm_level
             ? (alg.n <= 4 ? Strategy::ExhaustiveNorms : Strategy::SampledNorms)
             : Strategy::ExhaustiveElements;
  }
  Ctx ctx{alg, b, st, opts.seed, opts.samples};
  auto t0 = std::chrono::steady_clock::now();
  PropertyReport r = d->run(ctx);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "all", "negperm", "dualperm", "static", "dynamic", "metaprops", "example21",
  };
  return names;
}

namespace {

bool in_suite(const std::string& suite, const std::string& id) {
  if (id.rfind("X-", 0) == 0) return false;  // diagnostics run only by name
  if (suite == "all") return true;
  auto starts = [&](const char* p) { return id.rfind(p, 0) == 0; };
  if (suite == "metaprops") return starts("L-NEG") || starts("P-PRE");
  if (suite == "negperm") return starts("P-CHAR") || starts("P-NP-") || starts("P-NPL-");
  if (suite == "dualperm") return starts("P-DNP-") || starts("P-DNPL-");
  if (suite == "static") return starts("P-SP-") || starts("P-SPL-");
  if (suite == "dynamic") return starts("L-SD") || starts("P-DYN-") || starts("P-E-");
  if (suite == "example21") return id == "EX21-matrix";
  fail("UnknownSuite", suite);
}

}  // namespace

std::vector<PropertyReport> run_suite(const std::string& suite, uint64_t seed, int samples) {
  (void)in_suite(suite, "EX21-matrix");  // validates the suite name
  std::vector<PropertyReport> out;
  for (const auto& d : registry()) {
    if (!in_suite(suite, d.id)) continue;
    for (const auto& name : catalog_names()) {
      CatalogEntry e = catalog(name);
      CheckOptions opts;
      opts.seed = seed;
      opts.samples = samples;
      PropertyReport r = run_check(d.id, e.algebra, e.binding, opts);
      r.check_id = d.id + "@" + name;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace iolog
