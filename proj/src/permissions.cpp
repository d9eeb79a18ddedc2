#include "iolog/permissions.hpp"

#include <map>

namespace iolog {

NormRelation negative_permission(const FiniteAlgebra& alg, const NormRelation& n) {
  const int k = alg.n;
  NormRelation p(k);
  for (Element a = 0; a < k; ++a)
    for (Element x = 0; x < k; ++x) {
      bool ok = true;
      for (Element y = 0; y < k && ok; ++y)
        if (n.contains(a, y) && alg.meet(x, y) == alg.bottom) ok = false;
      if (ok) p.add(a, x);
    }
  return p;
}

NormRelation negative_permission_classical(const FiniteAlgebra& alg, const NormRelation& n,
                                           const std::vector<Element>& neg) {
  NormRelation p(alg.n);
  for (Element a = 0; a < alg.n; ++a)
    for (Element x = 0; x < alg.n; ++x)
      if (!n.contains(a, neg[x])) p.add(a, x);
  return p;
}

NormRelation dual_negative(const FiniteAlgebra& alg, const NormRelation& n) {
  const int k = alg.n;
  NormRelation d(k);
  for (Element a = 0; a < k; ++a)
    for (Element x = 0; x < k; ++x)
      for (Element b = 0; b < k; ++b)
        if (!n.contains(b, x) && alg.meet(a, b) == alg.bottom) {
          d.add(a, x);
          break;
        }
  return d;
}

NormRelation dual_negative_classical(const FiniteAlgebra& alg, const NormRelation& n,
                                     const std::vector<Element>& neg) {
  NormRelation d(alg.n);
  for (Element a = 0; a < alg.n; ++a)
    for (Element x = 0; x < alg.n; ++x)
      if (!n.contains(neg[a], x)) d.add(a, x);
  return d;
}

StaticPermission static_positive(const FiniteAlgebra& alg, const NormRelation& p,
                                 const NormRelation& n, RuleSet rules) {
  StaticPermission out{NormRelation(alg.n), true, std::nullopt};
  NormRelation pn = negative_permission(alg, n);
  p.for_each([&](Element a, Element x) {
    if (out.hypothesis_ok && !pn.contains(a, x)) {
      out.hypothesis_ok = false;
      out.hypothesis_violation = {a, x};
    }
  });
  if (p.empty()) {
    out.relation = close_relation(alg, n, rules);
    return out;
  }
  p.for_each([&](Element a, Element x) {
    NormRelation ext = n;
    ext.add(a, x);
    out.relation |= close_relation(alg, ext, rules);
  });
  return out;
}

PropertyReport cross_coherent(const FiniteAlgebra& alg, const NormRelation& p,
                              const NormRelation& n, RuleSet rules) {
  PropertyReport rep;
  rep.check_id = "cross_coherent";
  NormRelation s = static_positive(alg, p, n, rules).relation;
  for (Element c = 0; c < alg.n; ++c) {
    if (c == alg.bottom) continue;
    for (Element x = 0; x < alg.n; ++x) {
      if (!n.contains(c, x)) continue;
      for (Element y = 0; y < alg.n; ++y)
        if (s.contains(c, y) && alg.meet(x, y) == alg.bottom) {
          rep.holds = false;
          rep.witness = std::vector<Element>{c, x, y};
          rep.notes = "obligated and statically permitted outcomes clash";
          return rep;
        }
    }
  }
  rep.holds = true;
  return rep;
}

NormRelation dynamic_positive(const FiniteAlgebra& alg, const NormRelation& p,
                              const NormRelation& n, RuleSet rules) {
  const int k = alg.n;
  NormRelation s = static_positive(alg, p, n, rules).relation;

  // clash_row[c] = outcomes w' inconsistent with some statically permitted w
  // under c.
  std::vector<ElementSet> clash_row(k);
  for (Element c = 0; c < k; ++c) {
    if (c == alg.bottom) continue;
    for (Element w = 0; w < k; ++w) {
      if (!s.contains(c, w)) continue;
      for (Element wp = 0; wp < k; ++wp)
        if (alg.meet(w, wp) == alg.bottom) clash_row[c].add(wp);
    }
  }

  NormRelation d(k);
  for (Element a = 0; a < k; ++a)
    for (Element xp = 0; xp < k; ++xp) {
      NormRelation ext = n;
      ext.add(a, xp);
      NormRelation cl = close_relation(alg, ext, rules);
      bool hit = false;
      for (Element c = 0; c < k && !hit; ++c) {
        if (c == alg.bottom) continue;
        for (Element wp = 0; wp < k && !hit; ++wp)
          if (cl.contains(c, wp) && clash_row[c].contains(wp)) hit = true;
      }
      if (hit)
        for (Element x = 0; x < k; ++x)
          if (alg.meet(x, xp) == alg.bottom) d.add(a, x);
    }
  return d;
}

NormRelation dynamic_positive_classical(const FiniteAlgebra& alg, const NormRelation& p,
                                        const NormRelation& n, RuleSet rules,
                                        const std::vector<Element>& neg) {
  const int k = alg.n;
  NormRelation s = static_positive(alg, p, n, rules).relation;
  NormRelation d(k);
  for (Element a = 0; a < k; ++a)
    for (Element x = 0; x < k; ++x) {
      NormRelation ext = n;
      ext.add(a, neg[x]);
      NormRelation cl = close_relation(alg, ext, rules);
      for (Element c = 0; c < k; ++c) {
        if (c == alg.bottom) continue;
        bool hit = false;
        for (Element w = 0; w < k && !hit; ++w)
          if (s.contains(c, w) && cl.contains(c, neg[w])) hit = true;
        if (hit) {
          d.add(a, x);
          break;
        }
      }
    }
  return d;
}

namespace {

std::string member_str(size_t i) { return "member " + std::to_string(i); }

}  // namespace

NormRelation generalized_dynamic(const FiniteAlgebra& alg, const NormRelation& p,
                                 const NormRelation& n, RuleSet rules,
                                 const ExtensionFamily& family) {
  if (family.members.empty()) fail("FamilyEmpty", "an extension family must be nonempty");
  for (size_t i = 0; i < family.members.size(); ++i) {
    const NormRelation& h = family.members[i];
    if (h.carrier() != alg.n)
      fail("MemberMissingBase", member_str(i) + " lives on a different carrier");
    if (!n.subset_of(h)) {
      for (auto [a, x] : n.pairs())
        if (!h.contains(a, x))
          fail("MemberMissingBase",
               member_str(i) + " lacks base pair (" + std::to_string(a) + "," +
                   std::to_string(x) + ")");
    }
    for (int ri = 0; ri < kRuleCount; ++ri)
      if (rules.contains(Rule(ri)) && !is_closed_under(alg, h, Rule(ri)))
        fail("MemberNotClosed", member_str(i) + " is not closed under " + to_string(Rule(ri)));
    auto coh = cross_coherent(alg, p, h, rules);
    if (!coh.holds) {
      const auto& w = *coh.witness;
      fail("MemberNotCrossCoherent",
           member_str(i) + " clashes with P at (" + std::to_string(w[0]) + "," +
               std::to_string(w[1]) + "," + std::to_string(w[2]) + ")");
    }
  }
  for (size_t i = 0; i < family.members.size(); ++i)
    for (size_t j = i + 1; j < family.members.size(); ++j) {
      bool bounded = false;
      for (const NormRelation& h : family.members)
        if (family.members[i].subset_of(h) && family.members[j].subset_of(h)) {
          bounded = true;
          break;
        }
      if (!bounded)
        fail("FamilyNotUpDirected",
             member_str(i) + " and " + member_str(j) + " have no common superset");
    }

  NormRelation e = NormRelation::full(alg.n);
  for (const NormRelation& h : family.members) e &= negative_permission(alg, h);
  return e;
}

std::string to_string(AuditVariant v) {
  switch (v) {
    case AuditVariant::TopR: return "TOP>";
    case AuditVariant::BotR: return "BOT>";
    case AuditVariant::SIR: return "SI>";
    case AuditVariant::WOR: return "WO>";
    case AuditVariant::AndR: return "AND>";
    case AuditVariant::OrR: return "OR>";
    case AuditVariant::CTR: return "CT>";
    case AuditVariant::EXR: return "EX>";
    case AuditVariant::TopL: return "TOP<";
    case AuditVariant::BotL: return "BOT<";
    case AuditVariant::SIL: return "SI<";
    case AuditVariant::WOL: return "WO<";
    case AuditVariant::AndL: return "AND<";
    case AuditVariant::OrL: return "OR<";
    case AuditVariant::CTL: return "CT<";
    case AuditVariant::AndD: return "ANDv";
    case AuditVariant::OrD: return "ORv";
    case AuditVariant::CTD: return "CTv";
  }
  fail("UnknownVariant", "bad enum value");
}

AuditVariant parse_audit_variant(const std::string& id) {
  static const std::map<std::string, AuditVariant> table = [] {
    std::map<std::string, AuditVariant> m;
    for (int i = 0; i <= int(AuditVariant::CTD); ++i) {
      AuditVariant v = AuditVariant(i);
      std::string ascii = to_string(v);
      m[ascii] = v;
      // Unicode aliases: > = ▷, < = ◁, v = ↓.
      std::string uni = ascii.substr(0, ascii.size() - 1);
      switch (ascii.back()) {
        case '>': uni += "▷"; break;
        case '<': uni += "◁"; break;
        default: uni += "↓"; break;
      }
      m[uni] = v;
    }
    return m;
  }();
  auto it = table.find(id);
  if (it == table.end()) fail("UnknownVariant", id);
  return it->second;
}

PropertyReport check_rule_closure(const FiniteAlgebra& alg, const NormRelation& r,
                                  AuditVariant variant, const NormRelation& context,
                                  const Binding& b) {
  PropertyReport rep;
  rep.check_id = to_string(variant);
  const int k = alg.n;
  auto violation = [&](std::initializer_list<Element> w, const char* what) {
    rep.holds = false;
    rep.witness = std::vector<Element>(w);
    rep.notes = what;
    return rep;
  };

  switch (variant) {
    case AuditVariant::TopR:
      if (!r.contains(alg.top, alg.bottom))
        return violation({alg.top, alg.bottom}, "missing required pair");
      break;
    case AuditVariant::BotR:
      if (!r.contains(alg.bottom, alg.top))
        return violation({alg.bottom, alg.top}, "missing required pair");
      break;
    case AuditVariant::TopL:
      if (!r.contains(alg.bottom, alg.top))
        return violation({alg.bottom, alg.top}, "missing required pair");
      break;
    case AuditVariant::BotL:
      if (!r.contains(alg.top, alg.bottom))
        return violation({alg.top, alg.bottom}, "missing required pair");
      break;

    case AuditVariant::SIR:
      for (Element bb = 0; bb < k; ++bb)
        for (Element x = 0; x < k; ++x)
          if (r.contains(bb, x))
            for (Element a = 0; a < k; ++a)
              if (alg.leq(a, bb) && !r.contains(a, x))
                return violation({a, bb, x}, "antecedent strengthening escapes");
      break;
    case AuditVariant::WOR:
      for (Element a = 0; a < k; ++a)
        for (Element y = 0; y < k; ++y)
          if (r.contains(a, y))
            for (Element x = 0; x < k; ++x)
              if (alg.leq(x, y) && !r.contains(a, x))
                return violation({a, x, y}, "consequent weakening escapes");
      break;
    case AuditVariant::AndR:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (r.contains(a, x))
            for (Element y = 0; y < k; ++y)
              if (r.contains(a, y) && !r.contains(a, alg.join(x, y)))
                return violation({a, x, y}, "join of consequents escapes");
      break;
    case AuditVariant::OrR:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (r.contains(a, x))
            for (Element bb = 0; bb < k; ++bb)
              if (r.contains(bb, x) && !r.contains(alg.join(a, bb), x))
                return violation({a, bb, x}, "join of antecedents escapes");
      break;
    case AuditVariant::CTR:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (context.contains(a, x))
            for (Element y = 0; y < k; ++y)
              if (r.contains(alg.meet(a, x), y) && !r.contains(a, y))
                return violation({a, x, y}, "cumulative step escapes");
      break;
    case AuditVariant::EXR: {
      if (!b.impl) fail("UnboundConnective", "impl");
      const auto& impl = *b.impl;
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          for (Element y = 0; y < k; ++y)
            if (context.contains(a, impl[x * k + y]) && alg.meet(a, y) == alg.bottom &&
                !r.contains(a, x))
              return violation({a, x, y}, "excluded-case step escapes");
      break;
    }

    case AuditVariant::SIL:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (r.contains(a, x))
            for (Element bb = 0; bb < k; ++bb)
              if (alg.leq(a, bb) && !r.contains(bb, x))
                return violation({a, bb, x}, "antecedent weakening escapes");
      break;
    case AuditVariant::WOL:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (r.contains(a, x))
            for (Element y = 0; y < k; ++y)
              if (alg.leq(x, y) && !r.contains(a, y))
                return violation({a, x, y}, "consequent weakening escapes");
      break;
    case AuditVariant::AndL:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (r.contains(a, x))
            for (Element y = 0; y < k; ++y)
              if (r.contains(a, y) && !r.contains(a, alg.meet(x, y)))
                return violation({a, x, y}, "meet of consequents escapes");
      break;
    case AuditVariant::OrL:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (r.contains(a, x))
            for (Element bb = 0; bb < k; ++bb)
              if (r.contains(bb, x) && !r.contains(alg.meet(a, bb), x))
                return violation({a, bb, x}, "meet of antecedents escapes");
      break;
    case AuditVariant::CTL: {
      if (!b.coimpl) fail("UnboundConnective", "coimpl");
      const auto& coimpl = *b.coimpl;
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (r.contains(a, x))
            for (Element y = 0; y < k; ++y)
              if (context.contains(coimpl[x * k + a], y) && !r.contains(a, y))
                return violation({a, x, y}, "exclusion step escapes");
      break;
    }

    case AuditVariant::AndD:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (context.contains(a, x))
            for (Element y = 0; y < k; ++y)
              if (r.contains(a, y) && !r.contains(a, alg.meet(x, y)))
                return violation({a, x, y}, "obligation/permission meet escapes");
      break;
    case AuditVariant::OrD:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (context.contains(a, x))
            for (Element bb = 0; bb < k; ++bb)
              if (r.contains(bb, x) && !r.contains(alg.join(a, bb), x))
                return violation({a, bb, x}, "obligation/permission join escapes");
      break;
    case AuditVariant::CTD:
      for (Element a = 0; a < k; ++a)
        for (Element x = 0; x < k; ++x)
          if (context.contains(a, x))
            for (Element y = 0; y < k; ++y)
              if (r.contains(alg.meet(a, x), y) && !r.contains(a, alg.meet(x, y)))
                return violation({a, x, y}, "cumulative permission escapes");
      break;
  }
  rep.holds = true;
  return rep;
}

}  // namespace iolog
