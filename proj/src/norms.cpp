#include "iolog/norms.hpp"

#include <algorithm>
#include <sstream>

namespace iolog {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::Top: return "TOP";
    case Rule::Bot: return "BOT";
    case Rule::SI: return "SI";
    case Rule::WO: return "WO";
    case Rule::And: return "AND";
    case Rule::Or: return "OR";
    case Rule::CT: return "CT";
    case Rule::EX: return "EX";
    case Rule::RAnd: return "R-AND";
    case Rule::RCT: return "R-CT";
    case Rule::ExOr: return "EX-OR";
    case Rule::Eq: return "EQ";
    case Rule::DD: return "DD";
    case Rule::UD: return "UD";
  }
  fail("UnknownRule", "bad enum value");
}

RuleSet RuleSet::preset(std::string_view name) {
  if (name == "N1") return {Rule::Top, Rule::SI, Rule::WO, Rule::And};
  if (name == "N2") return {Rule::Top, Rule::SI, Rule::WO, Rule::And, Rule::Or};
  if (name == "N3") return {Rule::Top, Rule::SI, Rule::WO, Rule::And, Rule::CT};
  if (name == "N4") return {Rule::Top, Rule::SI, Rule::WO, Rule::And, Rule::Or, Rule::CT};
  fail("UnknownPreset", std::string(name));
}

RuleSet parse_rules(std::string_view text) {
  if (text.empty() || text == "NONE") return {};
  if (text.size() == 2 && text[0] == 'N' && text[1] >= '1' && text[1] <= '4')
    return RuleSet::preset(text);
  RuleSet out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    bool found = false;
    for (int i = 0; i < kRuleCount; ++i) {
      Rule r = Rule(i);
      std::string id = to_string(r);
      std::string alt = id;
      alt.erase(std::remove(alt.begin(), alt.end(), '-'), alt.end());
      if (item == id || item == alt || (item == "R_AND" && r == Rule::RAnd) ||
          (item == "R_CT" && r == Rule::RCT) || (item == "EX_OR" && r == Rule::ExOr)) {
        out.add(r);
        found = true;
        break;
      }
    }
    if (!found) fail("UnknownRule", std::string(item));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

std::string to_string(RuleSet rules) {
  std::string s;
  for (int i = 0; i < kRuleCount; ++i)
    if (rules.contains(Rule(i))) {
      if (!s.empty()) s += ",";
      s += to_string(Rule(i));
    }
  return s;
}

int NormRelation::count() const {
  int c = 0;
  for (uint64_t w : w_) c += __builtin_popcountll(w);
  return c;
}

bool NormRelation::empty() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

bool NormRelation::subset_of(const NormRelation& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool NormRelation::operator==(const NormRelation& o) const {
  return n_ == o.n_ && w_ == o.w_;
}

NormRelation& NormRelation::operator|=(const NormRelation& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

NormRelation& NormRelation::operator&=(const NormRelation& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

NormRelation NormRelation::complement() const {
  NormRelation r(n_);
  for (Element a = 0; a < n_; ++a)
    for (Element x = 0; x < n_; ++x)
      if (!contains(a, x)) r.add(a, x);
  return r;
}

NormRelation NormRelation::full(int carrier) {
  NormRelation r(carrier);
  for (Element a = 0; a < carrier; ++a)
    for (Element x = 0; x < carrier; ++x) r.add(a, x);
  return r;
}

std::vector<std::pair<Element, Element>> NormRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for_each([&](Element a, Element x) { out.push_back({a, x}); });
  return out;
}

std::string NormRelation::to_text() const {
  std::string s = "{";
  bool first = true;
  for_each([&](Element a, Element x) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(a) + "," + std::to_string(x) + ")";
  });
  return s + "}";
}

namespace {

// Shared delta-driven engine. `record(a, x, step)` fires exactly once per
// newly derived pair.
template <class Record>
NormRelation saturate(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules,
                      Record&& record) {
  const int n = alg.n;
  NormRelation r(n);
  std::vector<std::pair<Element, Element>> delta, next;

  auto emit = [&](Element a, Element x, const TraceStep& step) {
    if (r.contains(a, x)) return;
    r.add(a, x);
    next.push_back({a, x});
    record(a, x, step);
  };

  base.for_each([&](Element a, Element x) {
    TraceStep s;
    s.axiom = true;
    emit(a, x, s);
  });
  if (rules.contains(Rule::Top)) {
    TraceStep s;
    s.rule = Rule::Top;
    emit(alg.top, alg.top, s);
  }
  if (rules.contains(Rule::Bot)) {
    TraceStep s;
    s.rule = Rule::Bot;
    emit(alg.bottom, alg.bottom, s);
  }

  auto one_premise = [&](Rule rule, Element a, Element x, Element ca, Element cx) {
    TraceStep s;
    s.rule = rule;
    s.prem_count = 1;
    s.prem1 = {a, x};
    emit(ca, cx, s);
  };
  auto two_premise = [&](Rule rule, Element a, Element x, Element b, Element y, Element ca,
                         Element cx) {
    TraceStep s;
    s.rule = rule;
    s.prem_count = 2;
    s.prem1 = {a, x};
    s.prem2 = {b, y};
    emit(ca, cx, s);
  };

  std::swap(delta, next);
  while (!delta.empty()) {
    next.clear();
    for (auto [a, x] : delta) {
      if (rules.contains(Rule::SI))
        for (Element a2 = 0; a2 < n; ++a2)
          if (alg.leq(a2, a)) one_premise(Rule::SI, a, x, a2, x);
      if (rules.contains(Rule::WO))
        for (Element y = 0; y < n; ++y)
          if (alg.leq(x, y)) one_premise(Rule::WO, a, x, a, y);
      if (rules.contains(Rule::EX))
        for (Element xx = 0; xx < n; ++xx)
          for (Element yy = 0; yy < n; ++yy)
            if (alg.join(xx, yy) == x && alg.meet(a, yy) == alg.bottom)
              one_premise(Rule::EX, a, x, a, xx);

      // Pair the delta member against the whole current relation; the
      // relation already includes this wave, so delta-delta pairs are covered.
      for (Element b = 0; b < n; ++b)
        for (Element y = 0; y < n; ++y) {
          if (!r.contains(b, y)) continue;
          if (b == a) {
            if (rules.contains(Rule::And))
              two_premise(Rule::And, a, x, b, y, a, alg.meet(x, y));
            if (rules.contains(Rule::DD))
              two_premise(Rule::DD, a, x, b, y, a, alg.meet(x, y));
            if (rules.contains(Rule::RAnd) && alg.meet(alg.meet(a, x), y) != alg.bottom)
              two_premise(Rule::RAnd, a, x, b, y, a, alg.meet(x, y));
          }
          if (y == x) {
            if (rules.contains(Rule::Or))
              two_premise(Rule::Or, a, x, b, y, alg.join(a, b), x);
            if (rules.contains(Rule::UD))
              two_premise(Rule::UD, a, x, b, y, alg.join(a, b), x);
          }
          if (rules.contains(Rule::ExOr))
            two_premise(Rule::ExOr, a, x, b, y, alg.join(a, b), alg.join(x, y));
          if (rules.contains(Rule::CT) || rules.contains(Rule::RCT)) {
            // (a,x) first premise, (b,y) second: b must be a /\ x.
            if (alg.meet(a, x) == b) {
              if (rules.contains(Rule::CT)) two_premise(Rule::CT, a, x, b, y, a, y);
              if (rules.contains(Rule::RCT) && alg.meet(alg.meet(a, x), y) != alg.bottom)
                two_premise(Rule::RCT, a, x, b, y, a, y);
            }
            // (b,y) first premise, (a,x) second: a must be b /\ y.
            if (alg.meet(b, y) == a) {
              if (rules.contains(Rule::CT)) two_premise(Rule::CT, b, y, a, x, b, x);
              if (rules.contains(Rule::RCT) && alg.meet(alg.meet(b, y), x) != alg.bottom)
                two_premise(Rule::RCT, b, y, a, x, b, x);
            }
          }
        }
    }
    std::swap(delta, next);
  }
  return r;
}

}  // namespace

ClosureResult close(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules) {
  ClosureResult res;
  res.trace.carrier = alg.n;
  res.trace.step.assign(size_t(alg.n) * alg.n, TraceStep{});
  res.trace.rank.assign(size_t(alg.n) * alg.n, -1);
  res.relation = saturate(alg, base, rules, [&](Element a, Element x, const TraceStep& s) {
    res.trace.step[size_t(a) * alg.n + x] = s;
    res.trace.rank[size_t(a) * alg.n + x] = int(res.trace.order.size());
    res.trace.order.push_back({a, x});
  });
  return res;
}

NormRelation close_relation(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules) {
  return saturate(alg, base, rules, [](Element, Element, const TraceStep&) {});
}

NormRelation close_naive(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules) {
  const int n = alg.n;
  NormRelation r = base;
  if (rules.contains(Rule::Top)) r.add(alg.top, alg.top);
  if (rules.contains(Rule::Bot)) r.add(alg.bottom, alg.bottom);
  for (bool changed = true; changed;) {
    changed = false;
    NormRelation add(n);
    for (Element a = 0; a < n; ++a)
      for (Element x = 0; x < n; ++x) {
        if (!r.contains(a, x)) continue;
        if (rules.contains(Rule::SI))
          for (Element a2 = 0; a2 < n; ++a2)
            if (alg.leq(a2, a)) add.add(a2, x);
        if (rules.contains(Rule::WO))
          for (Element y = 0; y < n; ++y)
            if (alg.leq(x, y)) add.add(a, y);
        if (rules.contains(Rule::EX))
          for (Element xx = 0; xx < n; ++xx)
            for (Element yy = 0; yy < n; ++yy)
              if (alg.join(xx, yy) == x && alg.meet(a, yy) == alg.bottom) add.add(a, xx);
        for (Element b = 0; b < n; ++b)
          for (Element y = 0; y < n; ++y) {
            if (!r.contains(b, y)) continue;
            if (a == b) {
              if (rules.contains(Rule::And) || rules.contains(Rule::DD))
                add.add(a, alg.meet(x, y));
              if (rules.contains(Rule::RAnd) && alg.meet(alg.meet(a, x), y) != alg.bottom)
                add.add(a, alg.meet(x, y));
            }
            if (x == y)
              if (rules.contains(Rule::Or) || rules.contains(Rule::UD))
                add.add(alg.join(a, b), x);
            if (rules.contains(Rule::ExOr)) add.add(alg.join(a, b), alg.join(x, y));
            if (alg.meet(a, x) == b) {
              if (rules.contains(Rule::CT)) add.add(a, y);
              if (rules.contains(Rule::RCT) && alg.meet(alg.meet(a, x), y) != alg.bottom)
                add.add(a, y);
            }
          }
      }
    if (!add.subset_of(r)) {
      r |= add;
      changed = true;
    }
  }
  return r;
}

bool is_closed_under(const FiniteAlgebra& alg, const NormRelation& r, Rule rule) {
  const int n = alg.n;
  switch (rule) {
    case Rule::Top: return r.contains(alg.top, alg.top);
    case Rule::Bot: return r.contains(alg.bottom, alg.bottom);
    case Rule::Eq: return true;
    default: break;
  }
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x) {
      if (!r.contains(a, x)) continue;
      switch (rule) {
        case Rule::SI:
          for (Element a2 = 0; a2 < n; ++a2)
            if (alg.leq(a2, a) && !r.contains(a2, x)) return false;
          break;
        case Rule::WO:
          for (Element y = 0; y < n; ++y)
            if (alg.leq(x, y) && !r.contains(a, y)) return false;
          break;
        case Rule::EX:
          for (Element xx = 0; xx < n; ++xx)
            for (Element yy = 0; yy < n; ++yy)
              if (alg.join(xx, yy) == x && alg.meet(a, yy) == alg.bottom &&
                  !r.contains(a, xx))
                return false;
          break;
        default:
          for (Element b = 0; b < n; ++b)
            for (Element y = 0; y < n; ++y) {
              if (!r.contains(b, y)) continue;
              switch (rule) {
                case Rule::And:
                case Rule::DD:
                  if (a == b && !r.contains(a, alg.meet(x, y))) return false;
                  break;
                case Rule::RAnd:
                  if (a == b && alg.meet(alg.meet(a, x), y) != alg.bottom &&
                      !r.contains(a, alg.meet(x, y)))
                    return false;
                  break;
                case Rule::Or:
                case Rule::UD:
                  if (x == y && !r.contains(alg.join(a, b), x)) return false;
                  break;
                case Rule::ExOr:
                  if (!r.contains(alg.join(a, b), alg.join(x, y))) return false;
                  break;
                case Rule::CT:
                  if (alg.meet(a, x) == b && !r.contains(a, y)) return false;
                  break;
                case Rule::RCT:
                  if (alg.meet(a, x) == b && alg.meet(alg.meet(a, x), y) != alg.bottom &&
                      !r.contains(a, y))
                    return false;
                  break;
                default: break;
              }
            }
      }
    }
  return true;
}

bool is_closed(const FiniteAlgebra& alg, const NormRelation& r, RuleSet rules) {
  for (int i = 0; i < kRuleCount; ++i)
    if (rules.contains(Rule(i)) && !is_closed_under(alg, r, Rule(i))) return false;
  return true;
}

bool derivable(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules, Element a,
               Element x) {
  return close_relation(alg, base, rules).contains(a, x);
}

namespace {

std::string pair_text(std::pair<Element, Element> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

void trace_into(const ClosureResult& c, Element a, Element x, std::vector<char>& seen,
                std::vector<std::string>& out) {
  const int n = c.trace.carrier;
  const size_t i = size_t(a) * n + x;
  if (seen[i]) return;
  seen[i] = 1;
  const TraceStep& s = c.trace.step[i];
  if (s.axiom) {
    out.push_back(pair_text({a, x}) + " [axiom]");
    return;
  }
  if (s.prem_count >= 1) trace_into(c, s.prem1.first, s.prem1.second, seen, out);
  if (s.prem_count >= 2) trace_into(c, s.prem2.first, s.prem2.second, seen, out);
  std::string line = pair_text({a, x}) + " by " + to_string(s.rule);
  if (s.prem_count >= 1) {
    line += " from " + pair_text(s.prem1);
    if (s.prem_count >= 2) line += ", " + pair_text(s.prem2);
  }
  out.push_back(line);
}

}  // namespace

std::vector<std::string> extract_trace(const ClosureResult& c, Element a, Element x) {
  const int n = c.trace.carrier;
  if (a < 0 || a >= n || x < 0 || x >= n || !c.relation.contains(a, x))
    fail("TraceUnavailable", "pair " + pair_text({a, x}) + " is not derivable");
  std::vector<char> seen(size_t(n) * n, 0);
  std::vector<std::string> out;
  trace_into(c, a, x, seen, out);
  return out;
}

ElementSet out(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules,
               ElementSet inputs) {
  NormRelation cl = close_relation(alg, base, rules);
  ElementSet result;
  for (Element a = 0; a < alg.n; ++a) {
    if (!inputs.contains(a)) continue;
    for (Element x = 0; x < alg.n; ++x)
      if (cl.contains(a, x)) result.add(x);
  }
  return result;
}

PropertyReport internally_coherent(const FiniteAlgebra& alg, const NormRelation& r) {
  PropertyReport rep;
  rep.check_id = "internally_coherent";
  for (Element a = 0; a < alg.n; ++a) {
    if (a == alg.bottom) continue;
    for (Element x = 0; x < alg.n; ++x) {
      if (!r.contains(a, x)) continue;
      for (Element y = 0; y < alg.n; ++y)
        if (r.contains(a, y) && alg.meet(x, y) == alg.bottom) {
          rep.holds = false;
          rep.witness = std::vector<Element>{a, x, y};
          rep.notes = "condition obligates jointly inconsistent outcomes";
          return rep;
        }
    }
  }
  rep.holds = true;
  return rep;
}

bool almost_included(const FiniteAlgebra& alg, const NormRelation& r, const NormRelation& s) {
  for (Element a = 0; a < alg.n; ++a) {
    if (a == alg.bottom) continue;
    for (Element x = 0; x < alg.n; ++x)
      if (r.contains(a, x) && !s.contains(a, x)) return false;
  }
  return true;
}

}  // namespace iolog
