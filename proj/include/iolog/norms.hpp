#pragma once

#include <cstdint>
#include <string_view>

#include "iolog/algebra.hpp"

namespace iolog {

// Closure rules on element-level normative systems. Element semantics, with
// (a,x) read as "under condition a, x is obligatory":
//   Top    add (top,top)
//   Bot    add (bot,bot)
//   SI     (b,x) and a<=b           => (a,x)
//   WO     (a,x) and x<=y           => (a,y)
//   And    (a,x),(a,y)              => (a, x/\y)
//   Or     (a,x),(b,x)              => (a\/b, x)
//   CT     (a,x),(a/\x, y)          => (a,y)
//   EX     (a, x\/y) and a/\y = bot => (a,x)
//   RAnd   And guarded by a/\x/\y != bot
//   RCT    CT guarded by a/\x/\y != bot
//   ExOr   (a,x),(b,y)              => (a\/b, x\/y)
//   Eq     no-op: interderivable elements are equal
//   DD     And with the meet as canonical witness
//   UD     Or with the join as canonical witness
enum class Rule : uint8_t { Top, Bot, SI, WO, And, Or, CT, EX, RAnd, RCT, ExOr, Eq, DD, UD };

inline constexpr int kRuleCount = 14;

std::string to_string(Rule r);

class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(std::initializer_list<Rule> rs) {
    for (Rule r : rs) add(r);
  }

  RuleSet& add(Rule r) {
    mask_ |= uint16_t(1) << int(r);
    return *this;
  }
  bool contains(Rule r) const { return (mask_ >> int(r)) & 1; }
  bool empty() const { return mask_ == 0; }
  RuleSet with(Rule r) const { return RuleSet(*this).add(r); }
  bool operator==(const RuleSet&) const = default;

  // N1 = {Top,SI,WO,And}; N2 adds Or; N3 adds CT; N4 adds both.
  static RuleSet preset(std::string_view name);

 private:
  uint16_t mask_ = 0;
};

// Accepts a preset name (N1..N4) or a comma-separated list of rule ids
// (TOP,BOT,SI,WO,AND,OR,CT,EX,R-AND,R-CT,EX-OR,EQ,DD,UD).
RuleSet parse_rules(std::string_view text);  // UnknownRule / UnknownPreset
std::string to_string(RuleSet rules);

// Set of ordered element pairs over one carrier, stored as a bit matrix.
class NormRelation {
 public:
  NormRelation() = default;
  explicit NormRelation(int carrier) : n_(carrier) {
    if (carrier <= 0 || carrier > kMaxCarrier)
      fail("BadTable", "carrier size out of range for a norm relation");
  }

  int carrier() const { return n_; }
  bool contains(Element a, Element x) const { return bit(a * n_ + x); }
  void add(Element a, Element x) { w_[idx(a, x) >> 6] |= uint64_t(1) << (idx(a, x) & 63); }
  void remove(Element a, Element x) { w_[idx(a, x) >> 6] &= ~(uint64_t(1) << (idx(a, x) & 63)); }

  int count() const;
  bool empty() const;
  bool subset_of(const NormRelation& o) const;
  bool operator==(const NormRelation& o) const;

  NormRelation& operator|=(const NormRelation& o);
  NormRelation& operator&=(const NormRelation& o);
  NormRelation complement() const;  // with respect to carrier x carrier

  static NormRelation full(int carrier);

  template <class F>
  void for_each(F&& f) const {
    for (Element a = 0; a < n_; ++a)
      for (Element x = 0; x < n_; ++x)
        if (contains(a, x)) f(a, x);
  }

  std::vector<std::pair<Element, Element>> pairs() const;
  std::string to_text() const;  // "{(a,x), ...}" in row-major order

 private:
  size_t idx(Element a, Element x) const { return size_t(a) * n_ + x; }
  bool bit(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int n_ = 0;
  std::array<uint64_t, (kMaxCarrier * kMaxCarrier + 63) / 64> w_{};
};

// One derivation step per pair of the closure.
struct TraceStep {
  Rule rule = Rule::Top;
  bool axiom = false;  // base pair, no rule
  int prem_count = 0;
  std::pair<Element, Element> prem1{-1, -1};
  std::pair<Element, Element> prem2{-1, -1};
};

struct DerivationTrace {
  int carrier = 0;
  std::vector<TraceStep> step;  // indexed a*carrier+x, valid for closure members
  std::vector<int> rank;        // derivation position, -1 when absent
  std::vector<std::pair<Element, Element>> order;
};

struct ClosureResult {
  NormRelation relation;
  DerivationTrace trace;
};

// Least fixpoint of the selected rules over the pair lattice, computed
// delta-driven. The trace justifies every member by strictly earlier pairs.
ClosureResult close(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules);

// Same fixpoint without trace bookkeeping; used in inner loops.
NormRelation close_relation(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules);

// Full-rescan saturation, kept as an independent reference for the
// delta-driven engine. Both must always produce the same fixpoint.
NormRelation close_naive(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules);

bool is_closed_under(const FiniteAlgebra& alg, const NormRelation& r, Rule rule);
bool is_closed(const FiniteAlgebra& alg, const NormRelation& r, RuleSet rules);

bool derivable(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules, Element a,
               Element x);

// Justification chain for one derivable pair, premises before conclusions.
// Errors: TraceUnavailable when the pair is not in the closure.
std::vector<std::string> extract_trace(const ClosureResult& c, Element a, Element x);

// {x : some a in inputs has (a,x) in the closure of N}.
ElementSet out(const FiniteAlgebra& alg, const NormRelation& base, RuleSet rules,
               ElementSet inputs);

// Incoherent when one consistent condition obligates two jointly inconsistent
// outcomes; the witness is (condition, outcome, outcome).
PropertyReport internally_coherent(const FiniteAlgebra& alg, const NormRelation& r);

// Inclusion restricted to pairs whose condition is consistent.
bool almost_included(const FiniteAlgebra& alg, const NormRelation& r, const NormRelation& s);

}  // namespace iolog
