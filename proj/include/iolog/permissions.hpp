#pragma once

#include "iolog/norms.hpp"

namespace iolog {

// Negative permission: x is permitted under a when it is jointly consistent
// with every obligation under a.
NormRelation negative_permission(const FiniteAlgebra& alg, const NormRelation& n);

// Negation-based variant: (a,x) permitted when (a, ~x) is not obligatory.
NormRelation negative_permission_classical(const FiniteAlgebra& alg, const NormRelation& n,
                                           const std::vector<Element>& neg);

// Dual negative permission: some condition inconsistent with a carries no
// obligation of x.
NormRelation dual_negative(const FiniteAlgebra& alg, const NormRelation& n);

// Negation-based variant: (a,x) permitted when (~a, x) is not obligatory.
NormRelation dual_negative_classical(const FiniteAlgebra& alg, const NormRelation& n,
                                     const std::vector<Element>& neg);

struct StaticPermission {
  NormRelation relation;
  // Standing hypothesis P subseteq P_N; a violation is reported, not fatal.
  bool hypothesis_ok = true;
  std::optional<std::pair<Element, Element>> hypothesis_violation;
};

// Union over (a,x) in P of the closures of N + {(a,x)}; the closure of N
// alone when P is empty.
StaticPermission static_positive(const FiniteAlgebra& alg, const NormRelation& p,
                                 const NormRelation& n, RuleSet rules);

// Incoherent when some consistent condition is obligated one outcome by N and
// statically permitted a jointly inconsistent one; witness (c, obligated,
// permitted).
PropertyReport cross_coherent(const FiniteAlgebra& alg, const NormRelation& p,
                              const NormRelation& n, RuleSet rules);

// (a,x) is dynamically permitted when prohibiting some x' inconsistent with x
// under a would make the extended system obligate, under some consistent c,
// an outcome clashing with a static permission at c.
NormRelation dynamic_positive(const FiniteAlgebra& alg, const NormRelation& p,
                              const NormRelation& n, RuleSet rules);

// Negation-based variant with ~x / ~w as the canonical witnesses.
NormRelation dynamic_positive_classical(const FiniteAlgebra& alg, const NormRelation& p,
                                        const NormRelation& n, RuleSet rules,
                                        const std::vector<Element>& neg);

// Finite family of rule-closed extensions of a base system, up-directed and
// cross-coherent with a given P. Validated by generalized_dynamic.
struct ExtensionFamily {
  std::vector<NormRelation> members;
};

// Intersection of the negative permissions of all family members.
// Errors: FamilyEmpty, MemberMissingBase, MemberNotClosed,
// FamilyNotUpDirected, MemberNotCrossCoherent.
NormRelation generalized_dynamic(const FiniteAlgebra& alg, const NormRelation& p,
                                 const NormRelation& n, RuleSet rules,
                                 const ExtensionFamily& family);

// Closure-rule audits over derived relations. The ">" family is read on the
// complement of a negative permission (a prohibition system), the "<" family
// on the complement of a dual negative permission, the "v" family on a static
// positive permission; `context` is the underlying normative system where the
// rule mentions one.
enum class AuditVariant {
  TopR, BotR, SIR, WOR, AndR, OrR, CTR, EXR,   // (X)> on P^c
  TopL, BotL, SIL, WOL, AndL, OrL, CTL,        // (X)< on D^c
  AndD, OrD, CTD,                              // (X)v on S
};

std::string to_string(AuditVariant v);
AuditVariant parse_audit_variant(const std::string& id);  // UnknownVariant

// Closed, or the first violating instance as witness.
// Errors: UnboundConnective for EXR (impl) and CTL (coimpl).
PropertyReport check_rule_closure(const FiniteAlgebra& alg, const NormRelation& audited,
                                  AuditVariant variant, const NormRelation& context,
                                  const Binding& b);

}  // namespace iolog
