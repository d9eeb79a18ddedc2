#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iolog {

// Carrier elements are canonical 0-based indices into a finite lattice.
using Element = int;

// Library-wide cap on carrier size; relation bit-matrices are sized for it.
inline constexpr int kMaxCarrier = 32;

// All engine failures carry a stable machine-readable kind ("NotALattice",
// "ParseError", ...) plus a human message.
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string kind_, const std::string& what_)
      : std::runtime_error(kind_ + ": " + what_), kind(std::move(kind_)) {}
};

[[noreturn]] inline void fail(std::string kind, const std::string& what) {
  throw Error(std::move(kind), what);
}

// Verdict of one executable check. A false verdict carries the violating
// tuple; re-running the same check reproduces it (everything here is pure).
struct PropertyReport {
  std::string check_id;
  bool holds = true;
  std::optional<std::vector<Element>> witness;
  std::string notes;
  long long instances = 0;
  double millis = 0.0;
};

// Subset of one carrier as a bit mask.
struct ElementSet {
  uint32_t bits = 0;

  static ElementSet of(std::initializer_list<Element> xs) {
    ElementSet s;
    for (Element x : xs) s.add(x);
    return s;
  }
  bool contains(Element x) const { return (bits >> x) & 1u; }
  void add(Element x) { bits |= 1u << x; }
  void remove(Element x) { bits &= ~(1u << x); }
  bool empty() const { return bits == 0; }
  int count() const { return __builtin_popcount(bits); }
  bool operator==(const ElementSet&) const = default;
};

// Raw algebra description accepted by build_algebra. `leq` lists order pairs
// (i,j) meaning i <= j; reflexivity and transitivity are completed before
// validation. Unary tables have `size` entries, binary tables size*size
// entries in row-major element order.
struct AlgebraSpec {
  std::string name;
  int size = 0;
  std::vector<std::pair<int, int>> leq;
  std::map<std::string, std::vector<Element>> unary_ops;
  std::map<std::string, std::vector<Element>> binary_ops;
};

// A finite bounded lattice with named designated operations. Instances are
// immutable once built (construct through build_algebra or catalog) and safe
// to share across threads.
struct FiniteAlgebra {
  std::string name;
  int n = 0;
  Element bottom = 0;
  Element top = 0;
  std::map<std::string, std::vector<Element>> unary_ops;
  std::map<std::string, std::vector<Element>> binary_ops;

  bool leq(Element a, Element b) const { return leq_[a * n + b] != 0; }
  Element meet(Element a, Element b) const { return meet_[a * n + b]; }
  Element join(Element a, Element b) const { return join_[a * n + b]; }

  const std::vector<Element>* unary(const std::string& op) const {
    auto it = unary_ops.find(op);
    return it == unary_ops.end() ? nullptr : &it->second;
  }
  const std::vector<Element>* binary(const std::string& op) const {
    auto it = binary_ops.find(op);
    return it == binary_ops.end() ? nullptr : &it->second;
  }

  std::vector<char> leq_;        // n*n adjacency of the partial order
  std::vector<Element> meet_;    // n*n glb table
  std::vector<Element> join_;    // n*n lub table
};

// Connective symbols resolved against one algebra's operations. An absent
// symbol means the logic's language has no such term; "and"/"or", when bound,
// are the lattice meet/join. Tables are copied so a Binding stays valid on
// its own.
struct Binding {
  bool has_and = false;
  bool has_or = false;
  std::optional<Element> top;
  std::optional<Element> bot;
  std::optional<std::vector<Element>> neg;     // unary table
  std::optional<std::vector<Element>> impl;    // n*n table
  std::optional<std::vector<Element>> coimpl;  // n*n table
};

// Validates and completes a raw description.
//   - leq gets its reflexive-transitive closure, then antisymmetry is checked
//     (NotAPartialOrder) and every pair must have a glb and lub (NotALattice).
//   - meet/join are recomputed from leq; if the spec supplies tables named
//     "meet"/"join" they must agree (BadTable) and are dropped afterwards.
//   - every other table must be total and in range (BadTable).
FiniteAlgebra build_algebra(const AlgebraSpec& spec);

struct CatalogEntry {
  FiniteAlgebra algebra;
  Binding binding;
};

// Built-in algebras with their standard bindings:
//   B2, B4, B8      Boolean; all connectives bound (impl = ~a|b, coimpl = a&~b)
//   chain(n)        Heyting chain; and/or/impl/top/bot, neg = x -> bot
//   DM4             involutive antitone negation on a 4-chain; and/or/neg/top/bot
//   O6              benzene ortholattice; and/or/neg/top/bot
//   N5, M3          bare bounded lattices; and/or/top/bot
CatalogEntry catalog(const std::string& name);  // UnknownCatalogName
const std::vector<std::string>& catalog_names();

enum class MetaProp {
  AndP, OrP, OrS, BotP, TopW, TopP, NegW, NegIr, NegIl, NegI,
  NegA, NegP, TildeA, TildeP, NegS, ImplP, CoimplP,
};

inline constexpr std::array<MetaProp, 17> kAllMetaProps = {
    MetaProp::AndP, MetaProp::OrP, MetaProp::OrS, MetaProp::BotP,
    MetaProp::TopW, MetaProp::TopP, MetaProp::NegW, MetaProp::NegIr,
    MetaProp::NegIl, MetaProp::NegI, MetaProp::NegA, MetaProp::NegP,
    MetaProp::TildeA, MetaProp::TildeP, MetaProp::NegS, MetaProp::ImplP,
    MetaProp::CoimplP,
};

std::string to_string(MetaProp p);
MetaProp parse_metaprop(const std::string& id);  // ASCII ids or unicode aliases

// Decides one metalogical property by exhaustive quantification over the
// carrier. Requires the symbols the property mentions to be bound; otherwise
// the report is false with an "unbound" note and an empty witness.
PropertyReport check_metaproperty(const FiniteAlgebra& alg, const Binding& b, MetaProp prop);

}  // namespace iolog
