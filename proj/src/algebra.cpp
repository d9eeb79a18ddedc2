#include "iolog/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace iolog {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_table(const std::string& op, const std::vector<Element>& t, size_t want, int n) {
  if (t.size() != want)
    fail("BadTable", "operation '" + op + "' has " + std::to_string(t.size()) +
                         " entries, expected " + std::to_string(want));
  for (Element v : t)
    if (v < 0 || v >= n)
      fail("BadTable", "operation '" + op + "' maps outside the carrier (value " +
                           std::to_string(v) + ")");
}

}  // namespace

FiniteAlgebra build_algebra(const AlgebraSpec& spec) {
  const int n = spec.size;
  if (n <= 0) fail("BadTable", "carrier size must be positive");
  if (n > kMaxCarrier)
    fail("CarrierTooLarge", "carrier size " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxCarrier));

  FiniteAlgebra a;
  a.name = spec.name;
  a.n = n;
  a.leq_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) a.leq_[i * n + i] = 1;
  for (auto [i, j] : spec.leq) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail("NotAPartialOrder", "order pair " + pair_str(i, j) + " outside the carrier");
    a.leq_[i * n + j] = 1;
  }

  // Transitive closure, then antisymmetry.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.leq_[i * n + j])
          for (int k = 0; k < n; ++k)
            if (a.leq_[j * n + k] && !a.leq_[i * n + k]) {
              a.leq_[i * n + k] = 1;
              changed = true;
            }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.leq_[i * n + j] && a.leq_[j * n + i])
        fail("NotAPartialOrder", "antisymmetry fails on " + pair_str(i, j));

  // Greatest lower / least upper bounds for every pair.
  a.meet_.assign(n * n, 0);
  a.join_.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Element glb = -1, lub = -1;
      for (int c = 0; c < n; ++c) {
        if (a.leq(c, x) && a.leq(c, y)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (a.leq(d, x) && a.leq(d, y) && !a.leq(d, c)) greatest = false;
          if (greatest) glb = c;
        }
        if (a.leq(x, c) && a.leq(y, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (a.leq(x, d) && a.leq(y, d) && !a.leq(c, d)) least = false;
          if (least) lub = c;
        }
      }
      if (glb < 0) fail("NotALattice", "pair " + pair_str(x, y) + " has no meet");
      if (lub < 0) fail("NotALattice", "pair " + pair_str(x, y) + " has no join");
      a.meet_[x * n + y] = glb;
      a.join_[x * n + y] = lub;
    }

  a.bottom = 0;
  a.top = 0;
  for (int i = 1; i < n; ++i) {
    a.bottom = a.meet(a.bottom, i);
    a.top = a.join(a.top, i);
  }

  for (auto& [op, t] : spec.unary_ops) {
    check_table(op, t, n, n);
    a.unary_ops[op] = t;
  }
  for (auto& [op, t] : spec.binary_ops) {
    check_table(op, t, size_t(n) * n, n);
    if (op == "meet" || op == "join") {
      const auto& want = op == "meet" ? a.meet_ : a.join_;
      if (t != want)
        fail("BadTable", "supplied '" + op + "' table disagrees with the order");
      continue;  // canonical tables live in the dedicated fields
    }
    a.binary_ops[op] = t;
  }

  // Residuals are filled in when unspecified and the lattice admits them:
  // impl(a,b) is the largest c with a /\ c <= b, coimpl(a,b) the smallest c
  // with a <= c \/ b.
  if (!a.binary_ops.count("impl")) {
    std::vector<Element> t(size_t(n) * n);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        Element best = a.bottom;
        for (int c = 0; c < n; ++c)
          if (a.leq(a.meet(x, c), y)) best = a.join(best, c);
        if (!a.leq(a.meet(x, best), y)) ok = false;
        t[x * n + y] = best;
      }
    if (ok) a.binary_ops["impl"] = std::move(t);
  }
  if (!a.binary_ops.count("coimpl")) {
    std::vector<Element> t(size_t(n) * n);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        Element best = a.top;
        for (int c = 0; c < n; ++c)
          if (a.leq(x, a.join(c, y))) best = a.meet(best, c);
        if (!a.leq(x, a.join(best, y))) ok = false;
        t[x * n + y] = best;
      }
    if (ok) a.binary_ops["coimpl"] = std::move(t);
  }
  return a;
}

namespace {

FiniteAlgebra boolean_algebra(int atoms) {
  AlgebraSpec s;
  s.name = "B" + std::to_string(1 << atoms);
  s.size = 1 << atoms;
  const int n = s.size;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i | j) == j) s.leq.push_back({i, j});
  std::vector<Element> neg(n), impl(n * n), coimpl(n * n);
  for (int i = 0; i < n; ++i) neg[i] = (n - 1) ^ i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      impl[i * n + j] = neg[i] | j;
      coimpl[i * n + j] = i & neg[j];
    }
  s.unary_ops["neg"] = neg;
  s.binary_ops["impl"] = impl;
  s.binary_ops["coimpl"] = coimpl;
  return build_algebra(s);
}

FiniteAlgebra chain_algebra(int k) {
  AlgebraSpec s;
  s.name = "chain(" + std::to_string(k) + ")";
  s.size = k;
  for (int i = 0; i + 1 < k; ++i) s.leq.push_back({i, i + 1});
  // Heyting implication by residuation: a -> b is the largest c with a&c <= b,
  // which on a chain is top when a <= b and b otherwise.
  std::vector<Element> impl(k * k), neg(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) impl[a * k + b] = a <= b ? k - 1 : b;
  for (int a = 0; a < k; ++a) neg[a] = impl[a * k + 0];
  s.binary_ops["impl"] = impl;
  s.unary_ops["neg"] = neg;
  return build_algebra(s);
}

// Each catalog entry binds exactly its logic's signature; the algebra may
// host further tables (e.g. derived residuals) without the binding naming
// them.
Binding make_binding(const FiniteAlgebra& a, bool with_neg, bool with_impl, bool with_coimpl) {
  Binding b;
  b.has_and = true;
  b.has_or = true;
  b.top = a.top;
  b.bot = a.bottom;
  if (with_neg) b.neg = *a.unary("neg");
  if (with_impl) b.impl = *a.binary("impl");
  if (with_coimpl) b.coimpl = *a.binary("coimpl");
  return b;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "B2", "B4", "B8", "chain(3)", "DM4", "O6", "N5", "M3",
  };
  return names;
}

CatalogEntry catalog(const std::string& name) {
  if (name == "B2") {
    auto a = boolean_algebra(1);
    return {a, make_binding(a, true, true, true)};
  }
  if (name == "B4") {
    auto a = boolean_algebra(2);
    return {a, make_binding(a, true, true, true)};
  }
  if (name == "B8") {
    auto a = boolean_algebra(3);
    return {a, make_binding(a, true, true, true)};
  }
  if (name.rfind("chain(", 0) == 0 && name.back() == ')') {
    int k = 0;
    try {
      k = std::stoi(name.substr(6, name.size() - 7));
    } catch (const std::exception&) {
      fail("UnknownCatalogName", name);
    }
    if (k < 2 || k > kMaxCarrier) fail("UnknownCatalogName", name + " (length out of range)");
    auto a = chain_algebra(k);
    return {a, make_binding(a, true, true, false)};
  }
  if (name == "DM4") {
    AlgebraSpec s;
    s.name = "DM4";
    s.size = 4;
    s.leq = {{0, 1}, {1, 2}, {2, 3}};
    s.unary_ops["neg"] = {3, 2, 1, 0};
    auto a = build_algebra(s);
    return {a, make_binding(a, true, false, false)};
  }
  if (name == "O6") {
    AlgebraSpec s;
    s.name = "O6";
    s.size = 6;
    s.leq = {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
    s.unary_ops["neg"] = {5, 4, 3, 2, 1, 0};
    auto a = build_algebra(s);
    return {a, make_binding(a, true, false, false)};
  }
  if (name == "N5") {
    AlgebraSpec s;
    s.name = "N5";
    s.size = 5;
    s.leq = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
    auto a = build_algebra(s);
    return {a, make_binding(a, false, false, false)};
  }
  if (name == "M3") {
    AlgebraSpec s;
    s.name = "M3";
    s.size = 5;
    s.leq = {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}};
    auto a = build_algebra(s);
    return {a, make_binding(a, false, false, false)};
  }
  fail("UnknownCatalogName", name);
}

std::string to_string(MetaProp p) {
  switch (p) {
    case MetaProp::AndP: return "and_P";
    case MetaProp::OrP: return "or_P";
    case MetaProp::OrS: return "or_S";
    case MetaProp::BotP: return "bot_P";
    case MetaProp::TopW: return "top_W";
    case MetaProp::TopP: return "top_P";
    case MetaProp::NegW: return "neg_W";
    case MetaProp::NegIr: return "neg_Ir";
    case MetaProp::NegIl: return "neg_Il";
    case MetaProp::NegI: return "neg_I";
    case MetaProp::NegA: return "neg_A";
    case MetaProp::NegP: return "neg_P";
    case MetaProp::TildeA: return "tilde_A";
    case MetaProp::TildeP: return "tilde_P";
    case MetaProp::NegS: return "neg_S";
    case MetaProp::ImplP: return "impl_P";
    case MetaProp::CoimplP: return "coimpl_P";
  }
  fail("UnknownProperty", "bad enum value");
}

MetaProp parse_metaprop(const std::string& id) {
  static const std::map<std::string, MetaProp> alias = {
      {"and_P", MetaProp::AndP},     {"∧_P", MetaProp::AndP},
      {"or_P", MetaProp::OrP},       {"∨_P", MetaProp::OrP},
      {"or_S", MetaProp::OrS},       {"∨_S", MetaProp::OrS},
      {"bot_P", MetaProp::BotP},     {"⊥_P", MetaProp::BotP},
      {"top_W", MetaProp::TopW},     {"⊤_W", MetaProp::TopW},
      {"top_P", MetaProp::TopP},     {"⊤_P", MetaProp::TopP},
      {"neg_W", MetaProp::NegW},     {"¬_W", MetaProp::NegW},
      {"neg_Ir", MetaProp::NegIr},   {"¬_Ir", MetaProp::NegIr},
      {"neg_Il", MetaProp::NegIl},   {"¬_Il", MetaProp::NegIl},
      {"neg_I", MetaProp::NegI},     {"¬_I", MetaProp::NegI},
      {"neg_A", MetaProp::NegA},     {"¬_A", MetaProp::NegA},
      {"neg_P", MetaProp::NegP},     {"¬_P", MetaProp::NegP},
      {"tilde_A", MetaProp::TildeA}, {"~_A", MetaProp::TildeA},
      {"tilde_P", MetaProp::TildeP}, {"~_P", MetaProp::TildeP},
      {"neg_S", MetaProp::NegS},     {"¬_S", MetaProp::NegS},
      {"impl_P", MetaProp::ImplP},   {"→_P", MetaProp::ImplP},
      {"coimpl_P", MetaProp::CoimplP}, {"⤙_P", MetaProp::CoimplP},
  };
  auto it = alias.find(id);
  if (it == alias.end()) fail("UnknownProperty", id);
  return it->second;
}

namespace {

PropertyReport unbound(const std::string& id, const std::string& symbol) {
  PropertyReport r;
  r.check_id = id;
  r.holds = false;
  r.witness = std::vector<Element>{};
  r.notes = "symbol unbound: " + symbol;
  return r;
}

PropertyReport verdict(const std::string& id, bool ok, std::vector<Element> w,
                       std::string why_failed = {}) {
  PropertyReport r;
  r.check_id = id;
  r.holds = ok;
  if (!ok) {
    r.witness = std::move(w);
    r.notes = std::move(why_failed);
  }
  return r;
}

}  // namespace

PropertyReport check_metaproperty(const FiniteAlgebra& alg, const Binding& b, MetaProp prop) {
  const std::string id = to_string(prop);
  const int n = alg.n;

  auto need_neg = [&]() -> const std::vector<Element>* {
    return b.neg ? &*b.neg : nullptr;
  };

  switch (prop) {
    case MetaProp::AndP:
      return b.has_and ? verdict(id, true, {}) : unbound(id, "and");
    case MetaProp::OrP:
      return b.has_or ? verdict(id, true, {}) : unbound(id, "or");
    case MetaProp::OrS: {
      if (!b.has_and) return unbound(id, "and");
      if (!b.has_or) return unbound(id, "or");
      for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < n; ++x)
          for (Element c = 0; c < n; ++c) {
            if (alg.meet(c, alg.join(a, x)) != alg.join(alg.meet(c, a), alg.meet(c, x)))
              return verdict(id, false, {c, a, x}, "meet does not distribute over join");
            if (alg.join(c, alg.meet(a, x)) != alg.meet(alg.join(c, a), alg.join(c, x)))
              return verdict(id, false, {c, a, x}, "join does not distribute over meet");
          }
      return verdict(id, true, {});
    }
    case MetaProp::BotP:
      if (!b.bot) return unbound(id, "bot");
      return verdict(id, *b.bot == alg.bottom, {*b.bot}, "bound constant must be the least element");
    case MetaProp::TopW:
      if (!b.top) return unbound(id, "top");
      return verdict(id, *b.top == alg.top, {*b.top}, "bound constant must be the greatest element");
    case MetaProp::TopP: {
      // Same carrier-level content as top_W; the theorem set is nonempty
      // exactly when a top constant is bound.
      if (!b.top) return unbound(id, "top");
      return verdict(id, *b.top == alg.top, {*b.top});
    }
    case MetaProp::NegW: {
      auto* t = need_neg();
      if (!t) return unbound(id, "neg");
      for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < n; ++x)
          if (alg.leq(a, x) && !alg.leq((*t)[x], (*t)[a]))
            return verdict(id, false, {a, x}, "negation is not antitone");
      return verdict(id, true, {});
    }
    case MetaProp::NegIr: {
      auto* t = need_neg();
      if (!t) return unbound(id, "neg");
      for (Element a = 0; a < n; ++a)
        if (!alg.leq(a, (*t)[(*t)[a]])) return verdict(id, false, {a});
      return verdict(id, true, {});
    }
    case MetaProp::NegIl: {
      auto* t = need_neg();
      if (!t) return unbound(id, "neg");
      for (Element a = 0; a < n; ++a)
        if (!alg.leq((*t)[(*t)[a]], a)) return verdict(id, false, {a});
      return verdict(id, true, {});
    }
    case MetaProp::NegI: {
      auto ir = check_metaproperty(alg, b, MetaProp::NegIr);
      if (!ir.holds) return verdict(id, false, ir.witness.value_or(std::vector<Element>{}), ir.notes);
      auto il = check_metaproperty(alg, b, MetaProp::NegIl);
      if (!il.holds) return verdict(id, false, il.witness.value_or(std::vector<Element>{}), il.notes);
      return verdict(id, true, {});
    }
    case MetaProp::NegA: {
      auto* t = need_neg();
      if (!t) return unbound(id, "neg");
      for (Element a = 0; a < n; ++a)
        if (alg.meet(a, (*t)[a]) != alg.bottom) return verdict(id, false, {a});
      return verdict(id, true, {});
    }
    case MetaProp::NegP: {
      if (!b.has_and) return unbound(id, "and");
      auto* t = need_neg();
      if (!t) return unbound(id, "neg");
      for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < n; ++x)
          if (!alg.leq(alg.meet(a, (*t)[alg.meet(a, x)]), (*t)[x]))
            return verdict(id, false, {a, x});
      return verdict(id, true, {});
    }
    case MetaProp::TildeA: {
      auto* t = need_neg();
      if (!t) return unbound(id, "neg");
      if (!b.top) return unbound(id, "top");
      for (Element a = 0; a < n; ++a)
        if (alg.join(a, (*t)[a]) != alg.top) return verdict(id, false, {a});
      return verdict(id, true, {});
    }
    case MetaProp::TildeP: {
      if (!b.has_or) return unbound(id, "or");
      auto* t = need_neg();
      if (!t) return unbound(id, "neg");
      for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < n; ++x)
          if (!alg.leq((*t)[x], alg.join(a, (*t)[alg.join(a, x)])))
            return verdict(id, false, {a, x});
      return verdict(id, true, {});
    }
    case MetaProp::NegS: {
      auto* t = need_neg();
      if (!t) return unbound(id, "neg");
      for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < n; ++x)
          if (alg.meet(a, x) == alg.bottom && !alg.leq(a, (*t)[x]))
            return verdict(id, false, {a, x});
      return verdict(id, true, {});
    }
    case MetaProp::ImplP: {
      if (!b.impl) return unbound(id, "impl");
      const auto& t = *b.impl;
      for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < n; ++x)
          for (Element c = 0; c < n; ++c)
            if (alg.leq(c, t[a * n + x]) != alg.leq(alg.meet(a, c), x))
              return verdict(id, false, {a, x, c}, "residuation fails");
      return verdict(id, true, {});
    }
    case MetaProp::CoimplP: {
      if (!b.coimpl) return unbound(id, "coimpl");
      const auto& t = *b.coimpl;
      for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < n; ++x)
          for (Element c = 0; c < n; ++c)
            if (alg.leq(t[a * n + x], c) != alg.leq(a, alg.join(c, x)))
              return verdict(id, false, {a, x, c}, "co-residuation fails");
      return verdict(id, true, {});
    }
  }
  fail("UnknownProperty", "bad enum value");
}

}  // namespace iolog
