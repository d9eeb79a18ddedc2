#include "iolog/syntax.hpp"

#include <cctype>
#include <sstream>

namespace iolog {

FormulaPtr mk_atom(std::string name) {
  return std::make_shared<Formula>(Formula{Conn::Atom, std::move(name), nullptr, nullptr});
}
FormulaPtr mk_top() { return std::make_shared<Formula>(Formula{Conn::Top, {}, nullptr, nullptr}); }
FormulaPtr mk_bot() { return std::make_shared<Formula>(Formula{Conn::Bot, {}, nullptr, nullptr}); }
FormulaPtr mk_neg(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Conn::Neg, {}, std::move(f), nullptr});
}
FormulaPtr mk_and(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Conn::And, {}, std::move(l), std::move(r)});
}
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Conn::Or, {}, std::move(l), std::move(r)});
}
FormulaPtr mk_impl(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Conn::Impl, {}, std::move(l), std::move(r)});
}
FormulaPtr mk_coimpl(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Conn::Coimpl, {}, std::move(l), std::move(r)});
}

bool same_formula(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Conn::Atom: return a.atom == b.atom;
    case Conn::Top:
    case Conn::Bot: return true;
    case Conn::Neg: return same_formula(*a.lhs, *b.lhs);
    default: return same_formula(*a.lhs, *b.lhs) && same_formula(*a.rhs, *b.rhs);
  }
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind) {
      case Conn::Atom: out.insert(g.atom); break;
      case Conn::Top:
      case Conn::Bot: break;
      case Conn::Neg: self(self, *g.lhs); break;
      default:
        self(self, *g.lhs);
        self(self, *g.rhs);
    }
  };
  walk(walk, f);
  return out;
}

namespace {

std::string join_expected(const std::vector<std::string>& exp) {
  std::string s;
  for (size_t i = 0; i < exp.size(); ++i) {
    if (i) s += ", ";
    s += exp[i];
  }
  return s;
}

}  // namespace

ParseError::ParseError(size_t off, std::vector<std::string> exp)
    : Error("ParseError",
            "at offset " + std::to_string(off) + ", expected " + join_expected(exp)),
      offset(off),
      expected(std::move(exp)) {}

namespace {

enum class Tok { Atom, Top, Bot, Not, And, Or, Impl, Coimpl, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;  // atom name
  size_t offset;
};

// Unicode aliases are normalized at the lexer; the canonical surface form is
// ASCII.
struct Lexer {
  std::string_view in;
  size_t pos = 0;

  bool starts_with(std::string_view s) const { return in.substr(pos, s.size()) == s; }

  Token next() {
    while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
    const size_t at = pos;
    if (pos >= in.size()) return {Tok::End, {}, at};
    const char c = in[pos];
    auto take = [&](Tok k, size_t len) {
      pos += len;
      return Token{k, {}, at};
    };
    if (c == '(') return take(Tok::LParen, 1);
    if (c == ')') return take(Tok::RParen, 1);
    if (c == '~') return take(Tok::Not, 1);
    if (c == '&') return take(Tok::And, 1);
    if (c == '|') return take(Tok::Or, 1);
    if (c == '-') {
      if (starts_with("->")) return take(Tok::Impl, 2);
      if (starts_with("-<")) return take(Tok::Coimpl, 2);
      throw ParseError(at, {"'->'", "'-<'"});
    }
    if (c == 'T') return take(Tok::Top, 1);
    if (c == 'F') return take(Tok::Bot, 1);
    if (starts_with("¬")) return take(Tok::Not, 2);
    if (starts_with("∧")) return take(Tok::And, 3);
    if (starts_with("∨")) return take(Tok::Or, 3);
    if (starts_with("→")) return take(Tok::Impl, 3);
    if (starts_with("⤙")) return take(Tok::Coimpl, 3);
    if (starts_with("⊤")) return take(Tok::Top, 3);
    if (starts_with("⊥")) return take(Tok::Bot, 3);
    if (c >= 'a' && c <= 'z') {
      size_t end = pos + 1;
      while (end < in.size() &&
             ((in[end] >= 'a' && in[end] <= 'z') || (in[end] >= '0' && in[end] <= '9') ||
              in[end] == '_'))
        ++end;
      Token t{Tok::Atom, std::string(in.substr(pos, end - pos)), at};
      pos = end;
      return t;
    }
    throw ParseError(at, {"atom", "'T'", "'F'", "'~'", "'('"});
  }
};

struct Parser {
  Lexer lex;
  Token look;

  explicit Parser(std::string_view s) : lex{s} { look = lex.next(); }

  void advance() { look = lex.next(); }

  [[noreturn]] void expected(std::vector<std::string> what) const {
    throw ParseError(look.offset, std::move(what));
  }

  FormulaPtr primary() {
    switch (look.kind) {
      case Tok::Atom: {
        auto f = mk_atom(look.text);
        advance();
        return f;
      }
      case Tok::Top: advance(); return mk_top();
      case Tok::Bot: advance(); return mk_bot();
      case Tok::Not: advance(); return mk_neg(primary());
      case Tok::LParen: {
        advance();
        auto f = coimpl_level();
        if (look.kind != Tok::RParen) expected({"')'"});
        advance();
        return f;
      }
      default: expected({"atom", "'T'", "'F'", "'~'", "'('"});
    }
  }

  FormulaPtr and_level() {
    auto f = primary();
    while (look.kind == Tok::And) {
      advance();
      f = mk_and(f, primary());
    }
    return f;
  }

  FormulaPtr or_level() {
    auto f = and_level();
    while (look.kind == Tok::Or) {
      advance();
      f = mk_or(f, and_level());
    }
    return f;
  }

  FormulaPtr impl_level() {
    auto f = or_level();
    if (look.kind == Tok::Impl) {
      advance();
      return mk_impl(f, impl_level());  // right-associative
    }
    return f;
  }

  FormulaPtr coimpl_level() {
    auto f = impl_level();
    while (look.kind == Tok::Coimpl) {
      advance();
      f = mk_coimpl(f, impl_level());
    }
    return f;
  }

  FormulaPtr run() {
    auto f = coimpl_level();
    if (look.kind != Tok::End) expected({"end of input", "connective"});
    return f;
  }
};

}  // namespace

FormulaPtr parse(std::string_view input) { return Parser(input).run(); }

std::string print(const Formula& f) {
  switch (f.kind) {
    case Conn::Atom: return f.atom;
    case Conn::Top: return "T";
    case Conn::Bot: return "F";
    case Conn::Neg: {
      const Formula& g = *f.lhs;
      if (g.kind == Conn::Atom || g.kind == Conn::Top || g.kind == Conn::Bot ||
          g.kind == Conn::Neg)
        return "~" + print(g);
      return "~(" + print(g) + ")";
    }
    case Conn::And: return "(" + print(*f.lhs) + " & " + print(*f.rhs) + ")";
    case Conn::Or: return "(" + print(*f.lhs) + " | " + print(*f.rhs) + ")";
    case Conn::Impl: return "(" + print(*f.lhs) + " -> " + print(*f.rhs) + ")";
    case Conn::Coimpl: return "(" + print(*f.lhs) + " -< " + print(*f.rhs) + ")";
  }
  fail("Internal", "bad formula kind");
}

Element evaluate(const Formula& f, const FiniteAlgebra& alg, const Binding& b,
                 const Assignment& v) {
  switch (f.kind) {
    case Conn::Atom: {
      auto it = v.find(f.atom);
      if (it == v.end()) fail("UnassignedAtom", f.atom);
      if (it->second < 0 || it->second >= alg.n)
        fail("UnassignedAtom", f.atom + " maps outside the carrier");
      return it->second;
    }
    case Conn::Top:
      if (!b.top) fail("UnboundConnective", "top");
      return *b.top;
    case Conn::Bot:
      if (!b.bot) fail("UnboundConnective", "bot");
      return *b.bot;
    case Conn::Neg: {
      if (!b.neg) fail("UnboundConnective", "neg");
      return (*b.neg)[evaluate(*f.lhs, alg, b, v)];
    }
    case Conn::And:
      if (!b.has_and) fail("UnboundConnective", "and");
      return alg.meet(evaluate(*f.lhs, alg, b, v), evaluate(*f.rhs, alg, b, v));
    case Conn::Or:
      if (!b.has_or) fail("UnboundConnective", "or");
      return alg.join(evaluate(*f.lhs, alg, b, v), evaluate(*f.rhs, alg, b, v));
    case Conn::Impl: {
      if (!b.impl) fail("UnboundConnective", "impl");
      Element l = evaluate(*f.lhs, alg, b, v), r = evaluate(*f.rhs, alg, b, v);
      return (*b.impl)[l * alg.n + r];
    }
    case Conn::Coimpl: {
      if (!b.coimpl) fail("UnboundConnective", "coimpl");
      Element l = evaluate(*f.lhs, alg, b, v), r = evaluate(*f.rhs, alg, b, v);
      return (*b.coimpl)[l * alg.n + r];
    }
  }
  fail("Internal", "bad formula kind");
}

}  // namespace iolog
