#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "iolog/algebra.hpp"

namespace iolog {

enum class Conn { Atom, Top, Bot, Neg, And, Or, Impl, Coimpl };

// Immutable formula tree; subtrees are shared freely.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Conn kind;
  std::string atom;     // Conn::Atom only
  FormulaPtr lhs, rhs;  // Neg uses lhs only
};

FormulaPtr mk_atom(std::string name);
FormulaPtr mk_top();
FormulaPtr mk_bot();
FormulaPtr mk_neg(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_impl(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_coimpl(FormulaPtr l, FormulaPtr r);

bool same_formula(const Formula& a, const Formula& b);
std::set<std::string> atoms_of(const Formula& f);

struct ParseError : Error {
  size_t offset;                       // byte offset into the input
  std::vector<std::string> expected;   // token classes that would have been accepted
  ParseError(size_t off, std::vector<std::string> exp);
};

// Grammar, loosest to tightest: `-<` (left-assoc), `->` (right-assoc),
// `|`, `&` (left-assoc), `~` (prefix), atoms [a-z][a-z0-9_]*, constants
// `T`/`F`, parentheses. Unicode connectives are accepted and normalized.
FormulaPtr parse(std::string_view input);

// Canonical ASCII form, fully parenthesized; parse(print(f)) == f.
std::string print(const Formula& f);

using Assignment = std::map<std::string, Element>;

// Homomorphic evaluation through the bound tables.
// Errors: UnboundConnective, UnassignedAtom.
Element evaluate(const Formula& f, const FiniteAlgebra& alg, const Binding& b,
                 const Assignment& v);

}  // namespace iolog
