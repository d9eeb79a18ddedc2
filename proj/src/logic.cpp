#include "iolog/logic.hpp"

#include <set>

namespace iolog {

bool entails(const FiniteAlgebra& alg, const Binding& b,
             const std::vector<FormulaPtr>& premises, const Formula& conclusion) {
  std::set<std::string> names = atoms_of(conclusion);
  for (const auto& p : premises) {
    auto more = atoms_of(*p);
    names.insert(more.begin(), more.end());
  }
  std::vector<std::string> atoms(names.begin(), names.end());

  Assignment v;
  auto holds_under = [&]() {
    Element goal = evaluate(conclusion, alg, b, v);
    if (premises.empty()) return goal == alg.top;
    Element acc = alg.top;
    for (const auto& p : premises) acc = alg.meet(acc, evaluate(*p, alg, b, v));
    return alg.leq(acc, goal);
  };

  // Odometer over all carrier assignments of the occurring atoms.
  std::vector<Element> digits(atoms.size(), 0);
  for (;;) {
    for (size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = digits[i];
    if (!holds_under()) return false;
    size_t i = 0;
    while (i < digits.size() && ++digits[i] == alg.n) digits[i++] = 0;
    if (i == digits.size()) return true;
  }
}

bool inconsistent(const FiniteAlgebra& alg, ElementSet s) {
  if (s.empty()) fail("EmptySet", "inconsistency is defined for nonempty sets");
  Element acc = alg.top;
  for (Element x = 0; x < alg.n; ++x)
    if (s.contains(x)) acc = alg.meet(acc, x);
  return acc == alg.bottom;
}

ElementSet theorems(const FiniteAlgebra& alg, const Binding& b) {
  ElementSet s;
  (void)alg;
  if (b.top) s.add(*b.top);
  return s;
}

}  // namespace iolog
