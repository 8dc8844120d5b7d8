#pragma once

#include <stdexcept>
#include <vector>

#include "rte/fole/formula.hpp"

namespace rte::fole {

namespace detail {

inline Formula inject(const Formula& f, const PredicateSymbol& entity,
                      const std::vector<PredicateSymbol>& aliases, bool& hit) {
  switch (f.kind()) {
    case FormulaKind::atom: {
      if (f.predicate() != entity || f.args().size() != 1) return f;
      hit = true;
      std::vector<Formula> parts{f};
      for (const auto& a : aliases) parts.push_back(Formula::atom(a, f.args()));
      return disjoin(parts);
    }
    case FormulaKind::equal: return f;
    case FormulaKind::negation: return Formula::negation(inject(f.body(), entity, aliases, hit));
    case FormulaKind::exists:
      return Formula::exists(f.variable(), inject(f.body(), entity, aliases, hit));
    case FormulaKind::forall:
      return Formula::forall(f.variable(), inject(f.body(), entity, aliases, hit));
    case FormulaKind::conjunction:
      return Formula::conjunction(inject(f.left(), entity, aliases, hit),
                                  inject(f.right(), entity, aliases, hit));
    case FormulaKind::disjunction:
      return Formula::disjunction(inject(f.left(), entity, aliases, hit),
                                  inject(f.right(), entity, aliases, hit));
    case FormulaKind::implication:
      return Formula::implication(inject(f.left(), entity, aliases, hit),
                                  inject(f.right(), entity, aliases, hit));
    case FormulaKind::equivalence:
      return Formula::equivalence(inject(f.left(), entity, aliases, hit),
                                  inject(f.right(), entity, aliases, hit));
  }
  return f;
}

}  // namespace detail

inline bool mentions_unary(const Formula& f, const PredicateSymbol& p) {
  bool found = false;
  for_each_atom(f, [&](const Formula& a) {
    if (a.is(FormulaKind::atom) && a.predicate() == p && a.args().size() == 1) found = true;
  });
  return found;
}

// Replaces each `entity(t)` with `entity(t) ∨ alias1(t) ∨ ... ∨ aliasN(t)`.
inline Formula inject_aliases(const Formula& f, const PredicateSymbol& entity,
                              const std::vector<PredicateSymbol>& aliases) {
  if (!mentions_unary(f, entity))
    throw std::invalid_argument("inject_aliases: '" + entity.name() +
                                "' does not occur as a unary atom");
  if (aliases.empty()) return f;
  bool hit = false;
  return detail::inject(f, entity, aliases, hit);
}

}  // namespace rte::fole
