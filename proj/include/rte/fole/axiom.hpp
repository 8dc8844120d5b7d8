#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rte/fole/formula.hpp"

namespace rte::fole {

enum class AxiomKind { is_a, is_not_a, is_eq, presupposition, generic };

inline std::string_view to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::is_a: return "IS-A";
    case AxiomKind::is_not_a: return "IS-NOT-A";
    case AxiomKind::is_eq: return "IS-EQ";
    case AxiomKind::presupposition: return "PRESUPPOSITION";
    case AxiomKind::generic: return "GENERIC";
  }
  return "GENERIC";
}

inline std::optional<AxiomKind> axiom_kind_from_string(std::string_view s) {
  if (s == "IS-A") return AxiomKind::is_a;
  if (s == "IS-NOT-A") return AxiomKind::is_not_a;
  if (s == "IS-EQ") return AxiomKind::is_eq;
  if (s == "PRESUPPOSITION") return AxiomKind::presupposition;
  if (s == "GENERIC") return AxiomKind::generic;
  return std::nullopt;
}

struct Provenance {
  std::string phase;   // e.g. "III", "presup", "input"
  std::string source;  // edge, node or trigger descriptor; no whitespace
};

struct Axiom {
  AxiomKind kind = AxiomKind::generic;
  Formula formula;
  Provenance provenance;
};

// ∀x(c(x) → d(x))
inline Formula is_a_formula(const PredicateSymbol& c, const PredicateSymbol& d) {
  const Term x = Term::variable("X");
  return Formula::forall("X", Formula::implication(Formula::atom(c, {x}), Formula::atom(d, {x})));
}

// ∀x(c(x) → ¬d(x))
inline Formula is_not_a_formula(const PredicateSymbol& c, const PredicateSymbol& d) {
  const Term x = Term::variable("X");
  return Formula::forall(
      "X", Formula::implication(Formula::atom(c, {x}), Formula::negation(Formula::atom(d, {x}))));
}

// ∀x(c(x) ↔ d(x))
inline Formula is_eq_formula(const PredicateSymbol& c, const PredicateSymbol& d) {
  const Term x = Term::variable("X");
  return Formula::forall("X", Formula::equivalence(Formula::atom(c, {x}), Formula::atom(d, {x})));
}

}  // namespace rte::fole
