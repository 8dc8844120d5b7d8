#pragma once

#include <string>

#include "rte/fole/formula.hpp"

namespace rte::fole {

enum class RenderStyle {
  compact,  // `and(a,b)`
  spaced,   // `and(a, b)`; atom arguments stay compact
};

namespace detail {

inline std::string_view connective_name(FormulaKind k) {
  switch (k) {
    case FormulaKind::negation: return "not";
    case FormulaKind::conjunction: return "and";
    case FormulaKind::disjunction: return "or";
    case FormulaKind::implication: return "imp";
    case FormulaKind::equivalence: return "iff";
    case FormulaKind::exists: return "some";
    case FormulaKind::forall: return "all";
    case FormulaKind::equal: return "eq";
    case FormulaKind::atom: return "";
  }
  return "";
}

inline void render_into(const Formula& f, RenderStyle style, std::string& out) {
  const char* sep = style == RenderStyle::spaced ? ", " : ",";
  switch (f.kind()) {
    case FormulaKind::atom:
      out += f.predicate().name();
      out += '(';
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ',';
        out += f.args()[i].str();
      }
      out += ')';
      return;
    case FormulaKind::equal:
      out += "eq(";
      out += f.args()[0].str();
      out += ',';
      out += f.args()[1].str();
      out += ')';
      return;
    case FormulaKind::negation:
      out += "not(";
      render_into(f.body(), style, out);
      out += ')';
      return;
    case FormulaKind::exists:
    case FormulaKind::forall:
      out += connective_name(f.kind());
      out += '(';
      out += f.variable();
      out += sep;
      render_into(f.body(), style, out);
      out += ')';
      return;
    default:
      out += connective_name(f.kind());
      out += '(';
      render_into(f.left(), style, out);
      out += sep;
      render_into(f.right(), style, out);
      out += ')';
  }
}

}  // namespace detail

inline std::string render(const Formula& f, RenderStyle style = RenderStyle::compact) {
  std::string out;
  detail::render_into(f, style, out);
  return out;
}

// A formula as a standalone statement: spaced style, terminated by `.`.
inline std::string render_statement(const Formula& f) {
  return render(f, RenderStyle::spaced) + ".";
}

// Multi-line layout close to the hand-indented listings used in problem files.
inline std::string render_pretty(const Formula& f, std::size_t indent = 0) {
  if (f.is(FormulaKind::atom) || f.is(FormulaKind::equal)) return render(f);
  const std::string pad(indent + 4, ' ');
  std::string out(detail::connective_name(f.kind()));
  out += '(';
  if (f.is(FormulaKind::negation)) {
    out += render_pretty(f.body(), indent);
  } else if (f.is_quantifier()) {
    out += f.variable();
    out += ",\n" + pad;
    out += render_pretty(f.body(), indent + 4);
  } else {
    out += "\n" + pad + render_pretty(f.left(), indent + 4);
    out += ",\n" + pad + render_pretty(f.right(), indent + 4);
  }
  out += ')';
  return out;
}

}  // namespace rte::fole
