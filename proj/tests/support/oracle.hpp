#pragma once

// Reference procedures used as test oracles. Nothing here calls into the
// reasoner; formulas are only read through the fole AST accessors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rte/fole/formula.hpp"
#include "rte/fole/problem.hpp"

namespace oracle {

using rte::fole::Formula;
using rte::fole::FormulaKind;
using rte::fole::Term;

struct Signature {
  std::map<std::string, std::size_t> predicates;  // name -> arity
  std::set<std::string> constants;
};

inline void scan(const Formula& f, Signature& s) {
  auto term = [&](const Term& t) {
    if (t.is_constant()) s.constants.insert(t.name());
    if (t.is_function()) throw std::invalid_argument("oracle: function terms unsupported");
  };
  switch (f.kind()) {
    case FormulaKind::atom:
      s.predicates[f.predicate().name()] = f.args().size();
      for (const auto& t : f.args()) term(t);
      return;
    case FormulaKind::equal:
      for (const auto& t : f.args()) term(t);
      return;
    case FormulaKind::negation:
    case FormulaKind::exists:
    case FormulaKind::forall: scan(f.body(), s); return;
    default:
      scan(f.left(), s);
      scan(f.right(), s);
  }
}

inline Signature signature(const std::vector<Formula>& fs) {
  Signature s;
  for (const auto& f : fs) scan(f, s);
  return s;
}

struct Interpretation {
  std::size_t n = 1;
  std::map<std::string, std::size_t> constants;
  std::map<std::string, std::vector<bool>> tables;  // row index = mixed-radix tuple
};

inline std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

inline bool holds(const Interpretation& m, const Formula& f, std::map<std::string, std::size_t>& env) {
  auto value = [&](const Term& t) -> std::size_t {
    if (t.is_variable()) return env.at(t.name());
    return m.constants.at(t.name());
  };
  switch (f.kind()) {
    case FormulaKind::atom: {
      std::size_t row = 0;
      for (const auto& t : f.args()) row = row * m.n + value(t);
      return m.tables.at(f.predicate().name())[row];
    }
    case FormulaKind::equal: return value(f.args()[0]) == value(f.args()[1]);
    case FormulaKind::negation: return !holds(m, f.body(), env);
    case FormulaKind::conjunction: return holds(m, f.left(), env) && holds(m, f.right(), env);
    case FormulaKind::disjunction: return holds(m, f.left(), env) || holds(m, f.right(), env);
    case FormulaKind::implication: return !holds(m, f.left(), env) || holds(m, f.right(), env);
    case FormulaKind::equivalence: return holds(m, f.left(), env) == holds(m, f.right(), env);
    case FormulaKind::exists:
    case FormulaKind::forall: {
      const bool ex = f.is(FormulaKind::exists);
      const auto saved = env.find(f.variable()) != env.end() ? std::optional(env[f.variable()]) : std::nullopt;
      bool result = !ex;
      for (std::size_t d = 0; d < m.n; ++d) {
        env[f.variable()] = d;
        if (holds(m, f.body(), env) == ex) {
          result = ex;
          break;
        }
      }
      if (saved)
        env[f.variable()] = *saved;
      else
        env.erase(f.variable());
      return result;
    }
  }
  return false;
}

inline bool holds(const Interpretation& m, const Formula& f) {
  std::map<std::string, std::size_t> env;
  return holds(m, f, env);
}

// Calls `visit` on every interpretation of the signature over {0..n-1}
// until it returns true.
inline bool for_each_interpretation(const Signature& s, std::size_t n,
                                    const std::function<bool(const Interpretation&)>& visit) {
  std::size_t bits = 0;
  for (const auto& [p, a] : s.predicates) bits += power(n, a);
  if (bits > 26) throw std::invalid_argument("oracle: interpretation space too large");
  const std::vector<std::string> consts(s.constants.begin(), s.constants.end());
  const std::size_t const_choices = power(n, consts.size());
  Interpretation m;
  m.n = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::size_t bit = 0;
    for (const auto& [p, a] : s.predicates) {
      auto& t = m.tables[p];
      t.assign(power(n, a), false);
      for (std::size_t r = 0; r < t.size(); ++r) t[r] = (mask >> bit++) & 1;
    }
    for (std::size_t c = 0; c < const_choices; ++c) {
      std::size_t code = c;
      for (const auto& k : consts) {
        m.constants[k] = code % n;
        code /= n;
      }
      if (visit(m)) return true;
    }
  }
  return false;
}

inline std::optional<Interpretation> find_model(const std::vector<Formula>& fs, std::size_t max_n) {
  const auto s = signature(fs);
  std::optional<Interpretation> found;
  for (std::size_t n = 1; n <= max_n && !found; ++n)
    for_each_interpretation(s, n, [&](const Interpretation& m) {
      for (const auto& f : fs)
        if (!holds(m, f)) return false;
      found = m;
      return true;
    });
  return found;
}

inline bool satisfiable(const std::vector<Formula>& fs, std::size_t max_n) {
  return find_model(fs, max_n).has_value();
}

// Representatives of all monadic interpretations up to equivalence for
// sentences of quantifier rank `rank` with at most one constant: per
// predicate type, 0..rank ordinary elements, plus the constant's element
// with its own type.
inline bool for_each_monadic_model(const Signature& s, std::size_t rank,
                                   const std::function<bool(const Interpretation&)>& visit) {
  std::vector<std::string> preds;
  for (const auto& [p, a] : s.predicates) {
    if (a != 1) throw std::invalid_argument("oracle: not monadic");
    preds.push_back(p);
  }
  if (s.constants.size() > 1) throw std::invalid_argument("oracle: at most one constant");
  const std::size_t types = std::size_t{1} << preds.size();
  std::vector<std::size_t> counts(types, 0);
  auto build = [&](std::optional<std::size_t> const_type) {
    std::vector<std::size_t> owner;
    if (const_type) owner.push_back(*const_type);
    for (std::size_t t = 0; t < types; ++t)
      for (std::size_t k = 0; k < counts[t]; ++k) owner.push_back(t);
    Interpretation m;
    m.n = owner.size();
    for (std::size_t i = 0; i < preds.size(); ++i) {
      auto& t = m.tables[preds[i]];
      t.assign(m.n, false);
      for (std::size_t e = 0; e < m.n; ++e) t[e] = (owner[e] >> i) & 1;
    }
    if (const_type) m.constants[*s.constants.begin()] = 0;
    return m;
  };
  while (true) {
    if (s.constants.empty()) {
      if (std::any_of(counts.begin(), counts.end(), [](auto c) { return c > 0; }) && visit(build(std::nullopt)))
        return true;
    } else {
      for (std::size_t t = 0; t < types; ++t)
        if (visit(build(t))) return true;
    }
    std::size_t i = 0;
    while (i < types && counts[i] == rank) counts[i++] = 0;
    if (i == types) return false;
    ++counts[i];
  }
}

inline bool monadic_satisfiable(const std::vector<Formula>& fs, std::size_t rank) {
  return for_each_monadic_model(signature(fs), rank, [&](const Interpretation& m) {
    for (const auto& f : fs)
      if (!holds(m, f)) return false;
    return true;
  });
}

enum class Verdict { entailment, contradiction, informative };

inline std::string_view name(Verdict v) {
  switch (v) {
    case Verdict::entailment: return "Entailment";
    case Verdict::contradiction: return "Contradiction";
    case Verdict::informative: return "Informative";
  }
  return "";
}

// The decision procedure of the consistency and informativity tests with
// `sat` standing in for the reasoner.
inline Verdict classify(const Formula& t, const std::vector<Formula>& bk, const Formula& h,
                        const std::function<bool(const std::vector<Formula>&)>& sat) {
  std::vector<Formula> fs = bk;
  fs.push_back(t);
  fs.push_back(h);
  if (!sat(fs)) return Verdict::contradiction;
  fs.back() = Formula::negation(h);
  return sat(fs) ? Verdict::informative : Verdict::entailment;
}

// Canonical text with bound variables numbered by binder depth; two
// formulas are alpha-equivalent iff their canonical texts are equal.
inline std::string canonical(const Formula& f, std::vector<std::string>& scope) {
  auto term = [&](const Term& t) -> std::string {
    if (t.is_variable())
      for (std::size_t i = scope.size(); i-- > 0;)
        if (scope[i] == t.name()) return "#" + std::to_string(i);
    return t.name();
  };
  auto args = [&](const std::vector<Term>& ts) {
    std::string out;
    for (const auto& t : ts) out += (out.empty() ? "" : ",") + term(t);
    return out;
  };
  switch (f.kind()) {
    case FormulaKind::atom: return f.predicate().name() + "(" + args(f.args()) + ")";
    case FormulaKind::equal: return "=(" + args(f.args()) + ")";
    case FormulaKind::negation: return "~(" + canonical(f.body(), scope) + ")";
    case FormulaKind::exists:
    case FormulaKind::forall: {
      scope.push_back(f.variable());
      auto body = canonical(f.body(), scope);
      scope.pop_back();
      return std::string(f.is(FormulaKind::exists) ? "E" : "A") + std::to_string(scope.size()) + "(" + body + ")";
    }
    default: {
      static const std::map<FormulaKind, std::string> ops{{FormulaKind::conjunction, "&"},
                                                          {FormulaKind::disjunction, "|"},
                                                          {FormulaKind::implication, ">"},
                                                          {FormulaKind::equivalence, "="}};
      return ops.at(f.kind()) + "(" + canonical(f.left(), scope) + "," + canonical(f.right(), scope) + ")";
    }
  }
}

inline std::string canonical(const Formula& f) {
  std::vector<std::string> scope;
  return canonical(f, scope);
}

}  // namespace oracle
