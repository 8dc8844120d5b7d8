#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rte/fole/clause.hpp"
#include "rte/fole/formula.hpp"

namespace rte::reasoner {

using Element = std::size_t;
using Tuple = std::vector<Element>;

// A finite interpretation over the domain {0, ..., domain_size-1}.
// Function tables hold skolem symbols (arity 0 included) introduced by
// clausification; input constants live in `constants`.
struct FiniteModel {
  std::size_t domain_size = 1;
  std::map<std::string, Element> constants;
  std::map<std::string, std::set<Tuple>> predicates;
  std::map<std::string, std::map<Tuple, Element>> functions;

  bool holds(const std::string& pred, const Tuple& args) const {
    auto it = predicates.find(pred);
    return it != predicates.end() && it->second.contains(args);
  }

  std::string str() const {
    std::ostringstream os;
    os << "domain_size " << domain_size << "\n";
    for (const auto& [c, e] : constants) os << "constant " << c << " = " << e << "\n";
    for (const auto& [p, rows] : predicates) {
      os << "predicate " << p << " = {";
      bool first = true;
      for (const auto& t : rows) {
        os << (first ? "" : ", ") << "(";
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        os << ")";
        first = false;
      }
      os << "}\n";
    }
    for (const auto& [f, table] : functions) {
      os << "function " << f << " = {";
      bool first = true;
      for (const auto& [args, v] : table) {
        os << (first ? "" : ", ") << "(";
        for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i];
        os << ")->" << v;
        first = false;
      }
      os << "}\n";
    }
    return os.str();
  }
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Element eval_term(const FiniteModel& m, const fole::Term& t,
                         const std::map<std::string, Element>& env) {
  switch (t.kind()) {
    case fole::Term::Kind::variable: {
      auto it = env.find(t.name());
      if (it == env.end()) throw EvaluationError("free variable '" + t.name() + "'");
      return it->second;
    }
    case fole::Term::Kind::constant: {
      if (auto it = m.constants.find(t.name()); it != m.constants.end()) return it->second;
      if (auto it = m.functions.find(t.name()); it != m.functions.end()) {
        if (auto v = it->second.find({}); v != it->second.end()) return v->second;
      }
      throw EvaluationError("unmapped constant '" + t.name() + "'");
    }
    case fole::Term::Kind::function: {
      Tuple args;
      for (const auto& a : t.args()) args.push_back(eval_term(m, a, env));
      auto it = m.functions.find(t.name());
      if (it == m.functions.end()) throw EvaluationError("unmapped function '" + t.name() + "'");
      auto v = it->second.find(args);
      if (v == it->second.end()) throw EvaluationError("partial function '" + t.name() + "'");
      return v->second;
    }
  }
  return 0;
}

inline bool eval(const FiniteModel& m, const fole::Formula& f, std::map<std::string, Element>& env) {
  using fole::FormulaKind;
  switch (f.kind()) {
    case FormulaKind::atom: {
      Tuple args;
      for (const auto& t : f.args()) args.push_back(eval_term(m, t, env));
      return m.holds(f.predicate().name(), args);
    }
    case FormulaKind::equal:
      return eval_term(m, f.args()[0], env) == eval_term(m, f.args()[1], env);
    case FormulaKind::negation: return !eval(m, f.body(), env);
    case FormulaKind::conjunction: return eval(m, f.left(), env) && eval(m, f.right(), env);
    case FormulaKind::disjunction: return eval(m, f.left(), env) || eval(m, f.right(), env);
    case FormulaKind::implication: return !eval(m, f.left(), env) || eval(m, f.right(), env);
    case FormulaKind::equivalence: return eval(m, f.left(), env) == eval(m, f.right(), env);
    case FormulaKind::exists:
    case FormulaKind::forall: {
      const bool want_any = f.is(FormulaKind::exists);
      auto saved = env.find(f.variable()) == env.end()
                       ? std::optional<Element>{}
                       : std::optional<Element>{env[f.variable()]};
      bool result = !want_any;
      for (Element e = 0; e < m.domain_size; ++e) {
        env[f.variable()] = e;
        if (eval(m, f.body(), env) == want_any) {
          result = want_any;
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

}  // namespace detail

// Tarskian truth value of a closed formula.
inline bool evaluate(const FiniteModel& m, const fole::Formula& f) {
  std::map<std::string, Element> env;
  return detail::eval(m, f, env);
}

// Truth of a clause under every assignment of its variables.
inline bool evaluate(const FiniteModel& m, const fole::Clause& c) {
  std::vector<std::string> vars;
  auto collect = [&](const fole::Term& t, auto&& self) -> void {
    if (t.is_variable() && std::find(vars.begin(), vars.end(), t.name()) == vars.end())
      vars.push_back(t.name());
    for (const auto& a : t.args()) self(a, self);
  };
  for (const auto& l : c.literals())
    for (const auto& a : l.args) collect(a, collect);
  std::map<std::string, Element> env;
  for (const auto& v : vars) env[v] = 0;
  while (true) {
    bool sat = false;
    for (const auto& l : c.literals()) {
      Tuple args;
      for (const auto& a : l.args) args.push_back(detail::eval_term(m, a, env));
      bool v = l.is_equality() ? args[0] == args[1] : m.holds(l.predicate, args);
      if (v == l.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++env[vars[i]] < m.domain_size) break;
      env[vars[i]] = 0;
    }
    if (i == vars.size()) return true;
  }
}

}  // namespace rte::reasoner
