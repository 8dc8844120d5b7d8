#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rte/fole/clause.hpp"
#include "rte/fole/formula.hpp"

namespace rte::fole {

class ClauseLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Negation normal form: implications and equivalences eliminated, negations
// pushed onto atoms.
inline Formula to_nnf(const Formula& f, bool positive = true) {
  switch (f.kind()) {
    case FormulaKind::atom:
    case FormulaKind::equal: return positive ? f : Formula::negation(f);
    case FormulaKind::negation: return to_nnf(f.body(), !positive);
    case FormulaKind::conjunction:
      return positive ? Formula::conjunction(to_nnf(f.left(), true), to_nnf(f.right(), true))
                      : Formula::disjunction(to_nnf(f.left(), false), to_nnf(f.right(), false));
    case FormulaKind::disjunction:
      return positive ? Formula::disjunction(to_nnf(f.left(), true), to_nnf(f.right(), true))
                      : Formula::conjunction(to_nnf(f.left(), false), to_nnf(f.right(), false));
    case FormulaKind::implication:
      return positive ? Formula::disjunction(to_nnf(f.left(), false), to_nnf(f.right(), true))
                      : Formula::conjunction(to_nnf(f.left(), true), to_nnf(f.right(), false));
    case FormulaKind::equivalence:
      if (positive)
        return Formula::conjunction(
            Formula::disjunction(to_nnf(f.left(), false), to_nnf(f.right(), true)),
            Formula::disjunction(to_nnf(f.left(), true), to_nnf(f.right(), false)));
      return Formula::conjunction(
          Formula::disjunction(to_nnf(f.left(), true), to_nnf(f.right(), true)),
          Formula::disjunction(to_nnf(f.left(), false), to_nnf(f.right(), false)));
    case FormulaKind::exists:
      return positive ? Formula::exists(f.variable(), to_nnf(f.body(), true))
                      : Formula::forall(f.variable(), to_nnf(f.body(), false));
    case FormulaKind::forall:
      return positive ? Formula::forall(f.variable(), to_nnf(f.body(), true))
                      : Formula::exists(f.variable(), to_nnf(f.body(), false));
  }
  return f;
}

// Clause-form conversion: NNF, standardize apart, skolemize, drop universal
// prefix, distribute. Skolem symbols are numbered `sk_1`, `sk_2`, ... across
// every formula handed to the same instance, so clauses of several formulas
// can be mixed freely.
class Clausifier {
 public:
  explicit Clausifier(std::size_t clause_limit = 1'000'000) : limit_(clause_limit) {}

  ClauseSet clausify(const Formula& f) {
    std::map<std::string, Term> env;
    std::vector<std::string> universals;
    Formula matrix = skolemize(to_nnf(f), env, universals);
    auto raw = distribute(matrix);
    ClauseSet out;
    for (auto& lits : raw) {
      Clause c = Clause(std::move(lits)).canonical();
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
    return out;
  }

  ClauseSet clausify(const std::vector<Formula>& fs) {
    ClauseSet out;
    for (const auto& f : fs)
      for (auto& c : clausify(f))
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    return out;
  }

  std::size_t skolem_count() const noexcept { return next_skolem_ - 1; }

 private:
  static Term substitute(const Term& t, const std::map<std::string, Term>& env) {
    if (t.is_variable()) {
      auto it = env.find(t.name());
      return it == env.end() ? t : it->second;
    }
    if (t.is_constant()) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(substitute(a, env));
    return Term::function(t.name(), std::move(args));
  }

  static void term_vars(const Term& t, std::set<std::string>& out) {
    if (t.is_variable()) out.insert(t.name());
    for (const auto& a : t.args()) term_vars(a, out);
  }

  Formula skolemize(const Formula& f, std::map<std::string, Term>& env,
                    std::vector<std::string>& universals) {
    switch (f.kind()) {
      case FormulaKind::atom: {
        std::vector<Term> args;
        for (const auto& t : f.args()) args.push_back(substitute(t, env));
        return Formula::atom(f.predicate(), std::move(args));
      }
      case FormulaKind::equal:
        return Formula::equal(substitute(f.args()[0], env), substitute(f.args()[1], env));
      case FormulaKind::negation: return Formula::negation(skolemize(f.body(), env, universals));
      case FormulaKind::conjunction:
        return Formula::conjunction(skolemize(f.left(), env, universals),
                                    skolemize(f.right(), env, universals));
      case FormulaKind::disjunction:
        return Formula::disjunction(skolemize(f.left(), env, universals),
                                    skolemize(f.right(), env, universals));
      case FormulaKind::forall: {
        std::string fresh = "V" + std::to_string(next_var_++);
        auto saved = env.find(f.variable()) == env.end()
                         ? std::optional<Term>{}
                         : std::optional<Term>{env.at(f.variable())};
        env[f.variable()] = Term::variable(fresh);
        universals.push_back(fresh);
        Formula body = skolemize(f.body(), env, universals);
        universals.pop_back();
        restore(env, f.variable(), saved);
        return body;
      }
      case FormulaKind::exists: {
        // Skolem arguments: the enclosing universals the body depends on.
        std::set<std::string> deps;
        for (const auto& v : free_vars(Formula::exists(f.variable(), f.body()))) {
          auto it = env.find(v);
          if (it != env.end()) term_vars(it->second, deps);
        }
        std::vector<Term> args;
        for (const auto& u : universals)
          if (deps.contains(u)) args.push_back(Term::variable(u));
        Term sk = Term::function(std::string(skolem_prefix) + std::to_string(next_skolem_++),
                                 std::move(args));
        auto saved = env.find(f.variable()) == env.end()
                         ? std::optional<Term>{}
                         : std::optional<Term>{env.at(f.variable())};
        env[f.variable()] = sk;
        Formula body = skolemize(f.body(), env, universals);
        restore(env, f.variable(), saved);
        return body;
      }
      default: throw std::logic_error("skolemize: formula not in NNF");
    }
  }

  static void restore(std::map<std::string, Term>& env, const std::string& v,
                      const std::optional<Term>& saved) {
    if (saved)
      env[v] = *saved;
    else
      env.erase(v);
  }

  static Literal to_literal(const Formula& f) {
    bool positive = true;
    const Formula* a = &f;
    if (f.is(FormulaKind::negation)) {
      positive = false;
      a = &f.body();
    }
    if (a->is(FormulaKind::equal)) return Literal{positive, equality_predicate, a->args()};
    return Literal{positive, a->predicate().name(), a->args()};
  }

  std::vector<std::vector<Literal>> distribute(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::conjunction: {
        auto a = distribute(f.left());
        auto b = distribute(f.right());
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        check(a.size());
        return a;
      }
      case FormulaKind::disjunction: {
        auto a = distribute(f.left());
        auto b = distribute(f.right());
        check(a.size() * b.size());
        std::vector<std::vector<Literal>> out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a)
          for (const auto& y : b) {
            auto c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
          }
        return out;
      }
      default: return {{to_literal(f)}};
    }
  }

  void check(std::size_t n) const {
    if (n > limit_)
      throw ClauseLimitExceeded("clause form exceeds " + std::to_string(limit_) + " clauses");
  }

  std::size_t limit_;
  std::size_t next_skolem_ = 1;
  std::size_t next_var_ = 0;
};

inline ClauseSet to_clauses(const Formula& f) { return Clausifier().clausify(f); }

}  // namespace rte::fole
