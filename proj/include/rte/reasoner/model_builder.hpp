#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <vector>

#include "rte/fole/cnf.hpp"
#include "rte/fole/formula.hpp"
#include "rte/fole/render.hpp"
#include "rte/reasoner/config.hpp"
#include "rte/reasoner/model.hpp"
#include "rte/reasoner/sat_result.hpp"
#include "rte/reasoner/sat_solver.hpp"

namespace rte::reasoner {

inline const std::string model_builder_engine_name = "model-builder";

namespace mb_detail {

// A literal over clause-local variable indices. `cell` stands for
// f(args...) = result with the result index stored last in `vars`.
struct FlatLiteral {
  enum class Kind { predicate, equality, cell } kind;
  bool positive;
  std::string symbol;
  std::vector<std::size_t> vars;
};

struct FlatClause {
  std::size_t num_vars = 0;
  std::vector<FlatLiteral> lits;
};

// Replaces every non-variable term by a fresh variable Y and adds the
// literal f(...) != Y, so that only cells carry function symbols.
inline FlatClause flatten(const fole::Clause& c) {
  FlatClause out;
  std::map<std::string, std::size_t> index;
  auto var_index = [&](const std::string& name) {
    auto [it, fresh] = index.try_emplace(name, out.num_vars);
    if (fresh) ++out.num_vars;
    return it->second;
  };
  auto term_index = [&](const fole::Term& t, auto&& self) -> std::size_t {
    if (t.is_variable()) return var_index(t.name());
    FlatLiteral cell{FlatLiteral::Kind::cell, false, t.name(), {}};
    for (const auto& a : t.args()) cell.vars.push_back(self(a, self));
    const std::size_t y = out.num_vars++;
    cell.vars.push_back(y);
    out.lits.push_back(std::move(cell));
    return y;
  };
  for (const auto& l : c.literals()) {
    FlatLiteral flat{l.is_equality() ? FlatLiteral::Kind::equality : FlatLiteral::Kind::predicate,
                     l.positive, l.predicate, {}};
    for (const auto& a : l.args) flat.vars.push_back(term_index(a, term_index));
    out.lits.push_back(std::move(flat));
  }
  return out;
}

inline std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

class Grounding {
 public:
  Grounding(std::size_t k, const std::map<std::string, std::size_t>& preds,
            const std::map<std::string, std::size_t>& funcs)
      : k_(k), preds_(preds), funcs_(funcs) {
    for (const auto& [p, n] : preds_) {
      pred_base_[p] = solver.num_vars();
      for (std::size_t i = 0, m = power(k, n); i < m; ++i) solver.new_var();
    }
    for (const auto& [f, n] : funcs_) {
      cell_base_[f] = solver.num_vars();
      for (std::size_t i = 0, m = power(k, n) * k; i < m; ++i)
        solver.prioritize(solver.new_var());
    }
  }

  sat::Var pred_var(const std::string& p, const Tuple& t) const {
    return static_cast<sat::Var>(pred_base_.at(p) + encode(t));
  }

  sat::Var cell_var(const std::string& f, const Tuple& args, Element value) const {
    return static_cast<sat::Var>(cell_base_.at(f) + encode(args) * k_ + value);
  }

  std::size_t encode(const Tuple& t) const {
    std::size_t idx = 0;
    for (auto e : t) idx = idx * k_ + e;
    return idx;
  }

  Tuple decode(std::size_t idx, std::size_t arity) const {
    Tuple t(arity);
    for (std::size_t i = arity; i-- > 0;) {
      t[i] = idx % k_;
      idx /= k_;
    }
    return t;
  }

  sat::Solver solver;

 private:
  std::size_t k_;
  const std::map<std::string, std::size_t>& preds_;
  const std::map<std::string, std::size_t>& funcs_;
  std::map<std::string, std::size_t> pred_base_;
  std::map<std::string, std::size_t> cell_base_;
};

}  // namespace mb_detail

// Iterative-deepening finite model search in the style of MACE/Paradox:
// clausify, flatten, ground over {0..k-1} and hand the propositional problem
// to a CDCL solver, for k = 1, 2, ... up to cfg.max_domain_size.
class ModelBuilder {
 public:
  ModelBuilder(const ReasonerConfig& cfg, std::stop_token stop = {}) : cfg_(cfg), stop_(std::move(stop)) {}

  SatResult run(const std::vector<fole::Formula>& formulas) {
    deadline_ = Clock::now() + cfg_.max_time;
    fole::Clausifier clausifier(cfg_.max_clauses);
    fole::ClauseSet clauses;
    try {
      clauses = clausifier.clausify(formulas);
    } catch (const fole::ClauseLimitExceeded&) {
      return unknown("clause limit");
    }
    collect_signature(formulas, clauses);
    std::vector<mb_detail::FlatClause> flat;
    for (const auto& c : clauses) flat.push_back(mb_detail::flatten(c));

    for (std::size_t k = 1; k <= cfg_.max_domain_size; ++k) {
      if (expired()) return unknown(stop_.stop_requested() ? "cancelled" : "time limit");
      mb_detail::Grounding g(k, preds_, funcs_);
      if (!encode(g, flat, k)) {
        if (aborted_) return unknown(stop_.stop_requested() ? "cancelled" : "time limit");
        continue;
      }
      const auto status = g.solver.solve([this] { return expired(); });
      if (status == sat::Status::aborted)
        return unknown(stop_.stop_requested() ? "cancelled" : "time limit");
      if (status == sat::Status::unsat) continue;
      FiniteModel m = reconstruct(g, k);
      for (const auto& f : formulas)
        if (!evaluate(m, f))
          throw std::logic_error("model builder produced a non-model for " + fole::render(f));
      return Satisfiable{std::move(m), model_builder_engine_name};
    }
    return unknown("no model up to domain size " + std::to_string(cfg_.max_domain_size));
  }

 private:
  bool expired() const { return stop_.stop_requested() || Clock::now() > deadline_; }

  void collect_signature(const std::vector<fole::Formula>& formulas, const fole::ClauseSet& clauses) {
    auto add_const = [&](const std::string& c) {
      if (std::find(constant_order_.begin(), constant_order_.end(), c) == constant_order_.end())
        constant_order_.push_back(c);
      funcs_.emplace(c, 0);
    };
    for (const auto& f : formulas) {
      for (const auto& [p, n] : fole::predicates(f)) preds_.emplace(p.name(), n);
      for (const auto& c : fole::constants(f)) {
        input_constants_.insert(c);
      }
    }
    auto scan = [&](const fole::Term& t, auto&& self) -> void {
      if (t.is_constant()) add_const(t.name());
      if (t.is_function()) funcs_.emplace(t.name(), t.args().size());
      for (const auto& a : t.args()) self(a, self);
    };
    for (const auto& c : clauses)
      for (const auto& l : c.literals()) {
        if (!l.is_equality()) preds_.emplace(l.predicate, l.args.size());
        for (const auto& a : l.args) scan(a, scan);
      }
    for (const auto& c : input_constants_) add_const(c);
  }

  // Returns false if the ground problem is trivially unsatisfiable or the
  // deadline passed (then aborted_ is set).
  bool encode(mb_detail::Grounding& g, const std::vector<mb_detail::FlatClause>& flat, std::size_t k) {
    auto& s = g.solver;
    for (const auto& [f, n] : funcs_) {
      for (std::size_t i = 0, m = mb_detail::power(k, n); i < m; ++i) {
        const Tuple args = g.decode(i, n);
        std::vector<sat::Lit> at_least;
        for (Element d = 0; d < k; ++d) at_least.push_back(sat::pos(g.cell_var(f, args, d)));
        if (!s.add_clause(at_least)) return false;
        for (Element d = 0; d < k; ++d)
          for (Element e = d + 1; e < k; ++e)
            if (!s.add_clause({sat::neg(g.cell_var(f, args, d)), sat::neg(g.cell_var(f, args, e))}))
              return false;
      }
    }
    // Constant i may only take value d > 0 if an earlier constant takes d-1.
    for (std::size_t i = 0; i < constant_order_.size(); ++i)
      for (Element d = 1; d < k; ++d) {
        std::vector<sat::Lit> lits{sat::neg(g.cell_var(constant_order_[i], {}, d))};
        for (std::size_t j = 0; j < i; ++j) lits.push_back(sat::pos(g.cell_var(constant_order_[j], {}, d - 1)));
        if (!s.add_clause(lits)) return false;
      }

    std::size_t work = 0;
    std::vector<Element> env;
    std::vector<sat::Lit> lits;
    for (const auto& fc : flat) {
      env.assign(fc.num_vars, 0);
      while (true) {
        if ((++work & 4095) == 0 && expired()) {
          aborted_ = true;
          return false;
        }
        lits.clear();
        bool satisfied = false;
        for (const auto& l : fc.lits) {
          Tuple t;
          for (auto v : l.vars) t.push_back(env[v]);
          using K = mb_detail::FlatLiteral::Kind;
          if (l.kind == K::equality) {
            if ((t[0] == t[1]) == l.positive) {
              satisfied = true;
              break;
            }
            continue;
          }
          sat::Var v;
          if (l.kind == K::predicate) {
            v = g.pred_var(l.symbol, t);
          } else {
            const Element value = t.back();
            t.pop_back();
            v = g.cell_var(l.symbol, t, value);
          }
          lits.push_back(l.positive ? sat::pos(v) : sat::neg(v));
        }
        if (!satisfied && !s.add_clause(lits)) return false;
        std::size_t i = 0;
        for (; i < env.size(); ++i) {
          if (++env[i] < k) break;
          env[i] = 0;
        }
        if (i == env.size()) break;
      }
    }
    return true;
  }

  FiniteModel reconstruct(const mb_detail::Grounding& g, std::size_t k) const {
    FiniteModel m;
    m.domain_size = k;
    for (const auto& [p, n] : preds_) {
      auto& rows = m.predicates[p];
      for (std::size_t i = 0, total = mb_detail::power(k, n); i < total; ++i) {
        const Tuple t = g.decode(i, n);
        if (g.solver.model_value(g.pred_var(p, t))) rows.insert(t);
      }
    }
    for (const auto& [f, n] : funcs_)
      for (std::size_t i = 0, total = mb_detail::power(k, n); i < total; ++i) {
        const Tuple args = g.decode(i, n);
        for (Element d = 0; d < k; ++d)
          if (g.solver.model_value(g.cell_var(f, args, d))) {
            if (n == 0 && input_constants_.contains(f))
              m.constants[f] = d;
            else
              m.functions[f][args] = d;
          }
      }
    return m;
  }

  static SatResult unknown(std::string reason) {
    return Unknown{std::move(reason), model_builder_engine_name};
  }

  ReasonerConfig cfg_;
  std::stop_token stop_;
  Clock::time_point deadline_;
  bool aborted_ = false;
  std::map<std::string, std::size_t> preds_;
  std::map<std::string, std::size_t> funcs_;
  std::set<std::string> input_constants_;
  std::vector<std::string> constant_order_;
};

// Satisfiable with a verified model, or Unknown: the model builder never
// certifies unsatisfiability.
inline SatResult find_model(const std::vector<fole::Formula>& formulas, const ReasonerConfig& cfg,
                            std::stop_token stop = {}) {
  return ModelBuilder(cfg, std::move(stop)).run(formulas);
}

}  // namespace rte::reasoner
