#pragma once

#include <algorithm>
#include <functional>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stop_token>
#include <string>
#include <vector>

#include "rte/fole/clause.hpp"
#include "rte/reasoner/config.hpp"
#include "rte/reasoner/sat_result.hpp"
#include "rte/reasoner/unify.hpp"

namespace rte::reasoner {

inline const std::string prover_engine_name = "prover";

// Reflexivity, symmetry, transitivity and one congruence clause per argument
// position of every predicate and function symbol in `clauses`. Empty when
// no clause mentions equality.
inline fole::ClauseSet equality_axioms(const fole::ClauseSet& clauses) {
  using fole::Literal;
  using fole::Term;
  bool uses_equality = false;
  std::map<std::string, std::size_t> preds;
  std::map<std::string, std::size_t> funcs;
  auto scan = [&](const Term& t, auto&& self) -> void {
    if (t.is_function()) funcs.emplace(t.name(), t.args().size());
    for (const auto& a : t.args()) self(a, self);
  };
  for (const auto& c : clauses)
    for (const auto& l : c.literals()) {
      if (l.is_equality())
        uses_equality = true;
      else
        preds.emplace(l.predicate, l.args.size());
      for (const auto& a : l.args) scan(a, scan);
    }
  if (!uses_equality) return {};

  const auto& eq = fole::equality_predicate;
  auto var = [](const std::string& n) { return Term::variable(n); };
  auto vars = [&](const std::string& prefix, std::size_t n) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(var(prefix + std::to_string(i)));
    return out;
  };
  fole::ClauseSet out;
  out.emplace_back(std::vector<Literal>{{true, eq, {var("X"), var("X")}}});
  out.emplace_back(std::vector<Literal>{{false, eq, {var("X"), var("Y")}},
                                        {true, eq, {var("Y"), var("X")}}});
  out.emplace_back(std::vector<Literal>{{false, eq, {var("X"), var("Y")}},
                                        {false, eq, {var("Y"), var("Z")}},
                                        {true, eq, {var("X"), var("Z")}}});
  for (const auto& [p, n] : preds)
    for (std::size_t i = 0; i < n; ++i) {
      auto xs = vars("A", n);
      auto ys = xs;
      ys[i] = var("B");
      out.emplace_back(std::vector<Literal>{
          {false, eq, {xs[i], var("B")}}, {false, p, xs}, {true, p, ys}});
    }
  for (const auto& [f, n] : funcs)
    for (std::size_t i = 0; i < n; ++i) {
      auto xs = vars("A", n);
      auto ys = xs;
      ys[i] = var("B");
      out.emplace_back(std::vector<Literal>{
          {false, eq, {xs[i], var("B")}},
          {true, eq, {Term::function(f, xs), Term::function(f, ys)}}});
    }
  for (auto& c : out) c = c.canonical();
  return out;
}

// Literals a clause may resolve on: its largest negative literal (first on
// ties) if it has one, otherwise every literal.
inline std::vector<std::size_t> eligible_literals(const fole::Clause& c) {
  const auto& ls = c.literals();
  std::optional<std::size_t> sel;
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (!ls[i].positive && (!sel || ls[i].size() > ls[*sel].size())) sel = i;
  if (sel) return {*sel};
  std::vector<std::size_t> all(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) all[i] = i;
  return all;
}

// Given-clause saturation with binary resolution under negative literal
// selection, plus factoring of positive clauses. Given clauses are taken
// lightest-first (symbol count) with FIFO tie-breaking. Tautologies are
// deleted and new clauses are dropped when forward-subsumed by a kept one.
class Prover {
 public:
  Prover(const ReasonerConfig& cfg, std::stop_token stop = {}) : cfg_(cfg), stop_(std::move(stop)) {}

  SatResult run(const fole::ClauseSet& input) {
    deadline_ = Clock::now() + cfg_.max_time;
    for (const auto& c : input)
      if (auto r = admit(c.canonical(), Rule::input, {}, {}, {})) return *r;
    for (const auto& c : equality_axioms(input))
      if (auto r = admit(c, Rule::equality_axiom, {}, {}, {})) return *r;

    std::size_t iterations = 0;
    while (!passive_.empty()) {
      if (stop_.stop_requested()) return unknown("cancelled");
      if ((++iterations & 15) == 0 && Clock::now() > deadline_) return unknown("time limit");
      const std::size_t given = passive_.begin()->second;
      passive_.erase(passive_.begin());
      active_.push_back(given);
      if (auto r = infer(given)) return *r;
    }
    return unknown("saturated without refutation");
  }

  std::size_t kept_clauses() const noexcept { return steps_.size(); }

 private:
  using Outcome = std::optional<SatResult>;

  static std::uint64_t signature(const fole::Clause& c) {
    std::uint64_t sig = 0;
    for (const auto& l : c.literals()) {
      auto h = std::hash<std::string>{}(l.predicate) * 2 + (l.positive ? 1 : 0);
      sig |= std::uint64_t{1} << (h % 64);
    }
    return sig;
  }

  bool forward_subsumed(const fole::Clause& c, std::uint64_t sig) const {
    for (std::size_t id = 0; id < steps_.size(); ++id) {
      if ((sigs_[id] & ~sig) != 0) continue;
      if (subsumes(steps_[id].clause, c)) return true;
    }
    return false;
  }

  Outcome admit(fole::Clause c, Rule rule, std::vector<std::size_t> parents,
                std::vector<std::size_t> lits, Substitution unifier) {
    if (c.is_tautology()) return std::nullopt;
    const auto sig = signature(c);
    if (forward_subsumed(c, sig)) return std::nullopt;
    ProofStep step{steps_.size(), rule, std::move(parents), std::move(lits), std::move(unifier),
                   std::move(c)};
    const bool empty = step.clause.empty();
    passive_.emplace(step.clause.weight(), step.id);
    steps_.push_back(std::move(step));
    sigs_.push_back(sig);
    if (empty) return refutation(steps_.size() - 1);
    if (steps_.size() > cfg_.max_clauses) return unknown("clause limit");
    return std::nullopt;
  }

  Outcome infer(std::size_t given) {
    const fole::Clause g = steps_[given].clause;
    const auto& gl = g.literals();
    const auto g_eligible = eligible_literals(g);
    const bool positive = std::all_of(gl.begin(), gl.end(), [](const auto& l) { return l.positive; });
    for (std::size_t i = 0; positive && i < gl.size(); ++i)
      for (std::size_t j = i + 1; j < gl.size(); ++j) {
        auto mgu = unify_atoms(gl[i], gl[j]);
        if (!mgu) continue;
        std::vector<fole::Literal> lits;
        for (std::size_t k = 0; k < gl.size(); ++k)
          if (k != j) lits.push_back(substitute(*mgu, gl[k]));
        if (auto r = admit(fole::Clause(std::move(lits)).canonical(), Rule::factoring, {given},
                           {i, j}, *mgu))
          return r;
      }
    // Snapshot: clauses activated later resolve with this one when selected.
    const std::vector<std::size_t> partners = active_;
    for (std::size_t other : partners) {
      if (stop_.stop_requested()) return unknown("cancelled");
      const fole::Clause b = rename_apart(steps_[other].clause);
      const auto& bl = b.literals();
      for (std::size_t i : g_eligible)
        for (std::size_t j : eligible_literals(b)) {
          if (!gl[i].complements(bl[j])) continue;
          auto mgu = unify_atoms(gl[i], bl[j]);
          if (!mgu) continue;
          std::vector<fole::Literal> lits;
          for (std::size_t k = 0; k < gl.size(); ++k)
            if (k != i) lits.push_back(substitute(*mgu, gl[k]));
          for (std::size_t k = 0; k < bl.size(); ++k)
            if (k != j) lits.push_back(substitute(*mgu, bl[k]));
          if (auto r = admit(fole::Clause(std::move(lits)).canonical(), Rule::resolution,
                             {given, other}, {i, j}, *mgu))
            return r;
        }
    }
    return std::nullopt;
  }

  SatResult refutation(std::size_t last) const {
    std::set<std::size_t> needed;
    std::vector<std::size_t> todo{last};
    while (!todo.empty()) {
      auto id = todo.back();
      todo.pop_back();
      if (!needed.insert(id).second) continue;
      for (auto p : steps_[id].parents) todo.push_back(p);
    }
    Refutation proof;
    for (auto id : needed) proof.steps.push_back(steps_[id]);
    return Unsatisfiable{std::move(proof), prover_engine_name};
  }

  static SatResult unknown(std::string reason) {
    return Unknown{std::move(reason), prover_engine_name};
  }

  ReasonerConfig cfg_;
  std::stop_token stop_;
  Clock::time_point deadline_;
  std::vector<ProofStep> steps_;
  std::vector<std::uint64_t> sigs_;
  std::set<std::pair<std::size_t, std::size_t>> passive_;
  std::vector<std::size_t> active_;
};

// Refutation search. Returns Unsatisfiable with a replayable trace, or
// Unknown: the prover never certifies satisfiability.
inline SatResult prove_unsat(const fole::ClauseSet& clauses, const ReasonerConfig& cfg,
                             std::stop_token stop = {}) {
  return Prover(cfg, std::move(stop)).run(clauses);
}

}  // namespace rte::reasoner
