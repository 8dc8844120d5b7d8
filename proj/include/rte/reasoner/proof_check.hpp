#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rte/fole/clause.hpp"
#include "rte/reasoner/prover.hpp"
#include "rte/reasoner/sat_result.hpp"

namespace rte::reasoner {

struct ProofCheckResult {
  bool ok = true;
  std::string error;
  explicit operator bool() const noexcept { return ok; }
};

// Own substitution and matching; nothing here is shared with the prover.
namespace check_detail {

using Binding = std::map<std::string, fole::Term>;

inline fole::Term subst(const fole::Term& t, const Binding& b) {
  if (t.kind() == fole::Term::Kind::variable) {
    auto it = b.find(t.name());
    return it == b.end() ? t : it->second;
  }
  if (t.kind() == fole::Term::Kind::constant) return t;
  std::vector<fole::Term> args;
  for (const auto& a : t.args()) args.push_back(subst(a, b));
  return fole::Term::function(t.name(), std::move(args));
}

inline fole::Literal subst(const fole::Literal& l, const Binding& b) {
  fole::Literal out{l.positive, l.predicate, {}};
  for (const auto& a : l.args) out.args.push_back(subst(a, b));
  return out;
}

inline fole::Term prime(const fole::Term& t) {
  if (t.kind() == fole::Term::Kind::variable) return fole::Term::variable(t.name() + "'");
  if (t.kind() == fole::Term::Kind::constant) return t;
  std::vector<fole::Term> args;
  for (const auto& a : t.args()) args.push_back(prime(a));
  return fole::Term::function(t.name(), std::move(args));
}

inline bool match(const fole::Term& p, const fole::Term& t, Binding& b) {
  if (p.kind() == fole::Term::Kind::variable) {
    auto [it, fresh] = b.try_emplace(p.name(), t);
    return fresh || it->second == t;
  }
  if (p.kind() != t.kind() || p.name() != t.name() || p.args().size() != t.args().size())
    return false;
  for (std::size_t i = 0; i < p.args().size(); ++i)
    if (!match(p.args()[i], t.args()[i], b)) return false;
  return true;
}

inline bool embed(const std::vector<fole::Literal>& c, std::size_t i,
                  const std::vector<fole::Literal>& d, const Binding& b) {
  if (i == c.size()) return true;
  for (const auto& l : d) {
    if (l.positive != c[i].positive || l.predicate != c[i].predicate ||
        l.args.size() != c[i].args.size())
      continue;
    Binding next = b;
    bool ok = true;
    for (std::size_t k = 0; ok && k < l.args.size(); ++k) ok = match(c[i].args[k], l.args[k], next);
    if (ok && embed(c, i + 1, d, next)) return true;
  }
  return false;
}

inline std::vector<fole::Literal> dedupe(std::vector<fole::Literal> lits) {
  std::vector<fole::Literal> out;
  for (auto& l : lits)
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
  return out;
}

// Equal up to consistent variable renaming: same size and each embeds into
// the other.
inline bool variant(std::vector<fole::Literal> a, std::vector<fole::Literal> b) {
  a = dedupe(std::move(a));
  b = dedupe(std::move(b));
  return a.size() == b.size() && embed(a, 0, b, {}) && embed(b, 0, a, {});
}

}  // namespace check_detail

// Checks that every step of `proof` is either a variant of an input clause,
// an equality axiom for the input signature, or follows from earlier steps
// by the recorded rule and unifier, and that the last step is empty.
inline ProofCheckResult check_refutation(const Refutation& proof, const fole::ClauseSet& input) {
  using namespace check_detail;
  auto fail = [](const ProofStep& s, const std::string& why) {
    return ProofCheckResult{false, "step " + std::to_string(s.id) + ": " + why};
  };
  if (proof.steps.empty()) return {false, "empty proof"};
  if (!proof.steps.back().clause.empty()) return {false, "last step is not the empty clause"};

  std::map<std::size_t, const ProofStep*> seen;
  const auto eq_axioms = equality_axioms(input);
  for (const auto& s : proof.steps) {
    if (seen.contains(s.id)) return fail(s, "duplicate id");
    std::vector<const ProofStep*> parents;
    for (auto p : s.parents) {
      auto it = seen.find(p);
      if (it == seen.end()) return fail(s, "parent " + std::to_string(p) + " not derived earlier");
      parents.push_back(it->second);
    }
    const auto& lits = s.clause.literals();
    switch (s.rule) {
      case Rule::input:
      case Rule::equality_axiom: {
        const auto& pool = s.rule == Rule::input ? input : eq_axioms;
        bool found = std::any_of(pool.begin(), pool.end(),
                                 [&](const fole::Clause& c) { return variant(c.literals(), lits); });
        if (!found) return fail(s, "not an input clause");
        break;
      }
      case Rule::factoring: {
        if (parents.size() != 1 || s.literals.size() != 2) return fail(s, "malformed factoring");
        const auto& pl = parents[0]->clause.literals();
        auto [i, j] = std::pair{s.literals[0], s.literals[1]};
        if (i >= pl.size() || j >= pl.size() || i == j) return fail(s, "literal index out of range");
        if (subst(pl[i], s.unifier) != subst(pl[j], s.unifier))
          return fail(s, "unifier does not merge the factored literals");
        std::vector<fole::Literal> expect;
        for (std::size_t k = 0; k < pl.size(); ++k)
          if (k != j) expect.push_back(subst(pl[k], s.unifier));
        if (!variant(expect, lits)) return fail(s, "conclusion does not match factor");
        break;
      }
      case Rule::resolution: {
        if (parents.size() != 2 || s.literals.size() != 2) return fail(s, "malformed resolution");
        const auto& al = parents[0]->clause.literals();
        std::vector<fole::Literal> bl;
        for (const auto& l : parents[1]->clause.literals()) {
          fole::Literal n{l.positive, l.predicate, {}};
          for (const auto& a : l.args) n.args.push_back(prime(a));
          bl.push_back(std::move(n));
        }
        auto [i, j] = std::pair{s.literals[0], s.literals[1]};
        if (i >= al.size() || j >= bl.size()) return fail(s, "literal index out of range");
        auto x = subst(al[i], s.unifier);
        auto y = subst(bl[j], s.unifier);
        if (x.positive == y.positive) return fail(s, "resolved literals have the same sign");
        if (x.predicate != y.predicate || x.args != y.args)
          return fail(s, "unifier does not make the resolved atoms equal");
        std::vector<fole::Literal> expect;
        for (std::size_t k = 0; k < al.size(); ++k)
          if (k != i) expect.push_back(subst(al[k], s.unifier));
        for (std::size_t k = 0; k < bl.size(); ++k)
          if (k != j) expect.push_back(subst(bl[k], s.unifier));
        if (!variant(expect, lits)) return fail(s, "conclusion does not match resolvent");
        break;
      }
    }
    seen.emplace(s.id, &s);
  }
  return {};
}

}  // namespace rte::reasoner
