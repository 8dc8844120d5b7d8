#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rte/fole/axiom.hpp"
#include "rte/kgraph/graph.hpp"

namespace rte::kgraph {

struct Rules {
  bool is_a = true;      // rule 1: one IS-A per edge
  bool is_not_a = true;  // rule 2: IS-NOT-A per unordered pair of siblings
  bool is_eq = true;     // rule 3: IS-EQ per unordered pair of synonyms

  static constexpr Rules all() { return {}; }
  // Strategy 1: drop the exclusion rule.
  static constexpr Rules no_exclusion() { return {true, false, true}; }
};

// Per node in id order: IS-A for its outgoing edges, IS-NOT-A for pairs of
// its children (ordered by representative), IS-EQ for pairs of its members.
inline std::vector<fole::Axiom> generate_axioms(const KnowledgeGraph& g, Rules rules = Rules::all(),
                                                const std::string& phase = "III") {
  using fole::PredicateSymbol;
  std::vector<fole::Axiom> out;
  auto rep = [&](NodeId id) { return PredicateSymbol(g.node(id).representative()); };
  for (auto id : g.node_ids()) {
    if (rules.is_a)
      for (auto p : g.parents(id))
        out.push_back({fole::AxiomKind::is_a, fole::is_a_formula(rep(id), rep(p)),
                       {phase, "edge:" + rep(id).name() + "->" + rep(p).name()}});
    if (rules.is_not_a) {
      const auto kids = g.sorted_children(id);
      for (std::size_t i = 0; i < kids.size(); ++i)
        for (std::size_t j = i + 1; j < kids.size(); ++j)
          out.push_back({fole::AxiomKind::is_not_a, fole::is_not_a_formula(rep(kids[i]), rep(kids[j])),
                         {phase, "siblings:" + rep(id).name()}});
    }
    if (rules.is_eq) {
      const std::vector<std::string> ms(g.node(id).members.begin(), g.node(id).members.end());
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
          out.push_back({fole::AxiomKind::is_eq,
                         fole::is_eq_formula(PredicateSymbol(ms[i]), PredicateSymbol(ms[j])),
                         {phase, "synset:" + ms[0]}});
    }
  }
  return out;
}

inline std::vector<std::pair<NodeId, std::vector<NodeId>>> find_multi_parent_nodes(
    const KnowledgeGraph& g) {
  std::vector<std::pair<NodeId, std::vector<NodeId>>> out;
  for (auto id : g.node_ids())
    if (g.parents(id).size() >= 2)
      out.emplace_back(id, std::vector<NodeId>(g.parents(id).begin(), g.parents(id).end()));
  return out;
}

namespace detail {

// (c, d) for ∀X(c(X) → d(X)) or ∀X(c(X) → ¬d(X)) depending on `negated`.
inline std::optional<std::pair<std::string, std::string>> implication_pair(const fole::Formula& f,
                                                                           bool negated) {
  using fole::FormulaKind;
  if (!f.is(FormulaKind::forall) || !f.body().is(FormulaKind::implication)) return std::nullopt;
  const auto& x = f.variable();
  auto unary_on_x = [&](const fole::Formula& a) {
    return a.is(FormulaKind::atom) && a.args().size() == 1 && a.args()[0].is_variable() &&
           a.args()[0].name() == x;
  };
  const auto& lhs = f.body().left();
  auto rhs = f.body().right();
  if (negated) {
    if (!rhs.is(FormulaKind::negation)) return std::nullopt;
    rhs = rhs.body();
  }
  if (!unary_on_x(lhs) || !unary_on_x(rhs)) return std::nullopt;
  return std::pair{lhs.predicate().name(), rhs.predicate().name()};
}

}  // namespace detail

struct Prop1Conflict {
  std::string ci, cj, ck;  // ∀x(ci→¬cj), ∀x(ck→ci), ∀x(ck→cj)
  std::size_t exclusion, first, second;  // axiom indices

  std::string str() const { return ck + " under exclusive " + ci + " and " + cj; }
};

// Direct occurrences of the sibling exclusion pattern: any ck with IS-A axioms
// into both sides of an IS-NOT-A axiom can have no instances.
inline std::vector<Prop1Conflict> check_prop1_pattern(const std::vector<fole::Axiom>& axioms) {
  std::map<std::string, std::vector<std::pair<std::string, std::size_t>>> up;
  for (std::size_t i = 0; i < axioms.size(); ++i)
    if (auto p = detail::implication_pair(axioms[i].formula, false))
      up[p->first].emplace_back(p->second, i);
  std::vector<Prop1Conflict> out;
  for (std::size_t e = 0; e < axioms.size(); ++e) {
    auto ex = detail::implication_pair(axioms[e].formula, true);
    if (!ex) continue;
    for (const auto& [ck, supers] : up)
      for (const auto& [a, ia] : supers)
        if (a == ex->first)
          for (const auto& [b, ib] : supers)
            if (b == ex->second) out.push_back({ex->first, ex->second, ck, e, ia, ib});
  }
  return out;
}

}  // namespace rte::kgraph
