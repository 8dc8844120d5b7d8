#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rte/fole/formula.hpp"
#include "rte/fole/problem.hpp"
#include "rte/kgraph/graph.hpp"
#include "rte/kgraph/tree.hpp"
#include "rte/ontology/store.hpp"

namespace rte::ontology {

inline bool is_search_category(fole::Category c) {
  using fole::Category;
  return c == Category::noun || c == Category::verb || c == Category::named_entity ||
         c == Category::location;
}

// Unary noun, verb, named-entity and location atoms of T and H.
inline std::set<fole::PredicateSymbol> extract_search_predicates(const fole::Problem& p) {
  std::set<fole::PredicateSymbol> out;
  for (const auto* f : {&p.text, &p.hypothesis}) {
    if (!*f) continue;
    fole::for_each_atom(**f, [&](const fole::Formula& a) {
      if (a.is(fole::FormulaKind::atom) && a.args().size() == 1 &&
          is_search_category(a.predicate().category()))
        out.insert(a.predicate());
    });
  }
  return out;
}

inline std::set<std::string> symbol_names(const std::set<fole::PredicateSymbol>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.name());
  return out;
}

struct Phase1Result {
  kgraph::KnowledgeGraph graph;
  std::set<std::string> unresolved;
};

inline kgraph::NodeKind default_kind(const std::string& symbol) {
  return fole::PredicateSymbol(symbol).category() == fole::Category::named_entity
             ? kgraph::NodeKind::individual
             : kgraph::NodeKind::concept_node;
}

// Taxonomy graph: every found predicate with all its hyperonym paths;
// synsets become complex nodes and synsets without hyperonyms hang under the
// root. Absent predicates are reported and attached under the root.
inline Phase1Result build_graph_phase1(const std::set<std::string>& preds, const TaxonomyStore& store,
                                       const std::string& root_symbol = kgraph::default_root_symbol) {
  Phase1Result r{kgraph::KnowledgeGraph(root_symbol), {}};
  auto& g = r.graph;
  const std::string root_rep = store.contains(root_symbol) ? store.find(root_symbol) : root_symbol;
  if (store.contains(root_symbol))
    for (const auto& m : store.synset(root_symbol)) g.add_member(g.root(), m);

  std::map<std::string, kgraph::NodeId> by_rep{{root_rep, g.root()}};
  auto node_for = [&](const std::string& rep, auto&& self) -> kgraph::NodeId {
    if (auto it = by_rep.find(rep); it != by_rep.end()) return it->second;
    const auto members = store.synset(rep);
    auto kind = kgraph::NodeKind::concept_node;
    for (const auto& m : members)
      if (store.kind(m) == kgraph::NodeKind::individual) kind = kgraph::NodeKind::individual;
    const auto id = g.add_node(members, kind);
    by_rep.emplace(rep, id);
    const auto supers = store.hypernym_synsets(rep);
    if (supers.empty()) g.add_edge(id, g.root());
    for (const auto& s : supers) g.add_edge(id, self(s, self));
    return id;
  };
  for (const auto& p : preds) {
    if (g.find(p)) continue;
    if (store.contains(p)) {
      node_for(store.find(p), node_for);
    } else {
      r.unresolved.insert(p);
    }
  }
  for (const auto& p : r.unresolved) g = kgraph::attach_unknown(std::move(g), p, default_kind(p));
  return r;
}

}  // namespace rte::ontology
