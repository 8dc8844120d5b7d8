#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rte/fole/aliases.hpp"
#include "rte/fole/axiom.hpp"
#include "rte/fole/problem.hpp"
#include "rte/kgraph/axioms.hpp"
#include "rte/kgraph/tree.hpp"
#include "rte/ontology/phase1.hpp"
#include "rte/ontology/store.hpp"
#include "rte/ontology/yago.hpp"

namespace rte::ontology {

class IntegrationConflict : public kgraph::GraphError {
 public:
  using kgraph::GraphError::GraphError;
};

inline std::string ancestor_chain(const kgraph::KnowledgeTree& t, kgraph::NodeId n) {
  std::string out = t.node(n).representative();
  while (!t.parents(n).empty()) {
    n = *t.parents(n).begin();
    out += " -> " + t.node(n).representative();
  }
  return out;
}

// Merges a selected fixture path (most general first, subject last) into the
// tree. The deepest path node already in the tree is the anchor; the path
// nodes below it are appended as a chain and those above it that the tree
// lacks are dropped. Path nodes present in the tree must lie on the
// anchor's ancestor chain.
inline kgraph::KnowledgeTree integrate_path(kgraph::KnowledgeTree t, const std::vector<std::string>& path) {
  if (path.empty()) return t;
  std::optional<std::size_t> anchor_pos;
  for (std::size_t i = path.size(); i-- > 0;)
    if (t.find(path[i])) {
      anchor_pos = i;
      break;
    }
  kgraph::NodeId anchor = anchor_pos ? *t.find(path[*anchor_pos]) : t.root();
  if (anchor_pos) {
    for (std::size_t i = 0; i < *anchor_pos; ++i) {
      auto id = t.find(path[i]);
      if (id && !t.is_ancestor(*id, anchor))
        throw IntegrationConflict("cannot place '" + path[*anchor_pos] + "' under '" + path[i] +
                                  "': tree chain is " + ancestor_chain(t, anchor));
    }
  }
  const std::size_t first_new = anchor_pos ? *anchor_pos + 1 : 0;
  for (std::size_t i = first_new; i < path.size(); ++i) {
    const auto kind = i + 1 == path.size() ? kgraph::NodeKind::individual : kgraph::NodeKind::concept_node;
    const auto id = t.add_node({path[i]}, kind);
    t.add_edge(id, anchor);
    anchor = id;
  }
  return t;
}

// `budysin` for subject `bautzen_ne_1` becomes `budysin_ne_1`.
inline std::string alias_symbol(const std::string& subject, const std::string& name) {
  const fole::PredicateSymbol s(subject);
  if (!s.has_suffix()) return name;
  return name + subject.substr(s.lemma().size());
}

struct PipelineOptions {
  kgraph::EdgePolicy policy = kgraph::EdgePolicy::lowest_sense();
  std::string root_symbol = kgraph::default_root_symbol;
  bool optimize = true;
};

struct PipelineReport {
  fole::Problem problem;
  kgraph::KnowledgeGraph graph;  // taxonomy graph before reduction
  kgraph::KnowledgeTree tree;    // final tree
  std::set<std::string> search_predicates;
  std::set<std::string> unresolved;          // after Phase I
  std::set<std::string> resolved_by_yago;    // subset of unresolved
  std::vector<std::pair<std::string, std::string>> removed_edges;
  std::map<std::string, std::vector<std::string>> aliases;  // subject -> alias symbols
  std::vector<fole::Axiom> generated;                       // Phase III output, deduplicated
};

inline bool same_formula(const fole::Axiom& a, const fole::Axiom& b) { return a.formula == b.formula; }

// Phase I (taxonomy graph, tree reduction, optimization), Phase II (fixture lookup,
// path selection and integration, alias injection) and Phase III (axioms
// from the final tree, appended to the background).
inline PipelineReport run_pipeline(const fole::Problem& p, const TaxonomyStore& store,
                                   const std::map<std::string, TypeQueryResult>& yago,
                                   const PipelineOptions& opts = {}) {
  PipelineReport r{p, kgraph::KnowledgeGraph(opts.root_symbol), kgraph::KnowledgeGraph(opts.root_symbol), {}, {}, {}, {}, {}, {}};
  r.search_predicates = symbol_names(extract_search_predicates(p));

  auto phase1 = build_graph_phase1(r.search_predicates, store, opts.root_symbol);
  r.graph = phase1.graph;
  r.unresolved = phase1.unresolved;
  auto reduction = kgraph::reduce_to_tree(phase1.graph, opts.policy);
  r.removed_edges = reduction.removed;
  auto tree = opts.optimize ? kgraph::optimize_tree(std::move(reduction.tree), r.search_predicates)
                           : std::move(reduction.tree);

  std::set<std::string> yago_symbols;
  auto detach_provisional = [&](const std::string& sym) {
    auto id = tree.find(sym);
    if (id && tree.children(*id).empty() && tree.parents(*id) == std::set{tree.root()})
      tree.remove_node(*id);
  };
  for (const auto& subject : r.unresolved) {
    auto it = yago.find(subject);
    if (it == yago.end()) continue;
    std::vector<std::string> alias_syms;
    for (const auto& name : it->second.aliases) {
      auto sym = alias_symbol(subject, name);
      if (sym != subject) alias_syms.push_back(sym);
    }
    detach_provisional(subject);
    for (const auto& a : alias_syms)
      if (r.unresolved.contains(a)) detach_provisional(a);
    const auto path = select_yago_path(it->second, tree);
    for (const auto& s : path)
      if (!tree.find(s)) yago_symbols.insert(s);
    tree = integrate_path(std::move(tree), path);
    const auto leaf = *tree.find(subject);
    for (const auto& a : alias_syms) {
      tree.add_member(leaf, a);
      yago_symbols.insert(a);
    }
    r.resolved_by_yago.insert(subject);
    r.aliases[subject] = alias_syms;

    const fole::PredicateSymbol entity(subject);
    for (auto* f : {&r.problem.text, &r.problem.hypothesis}) {
      if (!*f || !fole::mentions_unary(**f, entity)) continue;
      std::vector<fole::PredicateSymbol> fresh;
      for (const auto& a : alias_syms)
        if (!fole::mentions_unary(**f, fole::PredicateSymbol(a))) fresh.emplace_back(a);
      **f = fole::inject_aliases(**f, entity, fresh);
    }
  }
  auto keep = r.search_predicates;
  for (const auto& [s, as] : r.aliases) keep.insert(as.begin(), as.end());
  r.tree = opts.optimize ? kgraph::optimize_tree(std::move(tree), keep) : std::move(tree);

  for (auto ax : kgraph::generate_axioms(r.tree, kgraph::Rules::all(), "III")) {
    bool from_yago = false;
    for (const auto& [sym, n] : fole::predicates(ax.formula))
      if (yago_symbols.contains(sym.name())) from_yago = true;
    ax.provenance.source = (from_yago ? "yago/" : "wordnet/") + ax.provenance.source;
    auto dup = [&](const fole::Axiom& b) { return same_formula(ax, b); };
    if (std::none_of(r.generated.begin(), r.generated.end(), dup)) r.generated.push_back(ax);
  }
  for (const auto& ax : r.generated) {
    auto dup = [&](const fole::Axiom& b) { return same_formula(ax, b); };
    if (std::none_of(r.problem.background.begin(), r.problem.background.end(), dup))
      r.problem.background.push_back(ax);
  }
  return r;
}

}  // namespace rte::ontology
