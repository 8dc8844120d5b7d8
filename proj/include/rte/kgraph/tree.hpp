#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rte/fole/predicate.hpp"
#include "rte/kgraph/axioms.hpp"
#include "rte/kgraph/graph.hpp"

namespace rte::kgraph {

// Which single parent a multi-parent node keeps.
struct EdgePolicy {
  enum class Kind { lowest_sense, manual } kind = Kind::lowest_sense;
  // child symbol -> parent symbol, for Kind::manual.
  std::multimap<std::string, std::string> keep;

  static EdgePolicy lowest_sense() { return {}; }
  static EdgePolicy manual(std::multimap<std::string, std::string> keep) {
    return {Kind::manual, std::move(keep)};
  }
};

// Keep-list lines: `keep <child-symbol> <parent-symbol>`; `%` comments.
inline EdgePolicy parse_keep_list(const std::string& text) {
  std::multimap<std::string, std::string> keep;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head, c, p;
    if (!(ls >> head) || head.starts_with("%")) continue;
    if (head != "keep" || !(ls >> c >> p))
      throw GraphError("keep-list line " + std::to_string(lineno) + ": expected keep <child> <parent>");
    keep.emplace(c, p);
  }
  return EdgePolicy::manual(std::move(keep));
}

// Sort key of the lowest-sense policy: (sense, name) of the representative.
inline std::pair<unsigned, std::string> sense_key(const KnowledgeGraph& g, NodeId id) {
  const auto& rep = g.node(id).representative();
  return {fole::PredicateSymbol(rep).sense(), rep};
}

class UnresolvedNodeError : public GraphError {
 public:
  UnresolvedNodeError(const std::string& node, std::vector<std::string> candidates)
      : GraphError(message(node, candidates)), node_(node), candidates_(std::move(candidates)) {}
  const std::string& node() const noexcept { return node_; }
  const std::vector<std::string>& candidates() const noexcept { return candidates_; }

 private:
  static std::string message(const std::string& node, const std::vector<std::string>& c) {
    std::string m = "no keep directive for '" + node + "'; candidate parents:";
    for (const auto& s : c) m += " " + s;
    return m;
  }
  std::string node_;
  std::vector<std::string> candidates_;
};

struct Reduction {
  KnowledgeTree tree;
  std::vector<std::pair<std::string, std::string>> removed;  // (child, parent) representatives
};

inline NodeId choose_parent(const KnowledgeGraph& g, NodeId id, const EdgePolicy& policy) {
  const auto& ps = g.parents(id);
  if (policy.kind == EdgePolicy::Kind::lowest_sense) {
    NodeId best = *ps.begin();
    for (auto p : ps)
      if (sense_key(g, p) < sense_key(g, best)) best = p;
    return best;
  }
  for (const auto& m : g.node(id).members) {
    auto [lo, hi] = policy.keep.equal_range(m);
    for (auto it = lo; it != hi; ++it)
      for (auto p : ps)
        if (g.node(p).members.contains(it->second)) return p;
  }
  std::vector<std::string> candidates;
  for (auto p : ps) candidates.push_back(g.node(p).representative());
  throw UnresolvedNodeError(g.node(id).representative(), std::move(candidates));
}

// Strategy 2: every multi-parent node keeps exactly one outgoing edge.
inline Reduction reduce_to_tree(KnowledgeGraph g, const EdgePolicy& policy) {
  g.validate();
  Reduction r{g, {}};
  for (const auto& [id, ps] : find_multi_parent_nodes(g)) {
    const NodeId keep = choose_parent(g, id, policy);
    for (auto p : ps)
      if (p != keep) {
        r.tree.remove_edge(id, p);
        r.removed.emplace_back(g.node(id).representative(), g.node(p).representative());
      }
  }
  return r;
}

inline bool holds_any(const ComplexNode& n, const std::set<std::string>& symbols) {
  for (const auto& m : n.members)
    if (symbols.contains(m)) return true;
  return false;
}

// Repeatedly removes leaves that hold no search predicate and contracts
// internal nodes with one parent and one child. The root and nodes holding a
// search predicate are never removed.
inline KnowledgeTree optimize_tree(KnowledgeTree t, const std::set<std::string>& search_predicates) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto id : t.node_ids()) {
      if (!t.contains(id) || id == t.root() || holds_any(t.node(id), search_predicates)) continue;
      const auto& kids = t.children(id);
      const auto& ps = t.parents(id);
      if (kids.empty()) {
        t.remove_node(id);
        changed = true;
      } else if (kids.size() == 1 && ps.size() == 1) {
        const NodeId child = *kids.begin();
        const NodeId parent = *ps.begin();
        t.remove_node(id);
        t.add_edge(child, parent);
        changed = true;
      }
    }
  }
  return t;
}

// Adds `symbol` as a new leaf directly under the root.
inline KnowledgeTree attach_unknown(KnowledgeTree t, const std::string& symbol,
                                    NodeKind kind = NodeKind::individual) {
  if (t.find(symbol)) throw GraphError("'" + symbol + "' is already in the tree");
  const NodeId id = t.add_node({symbol}, kind);
  t.add_edge(id, t.root());
  return t;
}

}  // namespace rte::kgraph
