#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rte::kgraph {

inline const std::string default_root_symbol = "entity_n_1";

enum class NodeKind { concept_node, individual };

inline std::string_view to_string(NodeKind k) {
  return k == NodeKind::concept_node ? "concept" : "individual";
}

inline std::optional<NodeKind> node_kind_from_string(std::string_view s) {
  if (s == "concept") return NodeKind::concept_node;
  if (s == "individual") return NodeKind::individual;
  return std::nullopt;
}

using NodeId = std::size_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One synset: mutually synonymous concepts or individuals.
struct ComplexNode {
  std::set<std::string> members;
  NodeKind kind = NodeKind::concept_node;

  const std::string& representative() const { return *members.begin(); }
  std::string label() const {
    std::string out;
    for (const auto& m : members) out += (out.empty() ? "" : ",") + m;
    return out;
  }
};

// Hyponym -> hyperonym graph over complex nodes. A knowledge tree is the
// same structure with one parent per non-root node (see tree_violations).
class KnowledgeGraph {
 public:
  explicit KnowledgeGraph(const std::string& root_symbol = default_root_symbol) {
    root_ = add_node({root_symbol}, NodeKind::concept_node);
  }

  NodeId root() const noexcept { return root_; }
  const ComplexNode& root_node() const { return node(root_); }

  NodeId add_node(std::set<std::string> members, NodeKind kind) {
    if (members.empty()) throw GraphError("complex node needs at least one member");
    for (const auto& m : members)
      if (index_.contains(m)) throw GraphError("symbol '" + m + "' already belongs to a node");
    const NodeId id = next_id_++;
    for (const auto& m : members) index_.emplace(m, id);
    nodes_.emplace(id, Entry{ComplexNode{std::move(members), kind}, {}, {}});
    return id;
  }

  void add_member(NodeId id, const std::string& symbol) {
    auto& e = entry(id);
    if (auto it = index_.find(symbol); it != index_.end()) {
      if (it->second == id) return;
      throw GraphError("symbol '" + symbol + "' already belongs to a node");
    }
    e.node.members.insert(symbol);
    index_.emplace(symbol, id);
  }

  // Returns false if the edge was already present.
  bool add_edge(NodeId child, NodeId parent) {
    if (child == parent) throw GraphError("self-edge on '" + node(child).representative() + "'");
    entry(parent);
    if (!entry(child).parents.insert(parent).second) return false;
    entry(parent).children.insert(child);
    return true;
  }

  bool remove_edge(NodeId child, NodeId parent) {
    if (!entry(child).parents.erase(parent)) return false;
    entry(parent).children.erase(child);
    return true;
  }

  void remove_node(NodeId id) {
    if (id == root_) throw GraphError("cannot remove the root");
    auto& e = entry(id);
    for (auto p : e.parents) entry(p).children.erase(id);
    for (auto c : e.children) entry(c).parents.erase(id);
    for (const auto& m : e.node.members) index_.erase(m);
    nodes_.erase(id);
  }

  bool contains(NodeId id) const { return nodes_.contains(id); }
  const ComplexNode& node(NodeId id) const { return entry(id).node; }
  const std::set<NodeId>& parents(NodeId id) const { return entry(id).parents; }
  const std::set<NodeId>& children(NodeId id) const { return entry(id).children; }

  std::optional<NodeId> find(const std::string& symbol) const {
    auto it = index_.find(symbol);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<NodeId> node_ids() const {
    std::vector<NodeId> out;
    for (const auto& [id, e] : nodes_) out.push_back(id);
    return out;
  }

  std::size_t node_count() const noexcept { return nodes_.size(); }

  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (const auto& [id, e] : nodes_)
      for (auto p : e.parents) out.emplace_back(id, p);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& [id, e] : nodes_) n += e.parents.size();
    return n;
  }

  // Children ordered by representative member.
  std::vector<NodeId> sorted_children(NodeId id) const {
    std::vector<NodeId> out(children(id).begin(), children(id).end());
    std::sort(out.begin(), out.end(), [&](NodeId a, NodeId b) {
      return node(a).representative() < node(b).representative();
    });
    return out;
  }

  bool is_ancestor(NodeId ancestor, NodeId of) const {
    std::vector<NodeId> todo{of};
    std::set<NodeId> seen;
    while (!todo.empty()) {
      auto n = todo.back();
      todo.pop_back();
      if (n == ancestor) return true;
      if (!seen.insert(n).second) continue;
      for (auto p : parents(n)) todo.push_back(p);
    }
    return false;
  }

  // Acyclic and every node reaches the root, which has no parents.
  void validate() const {
    if (!parents(root_).empty()) throw GraphError("root has a parent");
    if (auto cycle = find_cycle()) {
      std::string msg = "cycle:";
      for (auto id : *cycle) msg += " " + node(id).representative();
      throw GraphError(msg);
    }
    for (auto id : node_ids())
      if (!is_ancestor(root_, id))
        throw GraphError("node '" + node(id).representative() + "' does not reach the root");
  }

  // Empty for a valid knowledge tree.
  std::vector<std::string> tree_violations(const std::string& root_symbol = default_root_symbol) const {
    std::vector<std::string> out;
    if (node(root_).members != std::set<std::string>{root_symbol})
      out.push_back("root is not '" + root_symbol + "'");
    if (!parents(root_).empty()) out.push_back("root has a parent");
    for (auto id : node_ids())
      if (id != root_ && parents(id).size() != 1)
        out.push_back("node '" + node(id).representative() + "' has " +
                      std::to_string(parents(id).size()) + " parents");
    try {
      validate();
    } catch (const GraphError& e) {
      out.emplace_back(e.what());
    }
    return out;
  }

  bool is_tree() const { return tree_violations(node(root_).representative()).empty(); }

  std::optional<std::vector<NodeId>> find_cycle() const {
    std::map<NodeId, int> color;
    std::vector<NodeId> stack;
    std::optional<std::vector<NodeId>> found;
    auto dfs = [&](NodeId n, auto&& self) -> bool {
      color[n] = 1;
      stack.push_back(n);
      for (auto p : parents(n)) {
        if (color[p] == 1) {
          auto it = std::find(stack.begin(), stack.end(), p);
          found = std::vector<NodeId>(it, stack.end());
          found->push_back(p);
          return true;
        }
        if (color[p] == 0 && self(p, self)) return true;
      }
      stack.pop_back();
      color[n] = 2;
      return false;
    };
    for (auto id : node_ids())
      if (color[id] == 0 && dfs(id, dfs)) return found;
    return std::nullopt;
  }

  friend bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    return a.root_ == b.root_ && a.nodes_ == b.nodes_;
  }

 private:
  struct Entry {
    ComplexNode node;
    std::set<NodeId> parents;
    std::set<NodeId> children;
    friend bool operator==(const Entry& a, const Entry& b) {
      return a.node.members == b.node.members && a.node.kind == b.node.kind &&
             a.parents == b.parents && a.children == b.children;
    }
  };

  Entry& entry(NodeId id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw GraphError("no node " + std::to_string(id));
    return it->second;
  }
  const Entry& entry(NodeId id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw GraphError("no node " + std::to_string(id));
    return it->second;
  }

  NodeId root_ = 0;
  NodeId next_id_ = 0;
  std::map<NodeId, Entry> nodes_;
  std::map<std::string, NodeId> index_;
};

using KnowledgeTree = KnowledgeGraph;

// `node <id> kind=<k> members=<m1,m2,...>` and `edge <child> <parent>`.
inline std::string write_graph(const KnowledgeGraph& g) {
  std::ostringstream os;
  for (auto id : g.node_ids())
    os << "node " << id << " kind=" << to_string(g.node(id).kind) << " members=" << g.node(id).label()
       << "\n";
  for (auto [c, p] : g.edges()) os << "edge " << c << " " << p << "\n";
  return os.str();
}

// The root is the node holding `root_symbol`. Node ids are renumbered in
// file order.
inline KnowledgeGraph read_graph(const std::string& text,
                                 const std::string& root_symbol = default_root_symbol) {
  struct NodeLine {
    std::string id;
    NodeKind kind;
    std::set<std::string> members;
  };
  std::vector<NodeLine> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw GraphError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head.starts_with("%")) continue;
    if (head == "node") {
      NodeLine n{};
      std::string kind, members;
      if (!(ls >> n.id >> kind >> members)) fail("expected: node <id> kind=<k> members=<list>");
      if (!kind.starts_with("kind=") || !members.starts_with("members="))
        fail("expected: node <id> kind=<k> members=<list>");
      auto k = node_kind_from_string(kind.substr(5));
      if (!k) fail("unknown kind '" + kind.substr(5) + "'");
      n.kind = *k;
      std::istringstream ms(members.substr(8));
      for (std::string m; std::getline(ms, m, ',');)
        if (!m.empty()) n.members.insert(m);
      if (n.members.empty()) fail("node without members");
      nodes.push_back(std::move(n));
    } else if (head == "edge") {
      std::string c, p;
      if (!(ls >> c >> p)) fail("expected: edge <child> <parent>");
      edges.emplace_back(c, p);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  auto root_it = std::find_if(nodes.begin(), nodes.end(),
                              [&](const NodeLine& n) { return n.members.contains(root_symbol); });
  if (root_it == nodes.end()) throw GraphError("no node holds the root symbol '" + root_symbol + "'");
  KnowledgeGraph g(root_symbol);
  std::map<std::string, NodeId> ids;
  for (const auto& n : nodes) {
    if (ids.contains(n.id)) throw GraphError("duplicate node id " + n.id);
    if (&n == &*root_it) {
      for (const auto& m : n.members) g.add_member(g.root(), m);
      ids[n.id] = g.root();
    } else {
      ids[n.id] = g.add_node(n.members, n.kind);
    }
  }
  for (const auto& [c, p] : edges) {
    if (!ids.contains(c) || !ids.contains(p)) throw GraphError("edge names unknown node");
    g.add_edge(ids[c], ids[p]);
  }
  return g;
}

}  // namespace rte::kgraph
