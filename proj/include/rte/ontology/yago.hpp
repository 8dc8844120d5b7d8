#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rte/fole/problem.hpp"
#include "rte/kgraph/graph.hpp"
#include "rte/ontology/store.hpp"

namespace rte::ontology {

inline const std::string wordnet_marker = "wordnet_";

// Answer to `<subject> type ?` and `<subject> isCalled ?`. The graph's root
// is the most general class; its only leaf is the subject.
struct TypeQueryResult {
  std::string subject;
  kgraph::KnowledgeGraph graph;
  std::vector<std::string> aliases;

  kgraph::NodeId leaf() const { return *graph.find(subject); }
};

// Fixture lines: `fact <subject> type <class>`, `sub <class> <superclass>`,
// `isCalled <name>`. Classes without the wordnet_ marker are dropped.
inline TypeQueryResult parse_yago_fixture(const std::string& subject, const std::string& text) {
  std::set<std::string> types;
  std::map<std::string, std::set<std::string>> supers;
  std::vector<std::string> aliases;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw StoreError(subject + ".yago line " + std::to_string(lineno) + ": " + msg);
  };
  auto strip = [](const std::string& c) -> std::optional<std::string> {
    if (!c.starts_with(wordnet_marker)) return std::nullopt;
    return c.substr(wordnet_marker.size());
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head.starts_with("%")) continue;
    if (head == "fact") {
      std::string sub, rel, cls;
      if (!(ls >> sub >> rel >> cls) || rel != "type") fail("expected: fact <subject> type <class>");
      if (sub != subject) fail("fact about '" + sub + "' in fixture for '" + subject + "'");
      if (auto c = strip(cls)) types.insert(*c);
    } else if (head == "sub") {
      std::string a, b;
      if (!(ls >> a >> b)) fail("expected: sub <class> <superclass>");
      auto ca = strip(a), cb = strip(b);
      if (ca && cb) supers[*ca].insert(*cb);
    } else if (head == "isCalled") {
      std::string name;
      if (!(ls >> name)) fail("expected: isCalled <name>");
      if (std::find(aliases.begin(), aliases.end(), name) == aliases.end()) aliases.push_back(name);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (types.empty()) throw StoreError("fixture for '" + subject + "' has no wordnet_ type facts");

  std::set<std::string> classes;
  std::vector<std::string> todo(types.begin(), types.end());
  while (!todo.empty()) {
    auto c = todo.back();
    todo.pop_back();
    if (!classes.insert(c).second) continue;
    for (const auto& s : supers[c]) todo.push_back(s);
  }
  std::vector<std::string> tops;
  for (const auto& c : classes)
    if (supers[c].empty()) tops.push_back(c);
  if (tops.size() != 1)
    throw StoreError("fixture for '" + subject + "' must have exactly one most general class");

  TypeQueryResult r{subject, kgraph::KnowledgeGraph(tops[0]), aliases};
  auto& g = r.graph;
  std::map<std::string, kgraph::NodeId> ids{{tops[0], g.root()}};
  for (const auto& c : classes)
    if (!ids.contains(c)) ids[c] = g.add_node({c}, kgraph::NodeKind::concept_node);
  for (const auto& c : classes)
    for (const auto& s : supers[c]) g.add_edge(ids[c], ids[s]);
  const auto leaf = g.add_node({subject}, kgraph::NodeKind::individual);
  for (const auto& t : types) g.add_edge(leaf, ids[t]);
  g.validate();
  return r;
}

// Reads every `<predicate>.yago` file of a directory.
inline std::map<std::string, TypeQueryResult> load_yago_dir(const std::string& dir) {
  std::map<std::string, TypeQueryResult> out;
  if (!std::filesystem::is_directory(dir)) throw StoreError("not a directory: '" + dir + "'");
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() != ".yago") continue;
    const auto subject = e.path().stem().string();
    out.emplace(subject, parse_yago_fixture(subject, fole::read_file(e.path().string())));
  }
  return out;
}

// Number of path nodes (leaf excluded) already present in `tree`.
inline std::size_t shared_nodes(const std::vector<std::string>& path, const kgraph::KnowledgeTree& tree) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (tree.find(path[i])) ++n;
  return n;
}

// All root-to-leaf paths of the fixture type graph as representative symbols, leaf last.
inline std::vector<std::vector<std::string>> yago_paths(const TypeQueryResult& q) {
  const auto& g = q.graph;
  const auto leaf = q.leaf();
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  auto walk = [&](kgraph::NodeId n, auto&& self) -> void {
    current.push_back(g.node(n).representative());
    if (g.children(n).contains(leaf)) {
      out.push_back(current);
      out.back().push_back(q.subject);
    }
    for (auto c : g.children(n))
      if (c != leaf) self(c, self);
    current.pop_back();
  };
  walk(g.root(), walk);
  return out;
}

// Maximizes (shared nodes with the tree, length); ties go to the
// lexicographically smallest symbol sequence.
inline std::vector<std::string> select_yago_path(const TypeQueryResult& q, const kgraph::KnowledgeTree& tree) {
  const auto paths = yago_paths(q);
  if (paths.empty()) throw StoreError("empty type graph for '" + q.subject + "'");
  const std::vector<std::string>* best = nullptr;
  for (const auto& p : paths) {
    if (!best) {
      best = &p;
      continue;
    }
    const auto kp = std::pair{shared_nodes(p, tree), p.size()};
    const auto kb = std::pair{shared_nodes(*best, tree), best->size()};
    if (kp > kb || (kp == kb && p < *best)) best = &p;
  }
  return *best;
}

}  // namespace rte::ontology
