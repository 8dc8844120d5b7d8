#pragma once

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rte/fole/problem.hpp"
#include "rte/kgraph/graph.hpp"

namespace rte::ontology {

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// WordNet-style taxonomy: `syn <s1> <s2>`, `hyp <hyponym> <hyperonym>`,
// `kind <symbol> concept|individual`. Symbols without a kind line are
// concepts.
class TaxonomyStore {
 public:
  static TaxonomyStore parse(const std::string& text) {
    TaxonomyStore s;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
      throw StoreError("line " + std::to_string(lineno) + ": " + msg);
    };
    std::vector<std::pair<std::string, std::string>> hyps;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string head, a, b, extra;
      if (!(ls >> head) || head.starts_with("%")) continue;
      if (!(ls >> a >> b) || (ls >> extra)) fail("expected two operands after '" + head + "'");
      if (head == "syn") {
        s.unite(a, b);
      } else if (head == "hyp") {
        s.touch(a);
        s.touch(b);
        hyps.emplace_back(a, b);
      } else if (head == "kind") {
        auto k = kgraph::node_kind_from_string(b);
        if (!k) fail("unknown kind '" + b + "'");
        s.touch(a);
        s.kinds_[a] = *k;
      } else {
        fail("unknown directive '" + head + "'");
      }
    }
    for (const auto& [a, b] : hyps) {
      const auto ra = s.find(a), rb = s.find(b);
      if (ra == rb) throw StoreError("'" + a + "' is a hyponym of its own synonym '" + b + "'");
      s.hypernyms_[ra].insert(rb);
    }
    s.check_acyclic();
    return s;
  }

  static TaxonomyStore load(const std::string& path) { return parse(fole::read_file(path)); }

  bool contains(const std::string& symbol) const { return parent_.contains(symbol); }

  // Synset of a known symbol.
  std::set<std::string> synset(const std::string& symbol) const {
    std::set<std::string> out;
    const auto r = find(symbol);
    for (const auto& [m, p] : parent_)
      if (find(m) == r) out.insert(m);
    return out;
  }

  // Direct hyperonym synsets, identified by their union-find representative.
  std::set<std::string> hypernym_synsets(const std::string& symbol) const {
    auto it = hypernyms_.find(find(symbol));
    return it == hypernyms_.end() ? std::set<std::string>{} : it->second;
  }

  kgraph::NodeKind kind(const std::string& symbol) const {
    auto it = kinds_.find(symbol);
    return it == kinds_.end() ? kgraph::NodeKind::concept_node : it->second;
  }

  std::size_t symbol_count() const noexcept { return parent_.size(); }

  std::string find(const std::string& s) const {
    std::string r = s;
    while (true) {
      auto it = parent_.find(r);
      if (it == parent_.end() || it->second == r) return r;
      r = it->second;
    }
  }

 private:
  void touch(const std::string& s) { parent_.try_emplace(s, s); }

  void unite(const std::string& a, const std::string& b) {
    touch(a);
    touch(b);
    auto ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
  }

  void check_acyclic() const {
    std::map<std::string, int> color;
    std::vector<std::string> stack;
    auto dfs = [&](const std::string& n, auto&& self) -> void {
      color[n] = 1;
      stack.push_back(n);
      if (auto it = hypernyms_.find(n); it != hypernyms_.end())
        for (const auto& p : it->second) {
          if (color[p] == 1) {
            std::string msg = "hypernym cycle:";
            for (auto s = std::find(stack.begin(), stack.end(), p); s != stack.end(); ++s)
              msg += " " + *s;
            throw StoreError(msg + " " + p);
          }
          if (color[p] == 0) self(p, self);
        }
      stack.pop_back();
      color[n] = 2;
    };
    for (const auto& [n, ps] : hypernyms_)
      if (color[n] == 0) dfs(n, dfs);
  }

  std::map<std::string, std::string> parent_;
  std::map<std::string, std::set<std::string>> hypernyms_;
  std::map<std::string, kgraph::NodeKind> kinds_;
};

}  // namespace rte::ontology
