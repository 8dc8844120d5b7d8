#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rte/fole/axiom.hpp"
#include "rte/fole/problem.hpp"
#include "rte/presup/lambda.hpp"

namespace rte::presup {

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ArgumentEntry {
  std::string trigger;
  std::string axiom_id;
  std::string category = "np";
  std::vector<LambdaTerm> args;
};

// Trigger-keyed argument sets plus the abstract axioms they refer to.
struct ArgumentStore {
  std::map<std::string, ArgumentEntry> entries;
  std::map<std::string, LambdaTerm> abstracts;

  // Every entry names a known abstract axiom of matching depth.
  void validate() const {
    for (const auto& [trigger, e] : entries) {
      auto it = abstracts.find(e.axiom_id);
      if (it == abstracts.end())
        throw StoreError("trigger '" + trigger + "' refers to unknown axiom '" + e.axiom_id + "'");
      if (abstraction_depth(it->second) != e.args.size())
        throw StoreError("trigger '" + trigger + "' supplies " + std::to_string(e.args.size()) +
                         " arguments; axiom '" + e.axiom_id + "' takes " +
                         std::to_string(abstraction_depth(it->second)));
    }
  }
};

// `trigger <pred> axiom <id> [category=<c>]` followed by
// `arg lambda <var> <fole-fragment>` lines.
inline std::map<std::string, ArgumentEntry> parse_argument_store(const std::string& text) {
  std::map<std::string, ArgumentEntry> out;
  ArgumentEntry* current = nullptr;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw StoreError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head.starts_with("%")) continue;
    if (head == "trigger") {
      ArgumentEntry e;
      std::string kw, extra;
      if (!(ls >> e.trigger >> kw >> e.axiom_id) || kw != "axiom")
        fail("expected: trigger <pred> axiom <id>");
      while (ls >> extra) {
        if (!extra.starts_with("category=")) fail("unknown attribute '" + extra + "'");
        e.category = extra.substr(9);
      }
      if (out.contains(e.trigger)) fail("duplicate trigger '" + e.trigger + "'");
      current = &out.emplace(e.trigger, std::move(e)).first->second;
    } else if (head == "arg") {
      if (!current) fail("argument before any trigger");
      std::string kw, var;
      if (!(ls >> kw >> var) || kw != "lambda") fail("expected: arg lambda <var> <fragment>");
      std::string rest;
      std::getline(ls, rest);
      try {
        current->args.push_back(LambdaTerm::abstraction(var, parse_lambda(rest, lineno - 1)));
      } catch (const fole::ParseError& e) {
        fail(e.message());
      }
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  return out;
}

// `axiom <id>` header lines, each followed by one term ending in `.`.
inline std::map<std::string, LambdaTerm> parse_abstract_axioms(const std::string& text) {
  std::map<std::string, LambdaTerm> out;
  std::istringstream in(text);
  std::string line, id, body;
  std::size_t lineno = 0, body_line = 0;
  auto flush = [&] {
    if (id.empty()) return;
    if (body.find_first_not_of(" \t\r\n") == std::string::npos)
      throw StoreError("axiom '" + id + "' has no body");
    out.insert_or_assign(id, parse_lambda(body, body_line));
    id.clear();
    body.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if ((ls >> head) && head == "axiom") {
      flush();
      if (!(ls >> id)) throw StoreError("line " + std::to_string(lineno) + ": axiom without id");
      if (out.contains(id)) throw StoreError("duplicate axiom '" + id + "'");
      body_line = lineno;
      continue;
    }
    if (!id.empty()) body += line + "\n";
    else if (!head.empty() && !head.starts_with("%"))
      throw StoreError("line " + std::to_string(lineno) + ": content before axiom header");
  }
  flush();
  return out;
}

inline ArgumentStore load_argument_store(const std::string& store_path, const std::string& axioms_path) {
  ArgumentStore s{parse_argument_store(fole::read_file(store_path)),
                  parse_abstract_axioms(fole::read_file(axioms_path))};
  s.validate();
  return s;
}

struct TriggerMatch {
  fole::PredicateSymbol predicate;
  const ArgumentEntry* entry = nullptr;
};

// Distinct unary noun atoms of `f` that key a store entry, in order of first
// occurrence.
inline std::vector<TriggerMatch> scan_triggers(const fole::Formula& f, const ArgumentStore& store) {
  std::vector<TriggerMatch> out;
  fole::for_each_atom(f, [&](const fole::Formula& a) {
    if (!a.is(fole::FormulaKind::atom) || a.args().size() != 1) return;
    if (a.predicate().category() != fole::Category::noun) return;
    auto it = store.entries.find(a.predicate().name());
    if (it == store.entries.end()) return;
    auto seen = [&](const TriggerMatch& m) { return m.predicate == a.predicate(); };
    if (std::none_of(out.begin(), out.end(), seen)) out.push_back({a.predicate(), &it->second});
  });
  return out;
}

// One PRESUPPOSITION axiom per trigger found in T.
inline std::vector<fole::Axiom> generate_presup_axioms(const fole::Problem& p, const ArgumentStore& store) {
  std::vector<fole::Axiom> out;
  if (!p.text) return out;
  for (const auto& m : scan_triggers(*p.text, store)) {
    auto it = store.abstracts.find(m.entry->axiom_id);
    if (it == store.abstracts.end())
      throw StoreError("trigger '" + m.entry->trigger + "' refers to unknown axiom '" +
                       m.entry->axiom_id + "'");
    fole::Axiom ax{fole::AxiomKind::presupposition, instantiate(it->second, m.entry->args),
                   {"presup", "trigger:" + m.entry->trigger + "/" + m.entry->axiom_id}};
    auto dup = [&](const fole::Axiom& b) { return b.formula == ax.formula; };
    if (std::none_of(out.begin(), out.end(), dup)) out.push_back(std::move(ax));
  }
  return out;
}

}  // namespace rte::presup
