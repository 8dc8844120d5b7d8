#pragma once

#include <map>
#include <optional>
#include <string>

#include "rte/fole/clause.hpp"

namespace rte::reasoner {

// Idempotent substitution: no bound variable occurs in any range term.
using Substitution = std::map<std::string, fole::Term>;

inline fole::Term substitute(const Substitution& s, const fole::Term& t) {
  if (t.is_variable()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  if (t.is_constant()) return t;
  std::vector<fole::Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(substitute(s, a));
  return fole::Term::function(t.name(), std::move(args));
}

inline fole::Literal substitute(const Substitution& s, const fole::Literal& l) {
  fole::Literal out{l.positive, l.predicate, {}};
  out.args.reserve(l.args.size());
  for (const auto& a : l.args) out.args.push_back(substitute(s, a));
  return out;
}

namespace detail {

inline bool bind(Substitution& s, const std::string& v, const fole::Term& t) {
  if (t.contains_variable(v)) return false;  // occurs check
  Substitution single{{v, t}};
  for (auto& [k, range] : s) range = substitute(single, range);
  s.emplace(v, t);
  return true;
}

inline bool unify_terms(const fole::Term& a0, const fole::Term& b0, Substitution& s) {
  const fole::Term a = substitute(s, a0);
  const fole::Term b = substitute(s, b0);
  if (a == b) return true;
  if (a.is_variable()) return bind(s, a.name(), b);
  if (b.is_variable()) return bind(s, b.name(), a);
  if (a.name() != b.name() || a.args().size() != b.args().size() || a.kind() != b.kind())
    return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!unify_terms(a.args()[i], b.args()[i], s)) return false;
  return true;
}

}  // namespace detail

// Most general unifier of the argument lists of two atoms (signs ignored).
inline std::optional<Substitution> unify_atoms(const fole::Literal& a, const fole::Literal& b,
                                               Substitution s = {}) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) return std::nullopt;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!detail::unify_terms(a.args[i], b.args[i], s)) return std::nullopt;
  return s;
}

// One-way matching: extends `s` so that pattern·s == target.
inline bool match_term(const fole::Term& pattern, const fole::Term& target, Substitution& s) {
  if (pattern.is_variable()) {
    auto it = s.find(pattern.name());
    if (it == s.end()) {
      s.emplace(pattern.name(), target);
      return true;
    }
    return it->second == target;
  }
  if (pattern.kind() != target.kind() || pattern.name() != target.name() ||
      pattern.args().size() != target.args().size())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_term(pattern.args()[i], target.args()[i], s)) return false;
  return true;
}

inline bool match_literal(const fole::Literal& p, const fole::Literal& t, Substitution& s) {
  if (p.positive != t.positive || p.predicate != t.predicate || p.args.size() != t.args.size())
    return false;
  for (std::size_t i = 0; i < p.args.size(); ++i)
    if (!match_term(p.args[i], t.args[i], s)) return false;
  return true;
}

namespace detail {

inline bool subsumes_from(const std::vector<fole::Literal>& c, std::size_t i,
                          const std::vector<fole::Literal>& d, Substitution& s) {
  if (i == c.size()) return true;
  for (const auto& target : d) {
    Substitution trial = s;
    if (match_literal(c[i], target, trial) && subsumes_from(c, i + 1, d, trial)) {
      s = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace detail

// θ-subsumption restricted to |c| <= |d|: some θ maps every literal of c
// into d. The variables of c and d must be disjoint or the caller must not
// rely on d's variables being fixed; matching only binds c's variables.
inline bool subsumes(const fole::Clause& c, const fole::Clause& d) {
  if (c.size() > d.size()) return false;
  for (const auto& l : c.literals()) {
    bool found = false;
    for (const auto& m : d.literals())
      if (l.positive == m.positive && l.predicate == m.predicate) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  Substitution s;
  return detail::subsumes_from(c.literals(), 0, d.literals(), s);
}

inline std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s) {
    if (!first) out += ", ";
    out += v + "->" + t.str();
    first = false;
  }
  return out + "}";
}

// Appends an apostrophe to every variable; separates the second parent of a
// resolution step from the first.
inline fole::Clause rename_apart(const fole::Clause& c) {
  auto ren = [](const fole::Term& t, auto&& self) -> fole::Term {
    if (t.is_variable()) return fole::Term::variable(t.name() + "'");
    if (t.is_constant()) return t;
    std::vector<fole::Term> args;
    for (const auto& a : t.args()) args.push_back(self(a, self));
    return fole::Term::function(t.name(), std::move(args));
  };
  std::vector<fole::Literal> out;
  for (const auto& l : c.literals()) {
    fole::Literal n{l.positive, l.predicate, {}};
    for (const auto& a : l.args) n.args.push_back(ren(a, ren));
    out.push_back(std::move(n));
  }
  return fole::Clause(std::move(out));
}

}  // namespace rte::reasoner
