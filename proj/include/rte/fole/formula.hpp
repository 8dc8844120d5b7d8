#pragma once

#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rte/fole/predicate.hpp"
#include "rte/fole/term.hpp"

namespace rte::fole {

enum class FormulaKind {
  atom,
  equal,
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  exists,
  forall,
};

// Immutable FOLE syntax tree. Copies share structure.
class Formula {
 public:
  Formula() = default;

  static Formula atom(PredicateSymbol pred, std::vector<Term> args) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::atom;
    n->pred = std::move(pred);
    n->args = std::move(args);
    return Formula(std::move(n));
  }
  static Formula atom(std::string pred, std::vector<Term> args) {
    return atom(PredicateSymbol(std::move(pred)), std::move(args));
  }
  static Formula equal(Term l, Term r) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::equal;
    n->args = {std::move(l), std::move(r)};
    return Formula(std::move(n));
  }
  static Formula negation(Formula f) { return unary(FormulaKind::negation, std::move(f)); }
  static Formula conjunction(Formula a, Formula b) {
    return binary(FormulaKind::conjunction, std::move(a), std::move(b));
  }
  static Formula disjunction(Formula a, Formula b) {
    return binary(FormulaKind::disjunction, std::move(a), std::move(b));
  }
  static Formula implication(Formula a, Formula b) {
    return binary(FormulaKind::implication, std::move(a), std::move(b));
  }
  static Formula equivalence(Formula a, Formula b) {
    return binary(FormulaKind::equivalence, std::move(a), std::move(b));
  }
  static Formula exists(std::string var, Formula body) {
    return quantifier(FormulaKind::exists, std::move(var), std::move(body));
  }
  static Formula forall(std::string var, Formula body) {
    return quantifier(FormulaKind::forall, std::move(var), std::move(body));
  }

  bool valid() const noexcept { return node_ != nullptr; }
  FormulaKind kind() const { return node_->kind; }
  bool is(FormulaKind k) const { return node_ && node_->kind == k; }
  bool is_binary() const {
    auto k = kind();
    return k == FormulaKind::conjunction || k == FormulaKind::disjunction ||
           k == FormulaKind::implication || k == FormulaKind::equivalence;
  }
  bool is_quantifier() const { return is(FormulaKind::exists) || is(FormulaKind::forall); }

  const PredicateSymbol& predicate() const { return node_->pred; }
  // Arguments of an atom, or the two sides of an equation.
  const std::vector<Term>& args() const { return node_->args; }
  const Formula& left() const { return node_->children.at(0); }
  const Formula& right() const { return node_->children.at(1); }
  // Operand of a negation, body of a quantifier.
  const Formula& body() const { return node_->children.at(0); }
  const std::string& variable() const { return node_->var; }

  // Structural equality; variable names matter.
  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    return x.kind == y.kind && x.pred == y.pred && x.args == y.args && x.var == y.var &&
           x.children == y.children;
  }

  // Node count.
  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& c : node_->children) n += c.size();
    return n;
  }

 private:
  struct Node {
    FormulaKind kind = FormulaKind::atom;
    PredicateSymbol pred;
    std::vector<Term> args;
    std::vector<Formula> children;
    std::string var;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula unary(FormulaKind k, Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->children = {std::move(f)};
    return Formula(std::move(n));
  }
  static Formula binary(FormulaKind k, Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->children = {std::move(a), std::move(b)};
    return Formula(std::move(n));
  }
  static Formula quantifier(FormulaKind k, std::string var, Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->var = std::move(var);
    n->children = {std::move(body)};
    return Formula(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

// Right-nested conjunction. Requires a non-empty input.
inline Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("conjoin: empty input");
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::conjunction(parts[i], acc);
  return acc;
}

inline Formula disjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoin: empty input");
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::disjunction(parts[i], acc);
  return acc;
}

namespace detail {

inline void collect_free(const Formula& f, std::multiset<std::string>& bound,
                         std::set<std::string>& out) {
  auto visit_term = [&](const Term& t, auto&& self) -> void {
    if (t.is_variable()) {
      if (!bound.contains(t.name())) out.insert(t.name());
      return;
    }
    for (const auto& a : t.args()) self(a, self);
  };
  switch (f.kind()) {
    case FormulaKind::atom:
    case FormulaKind::equal:
      for (const auto& t : f.args()) visit_term(t, visit_term);
      return;
    case FormulaKind::negation: collect_free(f.body(), bound, out); return;
    case FormulaKind::exists:
    case FormulaKind::forall: {
      auto it = bound.insert(f.variable());
      collect_free(f.body(), bound, out);
      bound.erase(it);
      return;
    }
    default:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
  }
}

}  // namespace detail

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  std::multiset<std::string> bound;
  detail::collect_free(f, bound, out);
  return out;
}

inline bool is_closed(const Formula& f) { return free_vars(f).empty(); }

// Pre-order visit of every atom (equations included).
template <typename Fn>
void for_each_atom(const Formula& f, Fn&& fn) {
  switch (f.kind()) {
    case FormulaKind::atom:
    case FormulaKind::equal: fn(f); return;
    case FormulaKind::negation:
    case FormulaKind::exists:
    case FormulaKind::forall: for_each_atom(f.body(), fn); return;
    default:
      for_each_atom(f.left(), fn);
      for_each_atom(f.right(), fn);
  }
}

// Predicate symbols with their arities, in name order.
inline std::map<PredicateSymbol, std::size_t> predicates(const Formula& f) {
  std::map<PredicateSymbol, std::size_t> out;
  for_each_atom(f, [&](const Formula& a) {
    if (a.is(FormulaKind::atom)) out.emplace(a.predicate(), a.args().size());
  });
  return out;
}

inline std::set<std::string> constants(const Formula& f) {
  std::set<std::string> out;
  auto visit = [&](const Term& t, auto&& self) -> void {
    if (t.is_constant()) out.insert(t.name());
    for (const auto& a : t.args()) self(a, self);
  };
  for_each_atom(f, [&](const Formula& a) {
    for (const auto& t : a.args()) visit(t, visit);
  });
  return out;
}

// Replaces free occurrences of variable `var` by `replacement`. The caller
// guarantees `replacement` introduces no capture.
inline Formula substitute_free(const Formula& f, const std::string& var, const Term& replacement) {
  auto sub_term = [&](const Term& t, auto&& self) -> Term {
    if (t.is_variable()) return t.name() == var ? replacement : t;
    if (t.is_constant()) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(self(a, self));
    return Term::function(t.name(), std::move(args));
  };
  switch (f.kind()) {
    case FormulaKind::atom: {
      std::vector<Term> args;
      for (const auto& t : f.args()) args.push_back(sub_term(t, sub_term));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case FormulaKind::equal:
      return Formula::equal(sub_term(f.args()[0], sub_term), sub_term(f.args()[1], sub_term));
    case FormulaKind::negation: return Formula::negation(substitute_free(f.body(), var, replacement));
    case FormulaKind::exists:
    case FormulaKind::forall:
      if (f.variable() == var) return f;
      return f.is(FormulaKind::exists)
                 ? Formula::exists(f.variable(), substitute_free(f.body(), var, replacement))
                 : Formula::forall(f.variable(), substitute_free(f.body(), var, replacement));
    case FormulaKind::conjunction:
      return Formula::conjunction(substitute_free(f.left(), var, replacement),
                                  substitute_free(f.right(), var, replacement));
    case FormulaKind::disjunction:
      return Formula::disjunction(substitute_free(f.left(), var, replacement),
                                  substitute_free(f.right(), var, replacement));
    case FormulaKind::implication:
      return Formula::implication(substitute_free(f.left(), var, replacement),
                                  substitute_free(f.right(), var, replacement));
    case FormulaKind::equivalence:
      return Formula::equivalence(substitute_free(f.left(), var, replacement),
                                  substitute_free(f.right(), var, replacement));
  }
  return f;
}

namespace detail {

// Bound variables are compared by binder depth; free ones by name.
inline bool alpha_eq(const Formula& a, const Formula& b, std::vector<std::string>& sa,
                     std::vector<std::string>& sb) {
  auto index_of = [](const std::vector<std::string>& s, const std::string& v) -> long {
    for (std::size_t i = s.size(); i-- > 0;)
      if (s[i] == v) return static_cast<long>(i);
    return -1;
  };
  auto term_eq = [&](const Term& x, const Term& y, auto&& self) -> bool {
    if (x.kind() != y.kind()) return false;
    if (x.is_variable()) {
      long ix = index_of(sa, x.name());
      long iy = index_of(sb, y.name());
      if (ix != iy) return false;
      return ix >= 0 || x.name() == y.name();
    }
    if (x.name() != y.name() || x.args().size() != y.args().size()) return false;
    for (std::size_t i = 0; i < x.args().size(); ++i)
      if (!self(x.args()[i], y.args()[i], self)) return false;
    return true;
  };
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::atom:
    case FormulaKind::equal:
      if (a.is(FormulaKind::atom) && a.predicate() != b.predicate()) return false;
      if (a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!term_eq(a.args()[i], b.args()[i], term_eq)) return false;
      return true;
    case FormulaKind::negation: return alpha_eq(a.body(), b.body(), sa, sb);
    case FormulaKind::exists:
    case FormulaKind::forall: {
      sa.push_back(a.variable());
      sb.push_back(b.variable());
      bool r = alpha_eq(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return r;
    }
    default:
      return alpha_eq(a.left(), b.left(), sa, sb) && alpha_eq(a.right(), b.right(), sa, sb);
  }
}

}  // namespace detail

// Equality up to consistent renaming of bound variables.
inline bool alpha_equivalent(const Formula& a, const Formula& b) {
  std::vector<std::string> sa, sb;
  return detail::alpha_eq(a, b, sa, sb);
}

}  // namespace rte::fole
