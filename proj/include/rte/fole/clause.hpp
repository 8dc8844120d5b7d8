#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "rte/fole/term.hpp"

namespace rte::fole {

// Reserved predicate name for equations inside clauses.
inline const std::string equality_predicate = "=";

struct Literal {
  bool positive = true;
  std::string predicate;
  std::vector<Term> args;

  bool is_equality() const { return predicate == equality_predicate; }
  bool complements(const Literal& o) const {
    return positive != o.positive && predicate == o.predicate && args.size() == o.args.size();
  }
  Literal negated() const { return Literal{!positive, predicate, args}; }

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& a : args) n += a.size();
    return n;
  }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.predicate <=> b.predicate; c != 0) return c;
    if (auto c = a.positive <=> b.positive; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(),
                                                  b.args.end());
  }

  // `-p(X)` / `p(X)`; equations print infix.
  std::string str() const {
    std::string out = positive ? "" : "-";
    if (is_equality() && args.size() == 2) {
      out += args[0].str() + "=" + args[1].str();
      return out;
    }
    out += predicate;
    if (!args.empty()) {
      out += '(';
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += args[i].str();
      }
      out += ')';
    }
    return out;
  }
};

// Disjunction of literals with set semantics; variables are implicitly
// universally quantified. The empty clause is falsum.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> lits) {
    for (auto& l : lits)
      if (std::find(lits_.begin(), lits_.end(), l) == lits_.end()) lits_.push_back(std::move(l));
  }

  const std::vector<Literal>& literals() const noexcept { return lits_; }
  std::size_t size() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }

  // Total symbol count; used as the clause weight.
  std::size_t weight() const {
    std::size_t n = 0;
    for (const auto& l : lits_) n += l.size();
    return n;
  }

  bool is_tautology() const {
    for (std::size_t i = 0; i < lits_.size(); ++i)
      for (std::size_t j = i + 1; j < lits_.size(); ++j)
        if (lits_[i].positive != lits_[j].positive && lits_[i].predicate == lits_[j].predicate &&
            lits_[i].args == lits_[j].args)
          return true;
    // t = t
    for (const auto& l : lits_)
      if (l.positive && l.is_equality() && l.args.size() == 2 && l.args[0] == l.args[1]) return true;
    return false;
  }

  // Same literal multiset irrespective of order.
  bool same_literals(const Clause& o) const {
    if (size() != o.size()) return false;
    auto a = lits_;
    auto b = o.lits_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  // Renames variables to X0, X1, ... in order of first occurrence.
  Clause canonical() const {
    std::map<std::string, std::string> ren;
    auto rename = [&](const Term& t, auto&& self) -> Term {
      if (t.is_variable()) {
        auto it = ren.find(t.name());
        if (it == ren.end()) it = ren.emplace(t.name(), "X" + std::to_string(ren.size())).first;
        return Term::variable(it->second);
      }
      if (t.is_constant()) return t;
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(self(a, self));
      return Term::function(t.name(), std::move(args));
    };
    std::vector<Literal> out;
    for (const auto& l : lits_) {
      Literal n{l.positive, l.predicate, {}};
      for (const auto& a : l.args) n.args.push_back(rename(a, rename));
      out.push_back(std::move(n));
    }
    return Clause(std::move(out));
  }

  // Literals joined by ` | `; the empty clause prints as `$false`.
  std::string str() const {
    if (lits_.empty()) return "$false";
    std::string out;
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      if (i) out += " | ";
      out += lits_[i].str();
    }
    return out;
  }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Clause& c) { return os << c.str(); }

 private:
  std::vector<Literal> lits_;
};

using ClauseSet = std::vector<Clause>;

}  // namespace rte::fole
