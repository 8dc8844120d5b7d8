#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rte/fole/formula.hpp"
#include "rte/fole/parser.hpp"

namespace rte::presup {

// λ-terms over FOLE: abstraction and application on top of the formula
// connectives. `app(P, X)` is the application P@x.
class LambdaTerm {
 public:
  enum class Kind {
    variable, constant, abstraction, application, atom, equal,
    negation, conjunction, disjunction, implication, equivalence, exists, forall
  };

  static LambdaTerm variable(std::string n) { return make(Kind::variable, std::move(n), {}); }
  static LambdaTerm constant(std::string n) { return make(Kind::constant, std::move(n), {}); }
  static LambdaTerm abstraction(std::string v, LambdaTerm body) {
    return make(Kind::abstraction, std::move(v), {std::move(body)});
  }
  static LambdaTerm application(LambdaTerm f, LambdaTerm a) {
    return make(Kind::application, "", {std::move(f), std::move(a)});
  }
  static LambdaTerm atom(std::string pred, std::vector<LambdaTerm> args) {
    return make(Kind::atom, std::move(pred), std::move(args));
  }
  static LambdaTerm make(Kind k, std::string name, std::vector<LambdaTerm> kids) {
    LambdaTerm t;
    t.node_ = std::make_shared<const Node>(Node{k, std::move(name), std::move(kids)});
    return t;
  }

  Kind kind() const { return node_->kind; }
  // Variable/constant name, bound variable, or predicate.
  const std::string& name() const { return node_->name; }
  const std::vector<LambdaTerm>& kids() const { return node_->kids; }

  bool binds() const {
    return kind() == Kind::abstraction || kind() == Kind::exists || kind() == Kind::forall;
  }

  friend bool operator==(const LambdaTerm& a, const LambdaTerm& b) {
    if (a.node_ == b.node_) return true;
    return a.kind() == b.kind() && a.name() == b.name() && a.kids() == b.kids();
  }

  std::string str() const {
    switch (kind()) {
      case Kind::variable:
      case Kind::constant: return name();
      case Kind::abstraction: return "lam(" + name() + "," + kids()[0].str() + ")";
      case Kind::application: return "app(" + kids()[0].str() + "," + kids()[1].str() + ")";
      case Kind::atom: {
        std::string out = name() + "(";
        for (std::size_t i = 0; i < kids().size(); ++i) out += (i ? "," : "") + kids()[i].str();
        return out + ")";
      }
      case Kind::equal: return "eq(" + kids()[0].str() + "," + kids()[1].str() + ")";
      case Kind::negation: return "not(" + kids()[0].str() + ")";
      case Kind::conjunction: return "and(" + kids()[0].str() + "," + kids()[1].str() + ")";
      case Kind::disjunction: return "or(" + kids()[0].str() + "," + kids()[1].str() + ")";
      case Kind::implication: return "imp(" + kids()[0].str() + "," + kids()[1].str() + ")";
      case Kind::equivalence: return "iff(" + kids()[0].str() + "," + kids()[1].str() + ")";
      case Kind::exists: return "some(" + name() + "," + kids()[0].str() + ")";
      case Kind::forall: return "all(" + name() + "," + kids()[0].str() + ")";
    }
    return "";
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<LambdaTerm> kids;
  };
  std::shared_ptr<const Node> node_;
};

inline std::set<std::string> free_vars(const LambdaTerm& t) {
  std::set<std::string> out;
  auto walk = [&](const LambdaTerm& u, std::set<std::string>& bound, auto&& self) -> void {
    if (u.kind() == LambdaTerm::Kind::variable) {
      if (!bound.contains(u.name())) out.insert(u.name());
      return;
    }
    const bool fresh = u.binds() && bound.insert(u.name()).second;
    for (const auto& k : u.kids()) self(k, bound, self);
    if (fresh) bound.erase(u.name());
  };
  std::set<std::string> bound;
  walk(t, bound, walk);
  return out;
}

inline void all_names(const LambdaTerm& t, std::set<std::string>& out) {
  if (t.kind() == LambdaTerm::Kind::variable || t.binds()) out.insert(t.name());
  for (const auto& k : t.kids()) all_names(k, out);
}

// t[v := s], renaming binders that would capture a free variable of s.
inline LambdaTerm substitute(const LambdaTerm& t, const std::string& v, const LambdaTerm& s) {
  using K = LambdaTerm::Kind;
  if (t.kind() == K::variable) return t.name() == v ? s : t;
  if (t.kind() == K::constant) return t;
  if (t.binds()) {
    if (t.name() == v) return t;
    const auto fv_s = free_vars(s);
    if (!free_vars(t).contains(v)) return t;
    if (fv_s.contains(t.name())) {
      std::set<std::string> taken = fv_s;
      all_names(t, taken);
      std::string fresh;
      for (std::size_t i = 1;; ++i) {
        fresh = t.name() + "_" + std::to_string(i);
        if (!taken.contains(fresh)) break;
      }
      auto renamed = substitute(t.kids()[0], t.name(), LambdaTerm::variable(fresh));
      return LambdaTerm::make(t.kind(), fresh, {substitute(renamed, v, s)});
    }
    return LambdaTerm::make(t.kind(), t.name(), {substitute(t.kids()[0], v, s)});
  }
  std::vector<LambdaTerm> kids;
  for (const auto& k : t.kids()) kids.push_back(substitute(k, v, s));
  return LambdaTerm::make(t.kind(), t.name(), std::move(kids));
}

enum class Strategy { normal_order, applicative_order };

namespace detail {

inline bool is_redex(const LambdaTerm& t) {
  return t.kind() == LambdaTerm::Kind::application &&
         t.kids()[0].kind() == LambdaTerm::Kind::abstraction;
}

inline LambdaTerm contract(const LambdaTerm& redex) {
  const auto& lam = redex.kids()[0];
  return substitute(lam.kids()[0], lam.name(), redex.kids()[1]);
}

// One β-step: leftmost-outermost or leftmost-innermost redex.
inline std::optional<LambdaTerm> step(const LambdaTerm& t, Strategy s) {
  if (s == Strategy::normal_order && is_redex(t)) return contract(t);
  for (std::size_t i = 0; i < t.kids().size(); ++i)
    if (auto r = step(t.kids()[i], s)) {
      auto kids = t.kids();
      kids[i] = *r;
      return LambdaTerm::make(t.kind(), t.name(), std::move(kids));
    }
  if (s == Strategy::applicative_order && is_redex(t)) return contract(t);
  return std::nullopt;
}

}  // namespace detail

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline LambdaTerm beta_normalize(LambdaTerm t, Strategy s = Strategy::normal_order,
                                 std::size_t max_steps = 10000) {
  for (std::size_t i = 0; i < max_steps; ++i) {
    auto next = detail::step(t, s);
    if (!next) return t;
    t = std::move(*next);
  }
  throw ReductionError("no normal form within " + std::to_string(max_steps) + " steps");
}

// Converts a β-normal term without abstractions to a formula.
inline fole::Formula to_formula(const LambdaTerm& t) {
  using K = LambdaTerm::Kind;
  using fole::Formula;
  auto term = [](const LambdaTerm& a) {
    if (a.kind() == K::variable) return fole::Term::variable(a.name());
    if (a.kind() == K::constant) return fole::Term::constant(a.name());
    throw ReductionError("non-term argument '" + a.str() + "'");
  };
  switch (t.kind()) {
    case K::atom: {
      std::vector<fole::Term> args;
      for (const auto& a : t.kids()) args.push_back(term(a));
      return Formula::atom(fole::PredicateSymbol(t.name()), std::move(args));
    }
    case K::equal: return Formula::equal(term(t.kids()[0]), term(t.kids()[1]));
    case K::negation: return Formula::negation(to_formula(t.kids()[0]));
    case K::conjunction: return Formula::conjunction(to_formula(t.kids()[0]), to_formula(t.kids()[1]));
    case K::disjunction: return Formula::disjunction(to_formula(t.kids()[0]), to_formula(t.kids()[1]));
    case K::implication: return Formula::implication(to_formula(t.kids()[0]), to_formula(t.kids()[1]));
    case K::equivalence: return Formula::equivalence(to_formula(t.kids()[0]), to_formula(t.kids()[1]));
    case K::exists: return Formula::exists(t.name(), to_formula(t.kids()[0]));
    case K::forall: return Formula::forall(t.name(), to_formula(t.kids()[0]));
    case K::variable: throw ReductionError("residual hole '" + t.name() + "'");
    case K::abstraction:
    case K::application: throw ReductionError("residual abstraction in '" + t.str() + "'");
    case K::constant: throw ReductionError("constant '" + t.name() + "' in formula position");
  }
  throw ReductionError("unreachable");
}

// Number of leading abstractions.
inline std::size_t abstraction_depth(const LambdaTerm& t) {
  std::size_t n = 0;
  const LambdaTerm* cur = &t;
  while (cur->kind() == LambdaTerm::Kind::abstraction) {
    ++n;
    cur = &cur->kids()[0];
  }
  return n;
}

// Applies `abstract` to `args` in order, β-normalizes and converts to a
// closed formula.
inline fole::Formula instantiate(const LambdaTerm& abstract, const std::vector<LambdaTerm>& args,
                                 Strategy s = Strategy::normal_order) {
  if (abstraction_depth(abstract) != args.size())
    throw ReductionError("abstract axiom takes " + std::to_string(abstraction_depth(abstract)) +
                         " arguments, got " + std::to_string(args.size()));
  LambdaTerm t = abstract;
  for (const auto& a : args) t = LambdaTerm::application(t, a);
  auto f = to_formula(beta_normalize(t, s));
  if (!fole::is_closed(f)) throw ReductionError("instantiated axiom is not closed: " + t.str());
  return f;
}

namespace detail {

class LambdaParser {
 public:
  explicit LambdaParser(std::string_view src, std::size_t line_offset = 0)
      : toks_(fole::detail::Lexer(src, line_offset).tokenize()) {}

  LambdaTerm parse_all() {
    auto t = term();
    if (peek().kind == Tok::Kind::dot) ++i_;
    if (peek().kind != Tok::Kind::end) fail(peek(), "trailing input");
    return t;
  }

 private:
  using Tok = fole::detail::Token;

  const Tok& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  [[noreturn]] void fail(const Tok& t, const std::string& msg) const { throw fole::ParseError(t.pos, msg); }
  const Tok& expect(Tok::Kind k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    return toks_[i_++];
  }

  static bool upper(const std::string& s) { return std::isupper(static_cast<unsigned char>(s[0])); }

  LambdaTerm term() {
    const Tok& name = expect(Tok::Kind::ident, "identifier");
    if (peek().kind != Tok::Kind::lparen)
      return upper(name.text) ? LambdaTerm::variable(name.text) : LambdaTerm::constant(name.text);
    ++i_;
    const auto& kw = name.text;
    using K = LambdaTerm::Kind;
    LambdaTerm out;
    if (kw == "lam" || kw == "some" || kw == "all") {
      const Tok& v = expect(Tok::Kind::ident, "bound variable");
      if (!upper(v.text)) fail(v, "bound variable must start with an uppercase letter");
      expect(Tok::Kind::comma, "','");
      auto body = term();
      const K k = kw == "lam" ? K::abstraction : kw == "some" ? K::exists : K::forall;
      out = LambdaTerm::make(k, v.text, {std::move(body)});
    } else if (kw == "not") {
      out = LambdaTerm::make(K::negation, "", {term()});
    } else if (kw == "app" || kw == "and" || kw == "or" || kw == "imp" || kw == "iff" || kw == "eq") {
      auto a = term();
      expect(Tok::Kind::comma, "','");
      auto b = term();
      const K k = kw == "app"   ? K::application
                  : kw == "and" ? K::conjunction
                  : kw == "or"  ? K::disjunction
                  : kw == "imp" ? K::implication
                  : kw == "iff" ? K::equivalence
                                : K::equal;
      out = LambdaTerm::make(k, "", {std::move(a), std::move(b)});
    } else {
      if (upper(kw)) fail(name, "predicate names start with a lowercase letter");
      std::vector<LambdaTerm> args;
      do {
        const Tok& a = expect(Tok::Kind::ident, "argument");
        args.push_back(upper(a.text) ? LambdaTerm::variable(a.text) : LambdaTerm::constant(a.text));
      } while (peek().kind == Tok::Kind::comma && (++i_, true));
      out = LambdaTerm::atom(kw, std::move(args));
    }
    expect(Tok::Kind::rparen, "')'");
    return out;
  }

  std::vector<Tok> toks_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline LambdaTerm parse_lambda(std::string_view src, std::size_t line_offset = 0) {
  return detail::LambdaParser(src, line_offset).parse_all();
}

}  // namespace rte::presup
