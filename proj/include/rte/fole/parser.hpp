#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rte/fole/formula.hpp"

namespace rte::fole {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& msg)
      : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg),
        pos_(pos),
        message_(msg) {}

  SourcePos position() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

struct Diagnostic {
  SourcePos pos;
  std::string message;
};

struct ParseOptions {
  // Existentially close free variables (reported as diagnostics).
  bool close_free_variables = true;
};

// State shared across the formulas of one problem: predicate arities and
// non-fatal diagnostics.
struct ParseContext {
  ParseOptions options;
  std::map<std::string, std::size_t> arities;
  std::vector<Diagnostic> diagnostics;
  // Added to every reported position; lets callers parse a slice of a file.
  std::size_t line_offset = 0;
};

namespace detail {

struct Token {
  enum class Kind { ident, lparen, rparen, comma, dot, end } kind = Kind::end;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line_offset) : src_(src) { pos_.line += line_offset; }

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.pos = pos_;
      if (i_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[i_];
      if (c == '(') {
        t.kind = Token::Kind::lparen;
        advance();
      } else if (c == ')') {
        t.kind = Token::Kind::rparen;
        advance();
      } else if (c == ',') {
        t.kind = Token::Kind::comma;
        advance();
      } else if (c == '.') {
        t.kind = Token::Kind::dot;
        advance();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Token::Kind::ident;
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
          t.text += src_[i_];
          advance();
        }
      } else {
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }
  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '%') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, ParseContext& ctx) : toks_(std::move(tokens)), ctx_(ctx) {}

  bool at_end() const { return peek().kind == Token::Kind::end; }

  // One formula, an optional terminating `.`.
  Formula statement() {
    const SourcePos start = peek().pos;
    Formula f = formula();
    if (peek().kind == Token::Kind::dot) ++i_;
    return close(f, start);
  }

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }

 private:
  static bool is_keyword(std::string_view s) {
    return s == "some" || s == "all" || s == "and" || s == "or" || s == "imp" || s == "iff" ||
           s == "not" || s == "eq";
  }

  const Token& next() {
    const Token& t = peek();
    if (i_ < toks_.size() - 1) ++i_;
    return t;
  }

  void expect(Token::Kind k, const char* what) {
    const Token& t = peek();
    if (t.kind == k) {
      ++i_;
      return;
    }
    if (k == Token::Kind::rparen)
      throw ParseError(t.pos, std::string("unbalanced parentheses: expected ')' but found ") +
                                  describe(t));
    if (t.kind == Token::Kind::rparen)
      throw ParseError(t.pos, std::string("unbalanced parentheses: unexpected ')', expected ") + what);
    throw ParseError(t.pos, std::string("expected ") + what + " but found " + describe(t));
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::ident: return "'" + t.text + "'";
      case Token::Kind::lparen: return "'('";
      case Token::Kind::rparen: return "')'";
      case Token::Kind::comma: return "','";
      case Token::Kind::dot: return "'.'";
      case Token::Kind::end: return "end of input";
    }
    return "?";
  }

  Formula formula() {
    const Token& head = peek();
    if (head.kind == Token::Kind::rparen)
      throw ParseError(head.pos, "unbalanced parentheses: unexpected ')'");
    if (head.kind != Token::Kind::ident)
      throw ParseError(head.pos, "expected formula but found " + describe(head));
    const Token name = next();
    if (peek().kind != Token::Kind::lparen)
      throw ParseError(peek().pos, "expected '(' after '" + name.text + "'");
    ++i_;
    const std::string& kw = name.text;
    if (kw == "some" || kw == "all") {
      const Token& v = peek();
      if (v.kind != Token::Kind::ident || !is_variable_name(v.text))
        throw ParseError(v.pos, "quantifier '" + kw + "' expects a variable");
      std::string var = next().text;
      expect(Token::Kind::comma, "','");
      Formula body = formula();
      expect(Token::Kind::rparen, "')'");
      return kw == "some" ? Formula::exists(std::move(var), std::move(body))
                          : Formula::forall(std::move(var), std::move(body));
    }
    if (kw == "not") {
      Formula body = formula();
      expect(Token::Kind::rparen, "')'");
      return Formula::negation(std::move(body));
    }
    if (kw == "and" || kw == "or" || kw == "imp" || kw == "iff") {
      Formula a = formula();
      expect(Token::Kind::comma, "','");
      Formula b = formula();
      expect(Token::Kind::rparen, "')'");
      if (kw == "and") return Formula::conjunction(std::move(a), std::move(b));
      if (kw == "or") return Formula::disjunction(std::move(a), std::move(b));
      if (kw == "imp") return Formula::implication(std::move(a), std::move(b));
      return Formula::equivalence(std::move(a), std::move(b));
    }
    if (kw == "eq") {
      Term l = term(name);
      expect(Token::Kind::comma, "','");
      Term r = term(name);
      expect(Token::Kind::rparen, "')'");
      return Formula::equal(std::move(l), std::move(r));
    }
    return atom_after_lparen(name);
  }

  Formula atom_after_lparen(const Token& name) {
    if (is_variable_name(name.text))
      throw ParseError(name.pos, "predicate name '" + name.text + "' must start lowercase");
    if (is_reserved_name(name.text))
      throw ParseError(name.pos, "predicate '" + name.text + "' uses the reserved prefix sk_");
    std::vector<Term> args;
    args.push_back(term(name));
    while (peek().kind == Token::Kind::comma) {
      ++i_;
      args.push_back(term(name));
    }
    expect(Token::Kind::rparen, "')'");
    if (args.size() > 3)
      throw ParseError(name.pos, "predicate '" + name.text + "' has arity " +
                                     std::to_string(args.size()) + "; at most 3 is supported");
    auto [it, inserted] = ctx_.arities.emplace(name.text, args.size());
    if (!inserted && it->second != args.size())
      throw ParseError(name.pos, "arity clash for '" + name.text + "': used with " +
                                     std::to_string(args.size()) + " argument(s), previously " +
                                     std::to_string(it->second));
    return Formula::atom(PredicateSymbol(name.text), std::move(args));
  }

  Term term(const Token& owner) {
    const Token& t = peek();
    if (t.kind == Token::Kind::rparen)
      throw ParseError(t.pos, "unbalanced parentheses: unexpected ')', expected a term");
    if (t.kind != Token::Kind::ident)
      throw ParseError(t.pos, "expected a term but found " + describe(t));
    if (peek(1).kind == Token::Kind::lparen) {
      // A nested application in argument position: the owner is being used
      // as a connective it cannot be.
      if (!is_keyword(owner.text))
        throw ParseError(owner.pos, "unknown connective '" + owner.text + "'");
      throw ParseError(t.pos, "'" + owner.text + "' expects terms, found application of '" +
                                  t.text + "'");
    }
    std::string n = next().text;
    if (is_variable_name(n)) return Term::variable(std::move(n));
    if (is_reserved_name(n))
      throw ParseError(t.pos, "constant '" + n + "' uses the reserved prefix sk_");
    return Term::constant(std::move(n));
  }

  Formula close(const Formula& f, SourcePos start) {
    std::vector<std::string> order;
    std::multiset<std::string> bound;
    first_free_order(f, bound, order);
    if (order.empty()) return f;
    for (const auto& v : order)
      ctx_.diagnostics.push_back({start, "unbound variable " + v + " (existentially closed)"});
    if (!ctx_.options.close_free_variables) return f;
    Formula out = f;
    for (auto it = order.rbegin(); it != order.rend(); ++it) out = Formula::exists(*it, out);
    return out;
  }

  static void first_free_order(const Formula& f, std::multiset<std::string>& bound,
                               std::vector<std::string>& order) {
    auto visit = [&](const Term& t, auto&& self) -> void {
      if (t.is_variable() && !bound.contains(t.name()) &&
          std::find(order.begin(), order.end(), t.name()) == order.end())
        order.push_back(t.name());
      for (const auto& a : t.args()) self(a, self);
    };
    switch (f.kind()) {
      case FormulaKind::atom:
      case FormulaKind::equal:
        for (const auto& t : f.args()) visit(t, visit);
        return;
      case FormulaKind::negation: first_free_order(f.body(), bound, order); return;
      case FormulaKind::exists:
      case FormulaKind::forall: {
        auto it = bound.insert(f.variable());
        first_free_order(f.body(), bound, order);
        bound.erase(it);
        return;
      }
      default:
        first_free_order(f.left(), bound, order);
        first_free_order(f.right(), bound, order);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  ParseContext& ctx_;
};

}  // namespace detail

// Parses exactly one formula (optionally terminated by `.`).
inline Formula parse_fole(std::string_view input, ParseContext& ctx) {
  detail::Parser p(detail::Lexer(input, ctx.line_offset).tokenize(), ctx);
  if (p.at_end()) throw ParseError(p.peek().pos, "empty input");
  Formula f = p.statement();
  if (!p.at_end()) throw ParseError(p.peek().pos, "trailing input after formula");
  return f;
}

inline Formula parse_fole(std::string_view input) {
  ParseContext ctx;
  return parse_fole(input, ctx);
}

// Parses a sequence of `.`-terminated formulas.
inline std::vector<Formula> parse_fole_list(std::string_view input, ParseContext& ctx) {
  detail::Parser p(detail::Lexer(input, ctx.line_offset).tokenize(), ctx);
  std::vector<Formula> out;
  while (!p.at_end()) out.push_back(p.statement());
  return out;
}

}  // namespace rte::fole
