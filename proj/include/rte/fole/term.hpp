#pragma once

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace rte::fole {

// First-order term. Problem formulas only use variables and constants;
// function applications arise from skolemization inside clauses.
class Term {
 public:
  enum class Kind { variable, constant, function };

  Term() = default;

  static Term variable(std::string name) { return Term(Kind::variable, std::move(name), {}); }
  static Term constant(std::string name) { return Term(Kind::constant, std::move(name), {}); }
  static Term function(std::string name, std::vector<Term> args) {
    if (args.empty()) return constant(std::move(name));
    return Term(Kind::function, std::move(name), std::move(args));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_variable() const noexcept { return kind_ == Kind::variable; }
  bool is_constant() const noexcept { return kind_ == Kind::constant; }
  bool is_function() const noexcept { return kind_ == Kind::function; }
  bool is_ground() const {
    if (is_variable()) return false;
    for (const auto& a : args_)
      if (!a.is_ground()) return false;
    return true;
  }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  // Number of symbol occurrences.
  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& a : args_) n += a.size();
    return n;
  }

  bool contains_variable(const std::string& v) const {
    if (is_variable()) return name_ == v;
    for (const auto& a : args_)
      if (a.contains_variable(v)) return true;
    return false;
  }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                  b.args_.end());
  }

  std::string str() const {
    std::string out = name_;
    if (!args_.empty()) {
      out += '(';
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) out += ',';
        out += args_[i].str();
      }
      out += ')';
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.str(); }

 private:
  Term(Kind k, std::string name, std::vector<Term> args)
      : kind_(k), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_ = Kind::constant;
  std::string name_;
  std::vector<Term> args_;
};

inline bool is_variable_name(std::string_view id) {
  return !id.empty() && std::isupper(static_cast<unsigned char>(id.front()));
}

// Prefix reserved for symbols introduced by skolemization.
inline constexpr std::string_view skolem_prefix = "sk_";

inline bool is_reserved_name(std::string_view id) { return id.starts_with(skolem_prefix); }

}  // namespace rte::fole
