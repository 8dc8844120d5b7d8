#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rte::fole {

enum class Category { noun, verb, preposition, relation, named_entity, location, other };

inline std::string_view to_string(Category c) {
  switch (c) {
    case Category::noun: return "noun";
    case Category::verb: return "verb";
    case Category::preposition: return "preposition";
    case Category::relation: return "relation";
    case Category::named_entity: return "named-entity";
    case Category::location: return "location";
    case Category::other: return "other";
  }
  return "other";
}

// Maps the category code embedded in a predicate name (`work_n_2` -> "n").
inline Category category_from_code(std::string_view code) {
  if (code == "n") return Category::noun;
  if (code == "v") return Category::verb;
  if (code == "p") return Category::preposition;
  if (code == "r") return Category::relation;
  if (code == "ne" || code == "per") return Category::named_entity;
  if (code == "loc") return Category::location;
  return Category::other;
}

// A predicate name following the `lemma_code_sense` convention. The full token
// is kept verbatim so rendering reproduces the input exactly; lemma, category
// and sense are derived from it. Names without a numeric sense suffix are
// accepted with category `other` and sense 1.
class PredicateSymbol {
 public:
  PredicateSymbol() = default;

  explicit PredicateSymbol(std::string name) : name_(std::move(name)) { decompose(); }

  // Builds `lemma_code_sense` from parts.
  static PredicateSymbol make(std::string_view lemma, std::string_view code, unsigned sense) {
    std::string n(lemma);
    n += '_';
    n += code;
    n += '_';
    n += std::to_string(sense == 0 ? 1 : sense);
    return PredicateSymbol(std::move(n));
  }

  const std::string& name() const noexcept { return name_; }
  const std::string& lemma() const noexcept { return lemma_; }
  const std::string& code() const noexcept { return code_; }
  Category category() const noexcept { return category_; }
  unsigned sense() const noexcept { return sense_; }
  bool has_suffix() const noexcept { return !code_.empty(); }

  friend bool operator==(const PredicateSymbol& a, const PredicateSymbol& b) {
    return a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(const PredicateSymbol& a, const PredicateSymbol& b) {
    return a.name_ <=> b.name_;
  }
  friend std::ostream& operator<<(std::ostream& os, const PredicateSymbol& p) {
    return os << p.name_;
  }

 private:
  void decompose() {
    lemma_ = name_;
    code_.clear();
    category_ = Category::other;
    sense_ = 1;
    const auto last = name_.rfind('_');
    if (last == std::string::npos || last + 1 >= name_.size()) return;
    const std::string_view tail = std::string_view(name_).substr(last + 1);
    unsigned sense = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), sense);
    if (ec != std::errc{} || ptr != tail.data() + tail.size() || sense == 0) return;
    const auto mid = name_.rfind('_', last - 1);
    if (mid == std::string::npos || mid == 0 || last == 0) return;
    code_ = name_.substr(mid + 1, last - mid - 1);
    if (code_.empty()) return;
    lemma_ = name_.substr(0, mid);
    category_ = category_from_code(code_);
    sense_ = sense;
  }

  std::string name_;
  std::string lemma_;
  std::string code_;
  Category category_ = Category::other;
  unsigned sense_ = 1;
};

}  // namespace rte::fole

template <>
struct std::hash<rte::fole::PredicateSymbol> {
  std::size_t operator()(const rte::fole::PredicateSymbol& p) const noexcept {
    return std::hash<std::string>{}(p.name());
  }
};
