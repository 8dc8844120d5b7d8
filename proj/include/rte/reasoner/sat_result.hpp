#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rte/fole/clause.hpp"
#include "rte/reasoner/model.hpp"
#include "rte/reasoner/unify.hpp"

namespace rte::reasoner {

enum class Rule { input, equality_axiom, resolution, factoring };

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::input: return "input";
    case Rule::equality_axiom: return "equality";
    case Rule::resolution: return "resolve";
    case Rule::factoring: return "factor";
  }
  return "";
}

// One derivation step. For resolution, `parents` = {first, second} and
// `literals` = {i, j}: literal i of the first parent is resolved against
// literal j of the second parent after the second has been renamed apart
// (see rename_apart). For factoring, `parents` = {p} and literal j is merged
// into literal i.
struct ProofStep {
  std::size_t id = 0;
  Rule rule = Rule::input;
  std::vector<std::size_t> parents;
  std::vector<std::size_t> literals;
  Substitution unifier;
  fole::Clause clause;

  std::string str() const {
    std::string out = std::to_string(id) + ". " + clause.str() + "  [" + std::string(to_string(rule));
    for (std::size_t i = 0; i < parents.size(); ++i) {
      out += i ? "," : " ";
      out += std::to_string(parents[i]);
      if (i < literals.size()) out += ":" + std::to_string(literals[i]);
    }
    if (rule == Rule::factoring && literals.size() == 2) out += "+" + std::to_string(literals[1]);
    out += "]";
    if (!unifier.empty()) out += " " + to_string(unifier);
    return out;
  }
};

// Steps in derivation order; the last step derives the empty clause.
struct Refutation {
  std::vector<ProofStep> steps;

  std::string str() const {
    std::string out;
    for (const auto& s : steps) out += s.str() + "\n";
    return out;
  }
};

struct Unsatisfiable {
  Refutation proof;
  std::string engine;
};

struct Satisfiable {
  FiniteModel model;
  std::string engine;
};

struct Unknown {
  std::string reason;
  std::string engine;
};

using SatResult = std::variant<Unsatisfiable, Satisfiable, Unknown>;

inline bool is_unsat(const SatResult& r) { return std::holds_alternative<Unsatisfiable>(r); }
inline bool is_sat(const SatResult& r) { return std::holds_alternative<Satisfiable>(r); }
inline bool is_unknown(const SatResult& r) { return std::holds_alternative<Unknown>(r); }

inline std::string_view status_name(const SatResult& r) {
  if (is_unsat(r)) return "unsat";
  if (is_sat(r)) return "sat";
  return "unknown";
}

inline const std::string& engine_name(const SatResult& r) {
  return std::visit([](const auto& x) -> const std::string& { return x.engine; }, r);
}

// Raised when the two engines return conflicting definitive results.
class SoundnessError : public std::logic_error {
 public:
  SoundnessError(const std::string& msg, Refutation proof, FiniteModel model)
      : std::logic_error(msg), proof_(std::move(proof)), model_(std::move(model)) {}
  const Refutation& proof() const noexcept { return proof_; }
  const FiniteModel& model() const noexcept { return model_; }

 private:
  Refutation proof_;
  FiniteModel model_;
};

}  // namespace rte::reasoner
