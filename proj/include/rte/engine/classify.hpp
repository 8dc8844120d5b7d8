#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rte/fole/formula.hpp"
#include "rte/fole/problem.hpp"
#include "rte/reasoner/check_sat.hpp"

namespace rte::engine {

enum class VerdictKind { entailment, contradiction, informative, unknown };

inline std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::entailment: return "Entailment";
    case VerdictKind::contradiction: return "Contradiction";
    case VerdictKind::informative: return "Informative";
    case VerdictKind::unknown: return "Unknown";
  }
  return "";
}

struct TestRun {
  int test = 0;  // 1: T & BK & H, 2: T & BK & -H
  reasoner::SatResult result;
};

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  std::optional<int> indefinite_test;
  std::vector<TestRun> evidence;

  bool definitive() const noexcept { return kind != VerdictKind::unknown; }
};

// Formulas of T and BK; a missing text contributes nothing.
inline std::vector<fole::Formula> premises(const fole::Problem& p) {
  std::vector<fole::Formula> out;
  if (p.text) out.push_back(*p.text);
  for (const auto& ax : p.background) out.push_back(ax.formula);
  return out;
}

// Test 1 checks T & BK & H for consistency; only a consistent problem goes on
// to Test 2, where an unsatisfiable T & BK & -H means H follows.
inline Verdict classify(const fole::Problem& p, const reasoner::ReasonerConfig& cfg) {
  if (!p.hypothesis) throw std::invalid_argument("problem has no hypothesis");
  Verdict v;
  auto run = [&](int test, const fole::Formula& h) -> const reasoner::SatResult& {
    auto fs = premises(p);
    fs.push_back(h);
    v.evidence.push_back({test, reasoner::check_sat(fs, cfg)});
    return v.evidence.back().result;
  };

  const auto& t1 = run(1, *p.hypothesis);
  if (reasoner::is_unsat(t1)) {
    v.kind = VerdictKind::contradiction;
    return v;
  }
  if (reasoner::is_unknown(t1)) {
    v.indefinite_test = 1;
    return v;
  }
  const auto& t2 = run(2, fole::Formula::negation(*p.hypothesis));
  if (reasoner::is_unsat(t2))
    v.kind = VerdictKind::entailment;
  else if (reasoner::is_sat(t2))
    v.kind = VerdictKind::informative;
  else
    v.indefinite_test = 2;
  return v;
}

}  // namespace rte::engine
