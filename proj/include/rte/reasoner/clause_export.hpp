#pragma once

#include <string>

#include "rte/fole/clause.hpp"

namespace rte::reasoner {

// One clause per line, literals separated by ` | `, negation as a leading
// `-`. The empty clause prints as `$false`.
inline std::string export_clauses(const fole::ClauseSet& clauses) {
  std::string out;
  for (const auto& c : clauses) out += c.str() + "\n";
  return out;
}

}  // namespace rte::reasoner
