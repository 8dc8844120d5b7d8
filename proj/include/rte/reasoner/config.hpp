#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace rte::reasoner {

enum class Engines { both, prover, model_builder };

inline std::string_view to_string(Engines e) {
  switch (e) {
    case Engines::both: return "prover,model-builder";
    case Engines::prover: return "prover";
    case Engines::model_builder: return "model-builder";
  }
  return "";
}

// Resource limits shared by both engines. The limits apply per
// satisfiability check, not per classification.
struct ReasonerConfig {
  std::size_t max_domain_size = 8;
  std::size_t max_clauses = 200000;
  std::chrono::milliseconds max_time{30000};
  Engines engines = Engines::both;

  void validate() const {
    if (max_domain_size == 0) throw std::invalid_argument("max_domain_size must be positive");
    if (max_clauses == 0) throw std::invalid_argument("max_clauses must be positive");
    if (max_time.count() <= 0) throw std::invalid_argument("max_time must be positive");
  }
};

using Clock = std::chrono::steady_clock;

}  // namespace rte::reasoner
