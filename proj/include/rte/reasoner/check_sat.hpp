#pragma once

#include <exception>
#include <mutex>
#include <optional>
#include <stop_token>
#include <thread>
#include <vector>

#include "rte/fole/cnf.hpp"
#include "rte/fole/formula.hpp"
#include "rte/reasoner/config.hpp"
#include "rte/reasoner/model_builder.hpp"
#include "rte/reasoner/prover.hpp"
#include "rte/reasoner/sat_result.hpp"

namespace rte::reasoner {

inline SatResult run_prover_on(const std::vector<fole::Formula>& formulas, const ReasonerConfig& cfg,
                               std::stop_token stop) {
  fole::Clausifier clausifier(cfg.max_clauses);
  fole::ClauseSet clauses;
  try {
    clauses = clausifier.clausify(formulas);
  } catch (const fole::ClauseLimitExceeded&) {
    return Unknown{"clause limit", prover_engine_name};
  }
  return prove_unsat(clauses, cfg, std::move(stop));
}

namespace detail {

inline std::string combine_unknown(const SatResult& a, const SatResult& b) {
  const auto& ua = std::get<Unknown>(a);
  const auto& ub = std::get<Unknown>(b);
  return ua.engine + ": " + ua.reason + "; " + ub.engine + ": " + ub.reason;
}

inline void assert_agreement(const SatResult& a, const SatResult& b) {
  const SatResult* u = is_unsat(a) ? &a : is_unsat(b) ? &b : nullptr;
  const SatResult* s = is_sat(a) ? &a : is_sat(b) ? &b : nullptr;
  if (u && s)
    throw SoundnessError("prover and model builder disagree", std::get<Unsatisfiable>(*u).proof,
                         std::get<Satisfiable>(*s).model);
}

}  // namespace detail

// Races the prover (on the clause form) against the model builder. The first
// definitive answer wins and the other engine is cancelled; both threads are
// joined before returning. Conflicting definitive answers raise
// SoundnessError.
inline SatResult check_sat(const std::vector<fole::Formula>& formulas, const ReasonerConfig& cfg) {
  cfg.validate();
  if (cfg.engines == Engines::prover) return run_prover_on(formulas, cfg, {});
  if (cfg.engines == Engines::model_builder) return find_model(formulas, cfg);

  std::stop_source stop;
  std::mutex mu;
  std::optional<SatResult> prover_result;
  std::optional<SatResult> builder_result;
  std::exception_ptr failure;

  auto finish = [&](std::optional<SatResult>& slot, auto&& compute) {
    std::optional<SatResult> r;
    std::exception_ptr err;
    try {
      r = compute();
    } catch (...) {
      err = std::current_exception();
    }
    std::lock_guard lock(mu);
    if (err && !failure) failure = err;
    slot = std::move(r);
    if (err || !is_unknown(*slot)) stop.request_stop();
  };
  {
    std::jthread prover([&] {
      finish(prover_result, [&] { return run_prover_on(formulas, cfg, stop.get_token()); });
    });
    std::jthread builder([&] {
      finish(builder_result, [&] { return find_model(formulas, cfg, stop.get_token()); });
    });
  }
  if (failure) std::rethrow_exception(failure);
  detail::assert_agreement(*prover_result, *builder_result);
  if (!is_unknown(*prover_result)) return *prover_result;
  if (!is_unknown(*builder_result)) return *builder_result;
  return Unknown{detail::combine_unknown(*prover_result, *builder_result), "both"};
}

}  // namespace rte::reasoner
