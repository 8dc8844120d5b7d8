#pragma once

// Shared problem fixtures for the unit and acceptance tests.

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "rte/rte.hpp"

#ifndef RTE_DATA_DIR
#define RTE_DATA_DIR "data"
#endif

namespace fixtures {

using namespace rte;

inline std::string data(const std::string& rel) { return std::string(RTE_DATA_DIR) + "/" + rel; }

inline fole::Formula f(const std::string& s) { return fole::parse_fole(s); }

inline const std::vector<std::string>& sibling_exclusion_texts() {
  static const std::vector<std::string> v{
      "all(X,imp(ci_n_1(X),not(cj_n_1(X))))",
      "all(X,imp(ck_n_1(X),ci_n_1(X)))",
      "all(X,imp(ck_n_1(X),cj_n_1(X)))",
      "some(X,ck_n_1(X))",
  };
  return v;
}

inline std::vector<fole::Formula> sibling_exclusion_formulas() {
  std::vector<fole::Formula> out;
  for (const auto& s : sibling_exclusion_texts()) out.push_back(f(s));
  return out;
}

inline std::vector<fole::Axiom> sibling_exclusion_axioms() {
  const auto fs = sibling_exclusion_formulas();
  return {{fole::AxiomKind::is_not_a, fs[0], {"input", "A1"}},
          {fole::AxiomKind::is_a, fs[1], {"input", "A2"}},
          {fole::AxiomKind::is_a, fs[2], {"input", "A3"}}};
}

inline reasoner::ReasonerConfig config(std::size_t max_domain = 8, int seconds = 30) {
  reasoner::ReasonerConfig c;
  c.max_domain_size = max_domain;
  c.max_time = std::chrono::seconds(seconds);
  return c;
}

// Monadic base sentences over three unary predicates and one constant,
// quantifier depth at most 2.
inline const std::vector<std::string>& corpus_base() {
  static const std::vector<std::string> v{
      "some(X,and(q_n_1(X),not(p_n_1(X))))",
      "some(X,some(Y,and(p_n_1(X),and(q_n_1(Y),not(r_n_1(Y))))))",
      "some(X,r_n_1(X))",
      "some(X,and(r_n_1(X),q_n_1(X)))",
      "all(X,imp(r_n_1(X),q_n_1(X)))",
      "all(X,imp(p_n_1(X),some(Y,and(r_n_1(Y),q_n_1(Y)))))",
      "all(X,some(Y,and(imp(p_n_1(X),r_n_1(Y)),q_n_1(Y))))",
      "imp(q_n_1(c),r_n_1(c))",
      "or(p_n_1(c),q_n_1(c))",
  };
  return v;
}

// Instance `mask` of the corpus: base sentence i is negated iff bit i is set.
inline std::vector<fole::Formula> corpus_instance(unsigned mask) {
  std::vector<fole::Formula> out;
  const auto& base = corpus_base();
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto g = f(base[i]);
    out.push_back((mask >> i) & 1 ? fole::Formula::negation(g) : g);
  }
  return out;
}

inline constexpr unsigned corpus_size = 1u << 9;

// Classification view of an instance: T is the conjunction of sentences
// 0..3, BK holds sentences 4..7, H is sentence 8.
struct CorpusProblem {
  fole::Formula text;
  std::vector<fole::Formula> background;
  fole::Formula hypothesis;

  fole::Problem problem() const {
    fole::Problem p;
    p.text = text;
    p.hypothesis = hypothesis;
    for (const auto& b : background) p.background.push_back({fole::AxiomKind::generic, b, {"input", "corpus"}});
    return p;
  }
};

inline CorpusProblem corpus_problem(unsigned mask) {
  auto fs = corpus_instance(mask);
  return {fole::conjoin({fs[0], fs[1], fs[2], fs[3]}), {fs[4], fs[5], fs[6], fs[7]}, fs[8]};
}

struct PipelineRun {
  fole::Problem problem;
  ontology::PipelineReport report;
};

inline PipelineRun leibniz(bool with_yago) {
  auto p = fole::load_problem(data("leibniz/problem.fole")).problem;
  const auto store = ontology::TaxonomyStore::load(data("leibniz/wordnet.tax"));
  std::map<std::string, ontology::TypeQueryResult> yago;
  if (with_yago) yago = ontology::load_yago_dir(data("leibniz/yago"));
  ontology::PipelineOptions po;
  po.policy = kgraph::parse_keep_list(fole::read_file(data("leibniz/keep.txt")));
  auto report = ontology::run_pipeline(p, store, yago, po);
  return {report.problem, report};
}

inline fole::Problem tower_bridge() { return fole::load_problem(data("tower_bridge/problem.fole")).problem; }

inline fole::Problem price_explosion(bool with_presup) {
  auto p = fole::load_problem(data("presup/price_explosion.fole")).problem;
  if (with_presup) {
    const auto store = presup::load_argument_store(data("presup/store.txt"), data("presup/abstract.lam"));
    for (auto& ax : presup::generate_presup_axioms(p, store)) p.background.push_back(ax);
  }
  return p;
}

inline const std::string price_explosion_axiom_text =
    "all(X1,all(X2,imp(and(explosion_n_1(X1),and(price_n_1(X2),nn_r_1(X1,X2))),"
    "some(X3,and(price_n_1(X3),some(X4,and(explode_v_1(X4),and(event_n_1(X4),agent_r_1(X4,X3)))))))))";

struct RegressionCase {
  std::string name;
  std::string path;
  std::string expected;
};

inline std::vector<RegressionCase> regression_cases() {
  std::vector<RegressionCase> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(data("regression")))
    if (e.path().extension() == ".fole") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    const auto text = fole::read_file(p.string());
    const auto line = text.substr(0, text.find('\n'));
    const std::string tag = "% expect: ";
    out.push_back({p.stem().string(), p.string(), line.starts_with(tag) ? line.substr(tag.size()) : ""});
  }
  return out;
}

inline ontology::PipelineReport regression_pipeline(const std::string& path, bool optimize = true) {
  const auto store = ontology::TaxonomyStore::load(data("regression/taxonomy.tax"));
  ontology::PipelineOptions po;
  po.optimize = optimize;
  return ontology::run_pipeline(fole::load_problem(path).problem, store, {}, po);
}

}  // namespace fixtures
