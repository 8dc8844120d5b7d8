#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

using namespace rte;
using engine::VerdictKind;
using fixtures::f;

namespace {

fole::Problem problem(const std::string& t, const std::string& h, const std::vector<std::string>& bk = {}) {
  fole::Problem p;
  p.text = f(t);
  p.hypothesis = f(h);
  for (const auto& b : bk) p.background.push_back({fole::AxiomKind::generic, f(b), {"input", "test"}});
  return p;
}

}  // namespace

TEST(Classify, Reflexivity) {
  EXPECT_EQ(engine::classify(problem("some(X, bird_n_1(X))", "some(X, bird_n_1(X))"), fixtures::config()).kind,
            VerdictKind::entailment);
}

TEST(Classify, UnrelatedIsInformative) {
  EXPECT_EQ(engine::classify(problem("some(X, p_n_1(X))", "some(X, q_n_1(X))"), fixtures::config()).kind,
            VerdictKind::informative);
}

TEST(Classify, DirectClashIsContradiction) {
  const auto v = engine::classify(problem("some(X, p_n_1(X))", "all(X, not(p_n_1(X)))"), fixtures::config());
  EXPECT_EQ(v.kind, VerdictKind::contradiction);
  ASSERT_EQ(v.evidence.size(), 1u);
  EXPECT_EQ(v.evidence[0].test, 1);
}

TEST(Classify, BackgroundKnowledgeEnablesEntailment) {
  const auto p = problem("some(X, falcon_n_1(X))", "some(X, bird_n_1(X))", {"all(X,imp(falcon_n_1(X),bird_n_1(X)))"});
  const auto v = engine::classify(p, fixtures::config());
  EXPECT_EQ(v.kind, VerdictKind::entailment);
  ASSERT_EQ(v.evidence.size(), 2u);
  EXPECT_TRUE(reasoner::is_sat(v.evidence[0].result));
  EXPECT_TRUE(reasoner::is_unsat(v.evidence[1].result));
}

TEST(Classify, TowerBridgeIsEntailment) {
  EXPECT_EQ(engine::classify(fixtures::tower_bridge(), fixtures::config()).kind, VerdictKind::entailment);
}

TEST(Classify, TowerBridgeNeedsBridgingAxiom) {
  auto p = fixtures::tower_bridge();
  p.background.pop_back();
  EXPECT_EQ(engine::classify(p, fixtures::config()).kind, VerdictKind::informative);
}

TEST(Classify, LeibnizWithYagoIsEntailment) {
  const auto run = fixtures::leibniz(true);
  EXPECT_EQ(engine::classify(run.problem, fixtures::config(16)).kind, VerdictKind::entailment);
}

TEST(Classify, LeibnizWithoutYagoIsNotEntailment) {
  const auto run = fixtures::leibniz(false);
  EXPECT_NE(engine::classify(run.problem, fixtures::config(16)).kind, VerdictKind::entailment);
}

TEST(Classify, IndefiniteTestIsReported) {
  auto p = problem("some(X, ck_n_1(X))", "some(X, p_n_1(X))");
  for (std::size_t i = 0; i + 1 < fixtures::sibling_exclusion_texts().size(); ++i)
    p.background.push_back({fole::AxiomKind::generic, f(fixtures::sibling_exclusion_texts()[i]), {"input", "test"}});
  auto cfg = fixtures::config();
  cfg.engines = reasoner::Engines::model_builder;
  const auto v = engine::classify(p, cfg);
  EXPECT_EQ(v.kind, VerdictKind::unknown);
  EXPECT_EQ(v.indefinite_test, 1);
}

TEST(Classify, MissingHypothesisThrows) {
  fole::Problem p;
  p.text = f("p_n_1(c)");
  EXPECT_THROW(engine::classify(p, fixtures::config()), std::invalid_argument);
}

TEST(Classify, RegressionCorpusExpectations) {
  for (const auto& c : fixtures::regression_cases()) {
    const auto report = fixtures::regression_pipeline(c.path);
    const auto v = engine::classify(report.problem, fixtures::config());
    EXPECT_EQ(engine::to_string(v.kind), c.expected) << c.name;
  }
}

TEST(Classify, AgreesWithOracleOnSampledCorpus) {
  for (unsigned mask = 0; mask < fixtures::corpus_size; mask += 7) {
    const auto cp = fixtures::corpus_problem(mask);
    const auto expected = oracle::classify(cp.text, cp.background, cp.hypothesis,
                                           [](const auto& fs) { return oracle::satisfiable(fs, 3); });
    const auto v = engine::classify(cp.problem(), fixtures::config());
    EXPECT_EQ(engine::to_string(v.kind), oracle::name(expected)) << mask;
  }
}

TEST(Oracle, SmallDomainsAreExactOnSampledCorpus) {
  for (unsigned mask = 0; mask < fixtures::corpus_size; mask += 16) {
    const auto fs = fixtures::corpus_instance(mask);
    EXPECT_EQ(oracle::satisfiable(fs, 3), oracle::monadic_satisfiable(fs, 2)) << mask;
  }
}

namespace {

std::string fingerprint(const reasoner::SatResult& r) {
  if (auto u = std::get_if<reasoner::Unsatisfiable>(&r)) return "unsat\n" + u->proof.str();
  if (auto m = std::get_if<reasoner::Satisfiable>(&r)) return "sat\n" + m->model.str();
  return "unknown " + std::get<reasoner::Unknown>(r).reason;
}

}  // namespace

TEST(Classify, EngineSubsetsNeverConflict) {
  for (unsigned mask = 0; mask < fixtures::corpus_size; mask += 3) {
    const auto p = fixtures::corpus_problem(mask).problem();
    std::set<std::string> definitive;
    for (auto e : {reasoner::Engines::both, reasoner::Engines::prover, reasoner::Engines::model_builder}) {
      auto cfg = fixtures::config();
      cfg.engines = e;
      const auto v = engine::classify(p, cfg);
      if (v.definitive()) definitive.insert(std::string(engine::to_string(v.kind)));
    }
    EXPECT_LE(definitive.size(), 1u) << mask;
  }
}

TEST(Classify, SingleEngineRunsAreReproducible) {
  for (auto e : {reasoner::Engines::prover, reasoner::Engines::model_builder}) {
    auto cfg = fixtures::config();
    cfg.engines = e;
    for (unsigned mask = 0; mask < fixtures::corpus_size; mask += 29) {
      const auto p = fixtures::corpus_problem(mask).problem();
      const auto a = engine::classify(p, cfg), b = engine::classify(p, cfg);
      ASSERT_EQ(a.kind, b.kind) << mask;
      ASSERT_EQ(a.evidence.size(), b.evidence.size());
      for (std::size_t i = 0; i < a.evidence.size(); ++i)
        EXPECT_EQ(fingerprint(a.evidence[i].result), fingerprint(b.evidence[i].result)) << mask;
    }
  }
}

TEST(Classify, StrategyOneAxiomsKeepEntailments) {
  const auto store = ontology::TaxonomyStore::load(fixtures::data("regression/taxonomy.tax"));
  for (const auto& c : fixtures::regression_cases()) {
    auto p = fixtures::regression_pipeline(c.path).problem;
    if (engine::classify(p, fixtures::config()).kind != engine::VerdictKind::entailment) continue;
    std::set<std::string> preds;
    for (const auto& s : ontology::extract_search_predicates(p)) preds.insert(s.name());
    const auto g = ontology::build_graph_phase1(preds, store).graph;
    for (auto ax : kgraph::generate_axioms(g, kgraph::Rules::no_exclusion())) p.background.push_back(std::move(ax));
    EXPECT_EQ(engine::classify(p, fixtures::config()).kind, engine::VerdictKind::entailment) << c.name;
  }
}
