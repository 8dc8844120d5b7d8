#include <gtest/gtest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "../support/oracle.hpp"

using namespace rte;
using namespace rte::reasoner;
using fixtures::f;

namespace {

oracle::Interpretation to_interpretation(const FiniteModel& m, const oracle::Signature& sig) {
  oracle::Interpretation out;
  out.n = m.domain_size;
  for (const auto& c : sig.constants) out.constants[c] = m.constants.at(c);
  for (const auto& [p, arity] : sig.predicates) {
    auto& t = out.tables[p];
    t.assign(oracle::power(out.n, arity), false);
    if (auto it = m.predicates.find(p); it != m.predicates.end())
      for (const auto& tuple : it->second) {
        std::size_t row = 0;
        for (auto e : tuple) row = row * out.n + e;
        t[row] = true;
      }
  }
  return out;
}

// Evaluates `fs` in a found model with the independent evaluator.
bool oracle_accepts(const FiniteModel& m, const std::vector<fole::Formula>& fs) {
  const auto sig = oracle::signature(fs);
  const auto interp = to_interpretation(m, sig);
  for (const auto& g : fs)
    if (!oracle::holds(interp, g)) return false;
  return true;
}

fole::ClauseSet clauses_of(const std::vector<fole::Formula>& fs) { return fole::Clausifier().clausify(fs); }

}  // namespace

TEST(Prover, SiblingExclusionRefutationChecks) {
  const auto cs = clauses_of(fixtures::sibling_exclusion_formulas());
  const auto r = prove_unsat(cs, fixtures::config());
  ASSERT_TRUE(is_unsat(r));
  const auto& proof = std::get<Unsatisfiable>(r).proof;
  ASSERT_FALSE(proof.steps.empty());
  EXPECT_TRUE(proof.steps.back().clause.empty());
  const auto check = check_refutation(proof, cs);
  EXPECT_TRUE(check.ok) << check.error;
}

TEST(Prover, EmptySetIsUnknown) {
  EXPECT_TRUE(is_unknown(prove_unsat({}, fixtures::config())));
}

TEST(Prover, SatisfiableSetSaturatesToUnknown) {
  EXPECT_TRUE(is_unknown(prove_unsat(clauses_of({f("some(X,p_n_1(X))")}), fixtures::config())));
}

TEST(Prover, FormulaAndNegationAreRefuted) {
  gen::Rng rng(50);
  const auto v = gen::monadic_vocabulary(3, true);
  for (int i = 0; i < 50; ++i) {
    const auto g = gen::closed_formula(rng, v, 4, 2);
    const auto cs = clauses_of({g, fole::Formula::negation(g)});
    const auto r = prove_unsat(cs, fixtures::config());
    ASSERT_TRUE(is_unsat(r)) << fole::render(g);
    const auto check = check_refutation(std::get<Unsatisfiable>(r).proof, cs);
    ASSERT_TRUE(check.ok) << check.error;
  }
}

TEST(Prover, EqualityReasoning) {
  const auto r = check_sat({f("p_n_1(a)"), f("eq(a,b)"), f("not(p_n_1(b))")}, fixtures::config());
  EXPECT_TRUE(is_unsat(r));
}

TEST(ProofCheck, RejectsTamperedProof) {
  const auto cs = clauses_of(fixtures::sibling_exclusion_formulas());
  auto proof = std::get<Unsatisfiable>(prove_unsat(cs, fixtures::config())).proof;
  ASSERT_GE(proof.steps.size(), 2u);
  auto broken = proof;
  broken.steps.erase(broken.steps.begin());
  EXPECT_FALSE(check_refutation(broken, cs).ok);
  auto wrong = proof;
  for (auto& s : wrong.steps)
    if (s.rule == Rule::resolution) {
      s.clause = fole::Clause(std::vector<fole::Literal>{{true, "zz_n_1", {fole::Term::constant("c")}}});
      break;
    }
  EXPECT_FALSE(check_refutation(wrong, cs).ok);
}

TEST(ModelBuilder, SingleWitness) {
  const auto r = find_model({f("some(X, bird_n_1(X))")}, fixtures::config());
  ASSERT_TRUE(is_sat(r));
  const auto& m = std::get<Satisfiable>(r).model;
  EXPECT_EQ(m.domain_size, 1u);
  EXPECT_EQ(m.predicates.at("bird_n_1"), (std::set<Tuple>{{0}}));
}

TEST(ModelBuilder, SiblingExclusionHasNoModelUpToEight) {
  for (std::size_t k = 1; k <= 8; ++k)
    EXPECT_TRUE(is_unknown(find_model(fixtures::sibling_exclusion_formulas(), fixtures::config(k)))) << k;
}

TEST(ModelBuilder, TowerBridgeConsistency) {
  const auto p = fixtures::tower_bridge();
  auto fs = engine::premises(p);
  fs.push_back(*p.hypothesis);
  const auto r = find_model(fs, fixtures::config());
  ASSERT_TRUE(is_sat(r));
  EXPECT_TRUE(oracle_accepts(std::get<Satisfiable>(r).model, fs));
}

TEST(ModelBuilder, FoundModelsSatisfyInputs) {
  gen::Rng rng(181);
  auto v = gen::full_vocabulary();
  v.predicates = {{"p_n_1", 1}, {"q_n_1", 1}, {"r_r_1", 2}};
  int sat = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<fole::Formula> fs{gen::closed_formula(rng, v, 4, 3), gen::closed_formula(rng, v, 3, 2)};
    const auto r = find_model(fs, fixtures::config(4, 10));
    if (!is_sat(r)) continue;
    ++sat;
    const auto& m = std::get<Satisfiable>(r).model;
    for (const auto& g : fs) ASSERT_TRUE(evaluate(m, g)) << fole::render(g);
    ASSERT_TRUE(oracle_accepts(m, fs));
  }
  EXPECT_GT(sat, 50);
}

TEST(ModelBuilder, NoModelMeansNoSmallInterpretation) {
  gen::Rng rng(11);
  const auto v = gen::monadic_vocabulary(2, true);
  for (int i = 0; i < 150; ++i) {
    std::vector<fole::Formula> fs{gen::closed_formula(rng, v, 4, 2), gen::closed_formula(rng, v, 3, 2)};
    const auto r = find_model(fs, fixtures::config(3, 10));
    EXPECT_EQ(is_sat(r), oracle::satisfiable(fs, 3)) << fole::render(fs[0]) << " ; " << fole::render(fs[1]);
  }
}

TEST(Evaluate, Examples) {
  FiniteModel m;
  m.domain_size = 1;
  m.predicates["bird_n_1"] = {{0}};
  EXPECT_TRUE(evaluate(m, f("some(X,bird_n_1(X))")));
  m.domain_size = 2;
  EXPECT_FALSE(evaluate(m, f("all(X,bird_n_1(X))")));
  EXPECT_TRUE(evaluate(m, f("some(X,not(bird_n_1(X)))")));
}

TEST(CheckSat, SiblingExclusionProverWins) {
  const auto r = check_sat(fixtures::sibling_exclusion_formulas(), fixtures::config());
  ASSERT_TRUE(is_unsat(r));
  EXPECT_EQ(engine_name(r), "prover");
}

TEST(CheckSat, DirectContradiction) {
  EXPECT_TRUE(is_unsat(check_sat({f("some(X, p_n_1(X))"), f("all(X, not(p_n_1(X)))")}, fixtures::config())));
}

TEST(CheckSat, EngineSelection) {
  auto cfg = fixtures::config();
  cfg.engines = Engines::prover;
  EXPECT_TRUE(is_unknown(check_sat({f("some(X,p_n_1(X))")}, cfg)));
  cfg.engines = Engines::model_builder;
  EXPECT_TRUE(is_sat(check_sat({f("some(X,p_n_1(X))")}, cfg)));
  EXPECT_TRUE(is_unknown(check_sat(fixtures::sibling_exclusion_formulas(), cfg)));
  cfg.max_domain_size = 0;
  EXPECT_THROW(check_sat({}, cfg), std::invalid_argument);
}

TEST(CheckSat, AgreesWithExactMonadicOracle) {
  gen::Rng rng(4242);
  const auto v = gen::monadic_vocabulary(3, true);
  for (int i = 0; i < 120; ++i) {
    std::vector<fole::Formula> fs{gen::closed_formula(rng, v, 3, 2), gen::closed_formula(rng, v, 3, 2)};
    const auto r = check_sat(fs, fixtures::config(8, 10));
    ASSERT_FALSE(is_unknown(r)) << fole::render(fs[0]);
    EXPECT_EQ(is_sat(r), oracle::monadic_satisfiable(fs, 2)) << fole::render(fs[0]) << " ; " << fole::render(fs[1]);
  }
}

TEST(Unify, MostGeneralUnifierAndOccursCheck) {
  using fole::Term;
  Substitution s;
  ASSERT_TRUE(reasoner::detail::unify_terms(Term::function("f", {Term::variable("X"), Term::constant("a")}),
                          Term::function("f", {Term::constant("b"), Term::variable("Y")}), s));
  EXPECT_EQ(substitute(s, Term::variable("X")), Term::constant("b"));
  EXPECT_EQ(substitute(s, Term::variable("Y")), Term::constant("a"));
  Substitution t;
  EXPECT_FALSE(reasoner::detail::unify_terms(Term::variable("X"), Term::function("f", {Term::variable("X")}), t));
  Substitution u;
  EXPECT_FALSE(reasoner::detail::unify_terms(Term::constant("a"), Term::constant("b"), u));
}

TEST(Unify, UnifierEqualizesRandomTerms) {
  using fole::Term;
  gen::Rng rng(3);
  std::function<Term(int)> term = [&](int d) {
    const auto k = gen::pick(rng, d == 0 ? 2 : 3);
    if (k == 0) return Term::variable(std::string(1, "XYZ"[gen::pick(rng, 3)]));
    if (k == 1) return Term::constant(std::string(1, "ab"[gen::pick(rng, 2)]));
    return Term::function("f", {term(d - 1), term(d - 1)});
  };
  int unified = 0;
  for (int i = 0; i < 500; ++i) {
    const auto a = term(3), b = term(3);
    Substitution s;
    if (!reasoner::detail::unify_terms(a, b, s)) continue;
    ++unified;
    ASSERT_EQ(substitute(s, a), substitute(s, b)) << a.str() << " ~ " << b.str();
    for (const auto& [v, t] : s) ASSERT_EQ(substitute(s, t), t);
  }
  EXPECT_GT(unified, 30);
}

TEST(SatSolver, AgreesWithTruthTables) {
  gen::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t nvars = 1 + gen::pick(rng, 8);
    const std::size_t nclauses = gen::pick(rng, 30);
    std::vector<std::vector<sat::Lit>> cnf;
    for (std::size_t c = 0; c < nclauses; ++c) {
      std::vector<sat::Lit> cl;
      for (std::size_t k = 0, len = 1 + gen::pick(rng, 3); k < len; ++k) {
        const auto v = static_cast<sat::Var>(gen::pick(rng, nvars));
        cl.push_back(gen::coin(rng) ? sat::pos(v) : sat::neg(v));
      }
      cnf.push_back(cl);
    }
    bool brute = false;
    for (std::uint32_t a = 0; a < (1u << nvars) && !brute; ++a) {
      brute = std::all_of(cnf.begin(), cnf.end(), [&](const auto& cl) {
        return std::any_of(cl.begin(), cl.end(),
                           [&](sat::Lit l) { return (((a >> sat::var_of(l)) & 1) != 0) != sat::is_neg(l); });
      });
    }
    sat::Solver s;
    for (std::size_t v = 0; v < nvars; ++v) s.new_var();
    bool ok = true;
    for (const auto& cl : cnf) ok = s.add_clause(cl) && ok;
    const auto st = ok ? s.solve() : sat::Status::unsat;
    ASSERT_EQ(st == sat::Status::sat, brute) << i;
  }
}

TEST(Export, OneClausePerLine) {
  const auto cs = clauses_of(fixtures::sibling_exclusion_formulas());
  const auto text = export_clauses(cs);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
  EXPECT_NE(text.find("-ci_n_1(X0) | -cj_n_1(X0)"), std::string::npos);
  EXPECT_NE(text.find("ck_n_1(sk_1)"), std::string::npos);
}

TEST(ModelBuilder, NeverUnknownOnSatisfiableMonadicSets) {
  gen::Rng rng(8080);
  const auto v = gen::monadic_vocabulary(3, true);
  int satisfiable = 0;
  for (int i = 0; i < 150; ++i) {
    std::vector<fole::Formula> fs{gen::closed_formula(rng, v, 3, 2), gen::closed_formula(rng, v, 3, 2)};
    if (!oracle::monadic_satisfiable(fs, 2)) continue;
    ++satisfiable;
    EXPECT_TRUE(is_sat(find_model(fs, fixtures::config(8, 10)))) << fole::render(fs[0]) << " ; " << fole::render(fs[1]);
  }
  EXPECT_GT(satisfiable, 50);
}
