#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

#ifndef RTE_CLI
#define RTE_CLI "rte"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(RTE_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string d(const std::string& rel) { return fixtures::data(rel); }

std::string leibniz_flags() {
  return "--problem " + d("leibniz/problem.fole") + " --store " + d("leibniz/wordnet.tax") + " --yago-dir " +
         d("leibniz/yago") + " --keep-list " + d("leibniz/keep.txt") + " --max-domain 16";
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "rte_cli_tests";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

std::string record_value(const std::string& out, const std::string& key) {
  const auto pos = out.find(key + "=");
  if (pos == std::string::npos) return "";
  const auto start = pos + key.size() + 1;
  return out.substr(start, out.find('\n', start) - start);
}

}  // namespace

TEST(Cli, LeibnizBundleIsEntailment) {
  const auto r = cli("check " + leibniz_flags() + " --format record");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(record_value(r.out, "verdict"), "Entailment");
  EXPECT_EQ(record_value(r.out, "resolved_by_yago"), "bautzen_ne_1");
}

TEST(Cli, LeibnizWithoutYagoIsInformative) {
  const auto r = cli("check --problem " + d("leibniz/problem.fole") + " --store " + d("leibniz/wordnet.tax") +
                     " --keep-list " + d("leibniz/keep.txt") + " --max-domain 16 --format record");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(record_value(r.out, "verdict"), "Informative");
}

TEST(Cli, TrivialBundle) {
  const auto r = cli("check --problem " + d("trivial/reflexive.fole"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: Entailment"), std::string::npos);
}

TEST(Cli, MalformedFileReportsPosition) {
  const auto p = temp_file("bad.fole", "#text\nsome(X,and(p_n_1(X),\n  q_n_1(X)).\n#hypothesis\np_n_1(c).\n");
  const auto r = cli("check --problem " + p.string(), true);
  EXPECT_GE(r.code, 10);
  EXPECT_NE(r.out.find("3:12"), std::string::npos) << r.out;
}

TEST(Cli, UsageAndIoErrors) {
  EXPECT_EQ(cli("check").code, 10);
  EXPECT_EQ(cli("frobnicate").code, 10);
  EXPECT_EQ(cli("check --problem /nonexistent/problem.fole").code, 11);
  EXPECT_EQ(cli("check --problem " + d("leibniz/problem.fole") + " --store /nonexistent.tax").code, 11);
  const auto bad_store = temp_file("bad.tax", "hyp a_n_1\n");
  EXPECT_EQ(cli("kb --store " + bad_store.string()).code, 13);
  EXPECT_EQ(cli("check --problem " + d("leibniz/problem.fole") + " --store " + d("leibniz/wordnet.tax") +
                " --policy manual").code,
            13);
}

TEST(Cli, AxiomsContainListingAxioms) {
  const auto r = cli("axioms --problem " + d("leibniz/problem.fole") + " --store " + d("leibniz/wordnet.tax") +
                     " --yago-dir " + d("leibniz/yago") + " --keep-list " + d("leibniz/keep.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all(X, imp(city_n_1(X), location_n_1(X)))."), std::string::npos);
  EXPECT_NE(r.out.find("all(X, imp(event_n_1(X), not(object_n_1(X))))."), std::string::npos);
}

TEST(Cli, AxiomsForEmptyProblem) {
  const auto p = temp_file("empty.fole", "");
  const auto r = cli("axioms --problem " + p.string() + " --store " + d("leibniz/wordnet.tax"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty()) << r.out;
}

TEST(Cli, SplitPipelineMatchesFusedRun) {
  struct Case {
    std::string name, knowledge;
  };
  std::vector<Case> cases{
      {"leibniz", "--store " + d("leibniz/wordnet.tax") + " --yago-dir " + d("leibniz/yago") + " --keep-list " +
                      d("leibniz/keep.txt")},
      {"presup", "--presup-store " + d("presup/store.txt") + " --presup-axioms " + d("presup/abstract.lam")},
  };
  std::map<std::string, std::string> problems{{"leibniz", d("leibniz/problem.fole")},
                                              {"presup", d("presup/price_explosion.fole")}};
  for (const auto& c : fixtures::regression_cases()) {
    cases.push_back({c.name, "--store " + d("regression/taxonomy.tax")});
    problems[c.name] = c.path;
  }
  for (const auto& c : cases) {
    const auto fused = cli("check --problem " + problems[c.name] + " " + c.knowledge + " --max-domain 16 --format record");
    const auto emitted = cli("axioms --emit-problem --problem " + problems[c.name] + " " + c.knowledge);
    ASSERT_EQ(emitted.code, 0) << c.name;
    const auto p = temp_file(c.name + "_augmented.fole", emitted.out);
    const auto split = cli("check --no-pipeline --problem " + p.string() + " --max-domain 16 --format record");
    EXPECT_EQ(record_value(split.out, "verdict"), record_value(fused.out, "verdict")) << c.name;
    EXPECT_EQ(split.code, fused.code) << c.name;
  }
}

TEST(Cli, SatSiblingExclusion) {
  const auto r = cli("sat " + d("sat/sibling_exclusion.fole"));
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.starts_with("UNSAT"));
  EXPECT_NE(r.out.find("$false"), std::string::npos);
}

TEST(Cli, SatSingleExistential) {
  const auto r = cli("sat " + d("sat/witness.fole"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("domain size 1"), std::string::npos);
}

TEST(Cli, SatMatchesOracleOnCorpusSample) {
  for (unsigned mask = 0; mask < fixtures::corpus_size; mask += 37) {
    const auto fs = fixtures::corpus_instance(mask);
    std::string text;
    for (const auto& g : fs) text += rte::fole::render_statement(g) + "\n";
    const auto p = temp_file("corpus_" + std::to_string(mask) + ".fole", text);
    const auto r = cli("sat " + p.string() + " --format record");
    EXPECT_EQ(r.code, oracle::satisfiable(fs, 3) ? 0 : 1) << mask;
  }
}

TEST(Cli, RecordOutputIsDeterministic) {
  for (const auto& args : {"check " + leibniz_flags() + " --format record",
                           "check --problem " + d("tower_bridge/problem.fole") + " --no-pipeline --format record",
                           "sat " + d("sat/sibling_exclusion.fole") + " --format record"}) {
    const auto a = cli(args);
    const auto b = cli(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, ParseAndKb) {
  EXPECT_EQ(cli("parse " + d("leibniz/problem.fole") + " " + d("tower_bridge/problem.fole")).code, 0);
  EXPECT_EQ(cli("kb --store " + d("leibniz/wordnet.tax") + " --yago-dir " + d("leibniz/yago") + " --keep-list " +
                d("leibniz/keep.txt") + " --presup-store " + d("presup/store.txt") + " --presup-axioms " +
                d("presup/abstract.lam"))
                .code,
            0);
}

TEST(Cli, ExportClauses) {
  const auto out = std::filesystem::temp_directory_path() / "rte_cli_tests" / "clauses.txt";
  std::filesystem::create_directories(out.parent_path());
  EXPECT_EQ(cli("sat " + d("sat/sibling_exclusion.fole") + " --export-clauses " + out.string()).code, 1);
  const auto text = rte::fole::read_file(out.string());
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}
