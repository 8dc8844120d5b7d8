// rte: command-line front end for the RTE toolkit.
//
//   rte check  --problem P [--store S] [--yago-dir D] [--presup-store F --presup-axioms A] ...
//   rte axioms --problem P --store S [...]
//   rte sat    FILE...
//   rte parse  FILE...
//   rte kb     [--store S] [--yago-dir D] [--keep-list K] [--presup-store F --presup-axioms A]
//
// Exit codes of `check`: 0 Entailment, 1 Informative, 2 Contradiction,
// 3 Unknown. `sat`: 0 satisfiable, 1 unsatisfiable, 3 unknown. Errors: 10 usage,
// 11 file access, 12 FOLE syntax, 13 knowledge files, 14 reasoner failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rte/rte.hpp"

namespace {

using namespace rte;

enum Exit : int {
  exit_usage = 10,
  exit_io = 11,
  exit_syntax = 12,
  exit_knowledge = 13,
  exit_reasoner = 14,
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string problem;
  std::string store;
  std::string yago_dir;
  std::string presup_store;
  std::string presup_axioms;
  std::string policy = "lowest-sense";
  std::string keep_list;
  std::size_t max_domain = 8;
  std::size_t max_clauses = 200000;
  double max_seconds = 30;
  std::string engines = "both";
  std::string format = "text";
  bool verbose = false;
  bool show_model = false;
  bool show_proof = false;
  bool no_pipeline = false;
  bool emit_problem = false;
  std::string export_clauses;
  std::vector<std::string> files;
};

std::string read_input(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw IoError("cannot read '" + path + "'");
  return fole::read_file(path);
}

reasoner::ReasonerConfig reasoner_config(const Options& o) {
  reasoner::ReasonerConfig cfg;
  cfg.max_domain_size = o.max_domain;
  cfg.max_clauses = o.max_clauses;
  cfg.max_time = std::chrono::milliseconds(static_cast<long long>(o.max_seconds * 1000));
  if (o.engines == "prover")
    cfg.engines = reasoner::Engines::prover;
  else if (o.engines == "model-builder")
    cfg.engines = reasoner::Engines::model_builder;
  cfg.validate();
  return cfg;
}

std::string join(const auto& items, const std::string& sep = ",") {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + std::string(s);
  return out;
}

fole::Problem load_problem_file(const std::string& path, bool report) {
  auto r = fole::parse_problem(read_input(path));
  if (report)
    for (const auto& d : r.diagnostics)
      std::cerr << path << ":" << d.pos.line << ":" << d.pos.column << ": warning: " << d.message << "\n";
  return r.problem;
}

kgraph::EdgePolicy edge_policy(const Options& o) {
  if (!o.keep_list.empty()) return kgraph::parse_keep_list(read_input(o.keep_list));
  if (o.policy == "manual") throw kgraph::GraphError("--policy manual needs --keep-list");
  return kgraph::EdgePolicy::lowest_sense();
}

struct Augmented {
  fole::Problem problem;
  std::optional<ontology::PipelineReport> report;
  std::vector<fole::Axiom> presup;
};

Augmented augment(const Options& o) {
  Augmented a{load_problem_file(o.problem, true), std::nullopt, {}};
  if (!o.no_pipeline && !o.store.empty()) {
    const auto store = ontology::TaxonomyStore::parse(read_input(o.store));
    std::map<std::string, ontology::TypeQueryResult> yago;
    if (!o.yago_dir.empty()) {
      if (!std::filesystem::is_directory(o.yago_dir)) throw IoError("not a directory: '" + o.yago_dir + "'");
      yago = ontology::load_yago_dir(o.yago_dir);
    }
    ontology::PipelineOptions po;
    po.policy = edge_policy(o);
    a.report = ontology::run_pipeline(a.problem, store, yago, po);
    a.problem = a.report->problem;
  }
  if (!o.no_pipeline && !o.presup_store.empty()) {
    if (o.presup_axioms.empty()) throw presup::StoreError("--presup-store needs --presup-axioms");
    read_input(o.presup_store);
    read_input(o.presup_axioms);
    const auto store = presup::load_argument_store(o.presup_store, o.presup_axioms);
    a.presup = presup::generate_presup_axioms(a.problem, store);
    for (const auto& ax : a.presup) {
      auto same = [&](const fole::Axiom& b) { return b.formula == ax.formula; };
      if (std::none_of(a.problem.background.begin(), a.problem.background.end(), same))
        a.problem.background.push_back(ax);
    }
  }
  return a;
}

std::string certificate_summary(const reasoner::SatResult& r) {
  using namespace reasoner;
  if (const auto* u = std::get_if<Unsatisfiable>(&r))
    return "unsat [" + u->engine + ", " + std::to_string(u->proof.steps.size()) + " proof steps]";
  if (const auto* s = std::get_if<Satisfiable>(&r))
    return "sat [" + s->engine + ", domain size " + std::to_string(s->model.domain_size) + "]";
  const auto& k = std::get<Unknown>(r);
  return "unknown [" + k.engine + ": " + k.reason + "]";
}

void print_certificate(std::ostream& os, const reasoner::SatResult& r, const Options& o) {
  using namespace reasoner;
  if (const auto* u = std::get_if<Unsatisfiable>(&r); u && o.show_proof) os << u->proof.str();
  if (const auto* s = std::get_if<Satisfiable>(&r); s && o.show_model) os << s->model.str();
}

const char* test_label(int test) { return test == 1 ? "T & BK & H" : "T & BK & -H"; }

int verdict_exit(engine::VerdictKind k) {
  switch (k) {
    case engine::VerdictKind::entailment: return 0;
    case engine::VerdictKind::informative: return 1;
    case engine::VerdictKind::contradiction: return 2;
    case engine::VerdictKind::unknown: return 3;
  }
  return 3;
}

void export_test_clauses(const std::string& path, const fole::Problem& p, const reasoner::ReasonerConfig& cfg) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  for (int test = 1; test <= 2; ++test) {
    auto fs = engine::premises(p);
    fs.push_back(test == 1 ? *p.hypothesis : fole::Formula::negation(*p.hypothesis));
    out << "% test " << test << ": " << test_label(test) << "\n";
    out << reasoner::export_clauses(fole::Clausifier(cfg.max_clauses).clausify(fs));
  }
}

std::size_t count_phase(const fole::Problem& p, const std::string& phase) {
  return static_cast<std::size_t>(std::count_if(p.background.begin(), p.background.end(),
                                                [&](const fole::Axiom& a) { return a.provenance.phase == phase; }));
}

int cmd_check(const Options& o) {
  const auto cfg = reasoner_config(o);
  const auto a = augment(o);
  if (!a.problem.hypothesis) throw fole::ParseError({1, 1}, "problem has no #hypothesis section");
  if (!o.export_clauses.empty()) export_test_clauses(o.export_clauses, a.problem, cfg);
  const auto v = engine::classify(a.problem, cfg);
  const int code = verdict_exit(v.kind);

  if (o.format == "record") {
    std::cout << "verdict=" << engine::to_string(v.kind) << "\n";
    std::cout << "exit_code=" << code << "\n";
    std::cout << "indefinite_test=" << (v.indefinite_test ? std::to_string(*v.indefinite_test) : "none") << "\n";
    for (int test = 1; test <= 2; ++test) {
      auto it = std::find_if(v.evidence.begin(), v.evidence.end(), [&](const auto& e) { return e.test == test; });
      std::cout << "test" << test << ".status="
                << (it == v.evidence.end() ? std::string("skipped") : std::string(reasoner::status_name(it->result)))
                << "\n";
    }
    std::vector<std::string> sp, unresolved, yago, removed;
    if (a.report) {
      sp.assign(a.report->search_predicates.begin(), a.report->search_predicates.end());
      unresolved.assign(a.report->unresolved.begin(), a.report->unresolved.end());
      yago.assign(a.report->resolved_by_yago.begin(), a.report->resolved_by_yago.end());
      for (const auto& [c, p] : a.report->removed_edges) removed.push_back(c + "->" + p);
    }
    std::cout << "pipeline=" << (a.report ? "on" : "off") << "\n";
    std::cout << "search_predicates=" << join(sp) << "\n";
    std::cout << "unresolved=" << join(unresolved) << "\n";
    std::cout << "resolved_by_yago=" << join(yago) << "\n";
    std::cout << "removed_edges=" << join(removed) << "\n";
    std::cout << "axioms.input=" << count_phase(a.problem, "input") << "\n";
    std::cout << "axioms.phase3=" << count_phase(a.problem, "III") << "\n";
    std::cout << "axioms.presup=" << count_phase(a.problem, "presup") << "\n";
    std::cout << "axioms.total=" << a.problem.background.size() << "\n";
    std::cout << "engines=" << reasoner::to_string(cfg.engines) << "\n";
    std::cout << "max_domain=" << cfg.max_domain_size << "\n";
    return code;
  }

  std::cout << "verdict: " << engine::to_string(v.kind);
  if (v.indefinite_test) std::cout << " (test " << *v.indefinite_test << " indefinite)";
  std::cout << "\n";
  for (const auto& e : v.evidence) {
    std::cout << "test " << e.test << " (" << test_label(e.test) << "): " << certificate_summary(e.result) << "\n";
    print_certificate(std::cout, e.result, o);
  }
  if (o.verbose && a.report) {
    std::cout << "search predicates: " << join(a.report->search_predicates, " ") << "\n";
    std::cout << "unresolved after phase I: " << join(a.report->unresolved, " ") << "\n";
    std::cout << "resolved by yago: " << join(a.report->resolved_by_yago, " ") << "\n";
    for (const auto& [c, p] : a.report->removed_edges) std::cout << "removed edge: " << c << " -> " << p << "\n";
    std::cout << "knowledge tree:\n" << kgraph::write_graph(a.report->tree);
  }
  std::cout << "axioms (" << a.problem.background.size() << "):\n";
  for (const auto& ax : a.problem.background)
    std::cout << "  " << fole::to_string(ax.kind) << "\t" << ax.provenance.phase << "\t"
              << (ax.provenance.source.empty() ? "-" : ax.provenance.source) << "\t" << fole::render(ax.formula)
              << "\n";
  return code;
}

int cmd_axioms(const Options& o) {
  if (o.store.empty() && o.presup_store.empty()) throw kgraph::GraphError("axioms needs --store or --presup-store");
  Options opts = o;
  opts.no_pipeline = false;
  const auto a = augment(opts);
  if (o.emit_problem) {
    std::cout << fole::render_problem(a.problem);
    return 0;
  }
  if (a.report)
    for (const auto& ax : a.report->generated) std::cout << fole::render_axiom_section(ax);
  for (const auto& ax : a.presup) std::cout << fole::render_axiom_section(ax);
  return 0;
}

int cmd_sat(const Options& o) {
  const auto cfg = reasoner_config(o);
  std::vector<fole::Formula> formulas;
  fole::ParseContext ctx;
  for (const auto& f : o.files) {
    auto fs = fole::parse_fole_list(read_input(f), ctx);
    formulas.insert(formulas.end(), fs.begin(), fs.end());
  }
  for (const auto& d : ctx.diagnostics)
    std::cerr << d.pos.line << ":" << d.pos.column << ": warning: " << d.message << "\n";
  if (!o.export_clauses.empty()) {
    std::ofstream out(o.export_clauses);
    if (!out) throw IoError("cannot write '" + o.export_clauses + "'");
    out << reasoner::export_clauses(fole::Clausifier(cfg.max_clauses).clausify(formulas));
  }
  const auto r = reasoner::check_sat(formulas, cfg);
  const int code = reasoner::is_sat(r) ? 0 : reasoner::is_unsat(r) ? 1 : 3;
  if (o.format == "record") {
    std::cout << "status=" << reasoner::status_name(r) << "\n";
    std::cout << "exit_code=" << code << "\n";
    std::cout << "formulas=" << formulas.size() << "\n";
    return code;
  }
  std::string status(reasoner::status_name(r));
  for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::cout << status << " " << certificate_summary(r).substr(certificate_summary(r).find('[')) << "\n";
  Options shown = o;
  shown.show_model = shown.show_proof = true;
  print_certificate(std::cout, r, shown);
  return code;
}

int cmd_parse(const Options& o) {
  for (const auto& f : o.files) {
    auto r = fole::parse_problem(read_input(f));
    for (const auto& d : r.diagnostics)
      std::cerr << f << ":" << d.pos.line << ":" << d.pos.column << ": warning: " << d.message << "\n";
    std::cout << fole::render_problem(r.problem);
  }
  return 0;
}

int cmd_kb(const Options& o) {
  if (!o.store.empty()) {
    const auto s = ontology::TaxonomyStore::parse(read_input(o.store));
    std::cout << "store " << o.store << ": " << s.symbol_count() << " symbols\n";
  }
  if (!o.yago_dir.empty()) {
    if (!std::filesystem::is_directory(o.yago_dir)) throw IoError("not a directory: '" + o.yago_dir + "'");
    for (const auto& [subject, q] : ontology::load_yago_dir(o.yago_dir))
      std::cout << "yago " << subject << ": " << q.graph.node_count() << " nodes, "
                << ontology::yago_paths(q).size() << " paths, " << q.aliases.size() << " names\n";
  }
  if (!o.keep_list.empty()) {
    const auto p = kgraph::parse_keep_list(read_input(o.keep_list));
    std::cout << "keep-list " << o.keep_list << ": " << p.keep.size() << " directives\n";
  }
  if (!o.presup_store.empty()) {
    if (o.presup_axioms.empty()) throw presup::StoreError("--presup-store needs --presup-axioms");
    read_input(o.presup_store);
    read_input(o.presup_axioms);
    const auto s = presup::load_argument_store(o.presup_store, o.presup_axioms);
    for (const auto& [trigger, e] : s.entries) presup::instantiate(s.abstracts.at(e.axiom_id), e.args);
    std::cout << "presup store: " << s.entries.size() << " triggers, " << s.abstracts.size()
              << " abstract axioms\n";
  }
  return 0;
}

void add_knowledge_flags(CLI::App* c, Options& o) {
  c->add_option("--store", o.store, "taxonomy store file");
  c->add_option("--yago-dir", o.yago_dir, "directory of <predicate>.yago fixtures");
  c->add_option("--presup-store", o.presup_store, "presupposition argument store");
  c->add_option("--presup-axioms", o.presup_axioms, "abstract presupposition axioms");
  c->add_option("--policy", o.policy, "edge policy for multi-parent nodes")
      ->check(CLI::IsMember({"lowest-sense", "manual"}));
  c->add_option("--keep-list", o.keep_list, "keep-list file (implies --policy manual)");
}

void add_reasoner_flags(CLI::App* c, Options& o) {
  c->add_option("--max-domain", o.max_domain, "largest domain size tried by the model builder")
      ->check(CLI::PositiveNumber);
  c->add_option("--max-clauses", o.max_clauses, "clause limit of the prover")->check(CLI::PositiveNumber);
  c->add_option("--max-seconds", o.max_seconds, "time limit per satisfiability check")
      ->check(CLI::PositiveNumber);
  c->add_option("--engines", o.engines, "both, prover or model-builder")
      ->check(CLI::IsMember({"both", "prover", "model-builder"}));
  c->add_option("--format", o.format, "text or record")->check(CLI::IsMember({"text", "record"}));
  c->add_option("--export-clauses", o.export_clauses, "write the clause sets to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order RTE toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "classify a problem");
  check->add_option("--problem", o.problem, "problem file")->required();
  add_knowledge_flags(check, o);
  add_reasoner_flags(check, o);
  check->add_flag("-v,--verbose", o.verbose, "print pipeline details");
  check->add_flag("--show-model", o.show_model, "print models of satisfiable tests");
  check->add_flag("--show-proof", o.show_proof, "print refutations of unsatisfiable tests");
  check->add_flag("--no-pipeline", o.no_pipeline, "use the problem's axioms as they are");

  auto* axioms = app.add_subcommand("axioms", "generate background axioms");
  axioms->add_option("--problem", o.problem, "problem file")->required();
  add_knowledge_flags(axioms, o);
  axioms->add_flag("--emit-problem", o.emit_problem, "print the augmented problem instead");

  auto* sat = app.add_subcommand("sat", "check satisfiability of the conjunction of formula files");
  sat->add_option("files", o.files, "files of '.'-terminated formulas")->required()->check(CLI::ExistingFile);
  add_reasoner_flags(sat, o);

  auto* parse = app.add_subcommand("parse", "validate and pretty-print problem files");
  parse->add_option("files", o.files, "problem files")->required();

  auto* kb = app.add_subcommand("kb", "validate knowledge files");
  add_knowledge_flags(kb, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*axioms) return cmd_axioms(o);
    if (*sat) return cmd_sat(o);
    if (*parse) return cmd_parse(o);
    if (*kb) return cmd_kb(o);
  } catch (const IoError& e) {
    std::cerr << "rte: " << e.what() << "\n";
    return exit_io;
  } catch (const fole::ParseError& e) {
    std::cerr << "rte: syntax error at " << e.position().line << ":" << e.position().column << ": "
              << e.message() << "\n";
    return exit_syntax;
  } catch (const ontology::StoreError& e) {
    std::cerr << "rte: " << e.what() << "\n";
    return exit_knowledge;
  } catch (const presup::StoreError& e) {
    std::cerr << "rte: " << e.what() << "\n";
    return exit_knowledge;
  } catch (const kgraph::GraphError& e) {
    std::cerr << "rte: " << e.what() << "\n";
    return exit_knowledge;
  } catch (const presup::ReductionError& e) {
    std::cerr << "rte: " << e.what() << "\n";
    return exit_knowledge;
  } catch (const reasoner::SoundnessError& e) {
    std::cerr << "rte: " << e.what() << "\nrefutation:\n" << e.proof().str() << "model:\n" << e.model().str();
    return exit_reasoner;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rte: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "rte: " << e.what() << "\n";
    return exit_reasoner;
  }
  return exit_usage;
}
