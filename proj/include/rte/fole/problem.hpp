#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rte/fole/axiom.hpp"
#include "rte/fole/parser.hpp"
#include "rte/fole/render.hpp"

namespace rte::fole {

// An RTE problem: text T, hypothesis H and background axioms BK. T and H are
// optional so that partial bundles (axiom-only files) share the format.
struct Problem {
  std::optional<Formula> text;
  std::optional<Formula> hypothesis;
  std::vector<Axiom> background;
};

struct ProblemParseResult {
  Problem problem;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline Axiom parse_axiom_header(const std::vector<std::string>& words, SourcePos pos) {
  Axiom ax;
  ax.provenance.phase = "input";
  for (std::size_t i = 1; i < words.size(); ++i) {
    const auto& w = words[i];
    if (auto k = axiom_kind_from_string(w)) {
      ax.kind = *k;
    } else if (w.starts_with("phase=")) {
      ax.provenance.phase = w.substr(6);
    } else if (w.starts_with("source=")) {
      ax.provenance.source = w.substr(7);
    } else {
      throw ParseError(pos, "unknown #axiom attribute '" + w + "'");
    }
  }
  return ax;
}

}  // namespace detail

// Line-oriented container:
//   #text / #hypothesis / #axiom [KIND] [phase=P] [source=S]
// each followed by one `.`-terminated formula; `%` starts a comment line.
// Arity consistency is enforced across all sections.
inline ProblemParseResult parse_problem(const std::string& content, ParseOptions opts = {}) {
  ProblemParseResult result;
  ParseContext ctx;
  ctx.options = opts;

  struct Section {
    std::string header;
    std::vector<std::string> words;
    SourcePos pos;
    std::size_t body_line = 0;  // first body line, 1-based
    std::string body;
  };
  std::vector<Section> sections;

  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') {
      Section s;
      s.words = detail::split_ws(line.substr(first));
      s.header = s.words.front();
      s.pos = {lineno, first + 1};
      s.body_line = lineno + 1;
      sections.push_back(std::move(s));
      continue;
    }
    if (sections.empty()) {
      if (first == std::string::npos || line[first] == '%') continue;
      throw ParseError({lineno, first + 1}, "content before the first section header");
    }
    sections.back().body += line;
    sections.back().body += '\n';
  }

  for (const auto& s : sections) {
    ctx.line_offset = s.body_line - 1;
    auto parse_body = [&]() {
      if (s.body.find_first_not_of(" \t\r\n") == std::string::npos)
        throw ParseError(s.pos, "section " + s.header + " has no formula");
      return parse_fole(s.body, ctx);
    };
    if (s.header == "#text") {
      if (result.problem.text) throw ParseError(s.pos, "duplicate #text section");
      result.problem.text = parse_body();
    } else if (s.header == "#hypothesis") {
      if (result.problem.hypothesis) throw ParseError(s.pos, "duplicate #hypothesis section");
      result.problem.hypothesis = parse_body();
    } else if (s.header == "#axiom") {
      Axiom ax = detail::parse_axiom_header(s.words, s.pos);
      ax.formula = parse_body();
      result.problem.background.push_back(std::move(ax));
    } else {
      throw ParseError(s.pos, "unknown section '" + s.header + "'");
    }
  }
  result.diagnostics = std::move(ctx.diagnostics);
  return result;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ProblemParseResult load_problem(const std::string& path, ParseOptions opts = {}) {
  return parse_problem(read_file(path), opts);
}

inline std::string render_axiom_section(const Axiom& ax) {
  std::string out = "#axiom ";
  out += to_string(ax.kind);
  if (!ax.provenance.phase.empty()) out += " phase=" + ax.provenance.phase;
  if (!ax.provenance.source.empty()) out += " source=" + ax.provenance.source;
  out += '\n';
  out += render_statement(ax.formula);
  out += '\n';
  return out;
}

inline std::string render_problem(const Problem& p) {
  std::string out;
  if (p.text) out += "#text\n" + render_statement(*p.text) + "\n";
  if (p.hypothesis) out += "#hypothesis\n" + render_statement(*p.hypothesis) + "\n";
  for (const auto& ax : p.background) out += render_axiom_section(ax);
  return out;
}

}  // namespace rte::fole
