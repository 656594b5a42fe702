// Copyright 2026 The mincon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mincon: command-line front end.
//
//   mincon gen --family complete-bipartite --k 3 --n 10
//   mincon enumerate --n 6 --min-degree 2 | mincon scan --k 2 --mode vertex
//   mincon verify --suite forest --k 2 --mode vertex --input corpus.g6
//
// Exit status: 0 success / all checks pass, 1 verification failures,
// 2 usage or parse errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mincon/canonical.hpp"
#include "mincon/connectivity.hpp"
#include "mincon/graph6.hpp"
#include "mincon/report_json.hpp"
#include "mincon/rewire.hpp"
#include "mincon/scan.hpp"
#include "mincon/spectral.hpp"

namespace {

using mincon::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::size_t k = 0;
  std::string mode = "vertex";
  double tol = mincon::kDefaultTolerance;
  unsigned jobs = 1;
  std::string output = "json";
  std::string input;
};

void add_k(CLI::App* cmd, CommonOptions& o, bool required) {
  auto* opt = cmd->add_option("--k", o.k, "Target connectivity k")->check(CLI::PositiveNumber);
  if (required) opt->required();
}
void add_mode(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--mode", o.mode, "vertex|edge")
      ->check(CLI::IsMember({"vertex", "edge"}))
      ->capture_default_str();
}
void add_output(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--output", o.output, "json|tsv")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
}
void add_input(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--input", o.input, "graph6 file (default: standard input)");
}

mincon::Graph6Corpus read_corpus(const CommonOptions& o) {
  if (o.input.empty() || o.input == "-") return mincon::read_graph6_stream(std::cin);
  std::ifstream in(o.input);
  if (!in) throw std::invalid_argument("cannot open input file '" + o.input + "'");
  return mincon::read_graph6_stream(in);
}

// Reports malformed lines on stderr; returns true if there were any.
bool report_parse_errors(const mincon::Graph6Corpus& corpus) {
  for (const auto& e : corpus.errors)
    std::cerr << "line " << e.line_number << ": " << e.message << '\n';
  return !corpus.errors.empty();
}

// Inputs for single-graph commands: an explicit --graph6 string or every
// line of the corpus.
mincon::Graph6Corpus single_inputs(const CommonOptions& o, const std::string& graph6) {
  if (graph6.empty()) return read_corpus(o);
  std::istringstream in(graph6);
  return mincon::read_graph6_stream(in);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_gen(const CommonOptions& o, const std::string& family, std::size_t n) {
  const mincon::Family f = mincon::parse_family(family);
  const mincon::Graph g = mincon::make_family(f, n, o.k);
  const std::string code = mincon::encode_graph6(g);
  if (o.output == "tsv") {
    std::cout << code << '\n';
    return kExitOk;
  }
  Json j;
  j["family"] = mincon::to_string(f);
  j["n"] = g.order();
  if (o.k > 0) j["k"] = o.k;
  j["e"] = g.size();
  j["graph6"] = code;
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int run_enumerate(std::size_t n, std::size_t min_degree) {
  for (const auto& code : mincon::enumerate_graph6(n, min_degree)) std::cout << code << '\n';
  return kExitOk;
}

int run_check(const CommonOptions& o, const std::string& graph6) {
  const auto corpus = single_inputs(o, graph6);
  const bool bad = report_parse_errors(corpus);
  const mincon::Kind kind = mincon::parse_kind(o.mode);
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const auto& g = corpus.graphs[i];
    Json j;
    j["graph6"] = corpus.codes[i];
    if (kind == mincon::Kind::vertex && g.order() < 2) {
      j["connectivity"] = nullptr;
    } else {
      j["connectivity"] = mincon::to_json(mincon::connectivity(g, kind));
    }
    const auto cert = mincon::certify_minimality(g, o.k, kind);
    j["minimal"] = cert.valid();
    j["certificate"] = mincon::to_json(cert);
    std::cout << j.dump() << '\n';
  }
  return bad ? kExitUsage : kExitOk;
}

int run_rho(const CommonOptions& o, const std::string& graph6) {
  const auto corpus = single_inputs(o, graph6);
  const bool bad = report_parse_errors(corpus);
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    Json j;
    j["graph6"] = corpus.codes[i];
    const Json perron = mincon::to_json(mincon::spectral_radius(corpus.graphs[i], o.tol));
    for (const auto& [key, value] : perron.items()) j[key] = value;
    std::cout << j.dump() << '\n';
  }
  return bad ? kExitUsage : kExitOk;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad vertex index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int run_rewire(const CommonOptions& o, const std::string& graph6, const std::string& l_text) {
  const auto corpus = single_inputs(o, graph6);
  const bool bad = report_parse_errors(corpus);
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const auto& g = corpus.graphs[i];
    const auto perron = mincon::spectral_radius(g, o.tol);
    mincon::VertexSet l = l_text.empty()
                              ? mincon::top_coordinates(perron.vector, o.k)
                              : mincon::VertexSet::of(g.order(), parse_index_list(l_text));
    const auto plan = mincon::rewire_to_l(g, l, o.k);
    const auto cert = mincon::certify_rayleigh_increase(g, plan, perron.vector, o.tol);
    Json j;
    j["graph6"] = corpus.codes[i];
    j["k"] = o.k;
    j["plan"] = mincon::to_json(plan);
    j["rho_before"] = cert.rho_before;
    j["rho_after"] = cert.rho_after;
    j["preconditions"] = mincon::coordinate_preconditions(plan, perron.vector, o.k);
    j["certificate"] = mincon::to_json(cert);
    std::cout << j.dump() << '\n';
  }
  return bad ? kExitUsage : kExitOk;
}

int run_scan(const CommonOptions& o, bool summary_only) {
  const auto corpus = read_corpus(o);
  const bool bad = report_parse_errors(corpus);
  const auto result = mincon::scan_graphs(corpus.graphs, corpus.codes, o.k,
                                          mincon::parse_kind(o.mode), o.jobs, o.tol);
  if (!summary_only) {
    if (o.output == "tsv") {
      std::cout << "graph6\tn\te\tkappa\tkappa_prime\tminimal\trho\tdegree_k_count\n";
      for (const auto& r : result.records) {
        std::cout << r.graph6 << '\t' << r.n << '\t' << r.e << '\t'
                  << (r.kappa ? std::to_string(*r.kappa) : "-") << '\t' << r.kappa_prime
                  << '\t' << (r.minimal ? "true" : "false") << '\t'
                  << (r.rho ? format_double(*r.rho) : "-") << '\t' << r.degree_k_count << '\n';
      }
    } else {
      for (const auto& r : result.records) std::cout << mincon::to_json(r).dump() << '\n';
    }
  }
  Json summary = mincon::to_json(result.report);
  summary["parse_errors"] = corpus.errors.size();
  std::cout << summary.dump() << '\n';
  return bad ? kExitUsage : kExitOk;
}

int run_verify(const CommonOptions& o, const std::string& suite, bool summary_only) {
  const auto corpus = read_corpus(o);
  const bool bad = report_parse_errors(corpus);
  const auto report = mincon::verify_graphs(corpus.graphs, corpus.codes, mincon::parse_suite(suite),
                                            o.k, mincon::parse_kind(o.mode), o.jobs);
  if (!summary_only) {
    for (const auto& r : report.results) {
      Json j;
      j["graph6"] = r.graph6;
      j["pass"] = r.pass;
      if (o.output == "json") j["detail"] = r.detail;
      std::cout << j.dump() << '\n';
    }
  }
  Json summary = mincon::to_json(report, /*include_results=*/false);
  summary["parse_errors"] = corpus.errors.size();
  std::cout << summary.dump() << '\n';
  if (bad) return kExitUsage;
  return report.failed == 0 ? kExitOk : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity, spectral-radius and extremal-structure tools for "
               "minimally k-(edge)-connected graphs"};
  app.require_subcommand(1);
  CommonOptions o;

  std::string family;
  std::size_t n = 0;
  auto* gen = app.add_subcommand("gen", "Emit a named graph family");
  gen->add_option("--family", family,
                  "complete-bipartite|complete|cycle|path|star|k-appended")
      ->required();
  gen->add_option("--n", n, "Vertex count")->required()->check(CLI::PositiveNumber);
  add_k(gen, o, false);
  add_output(gen, o);

  std::size_t min_degree = 0;
  auto* enumerate = app.add_subcommand("enumerate", "All graphs on n <= 7 vertices, one per class");
  enumerate->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(1, 7));
  enumerate->add_option("--min-degree", min_degree, "Minimum degree filter");

  std::string graph6;
  auto* check = app.add_subcommand("check", "Connectivity and minimality certificate");
  check->add_option("--graph6", graph6, "graph6 string (default: read input)");
  add_k(check, o, true);
  add_mode(check, o);
  add_input(check, o);

  auto* rho = app.add_subcommand("rho", "Spectral radius and Perron vector");
  rho->add_option("--graph6", graph6, "graph6 string (default: read input)");
  rho->add_option("--tol", o.tol, "Residual tolerance")->capture_default_str();
  add_input(rho, o);

  std::string l_text;
  auto* rewire = app.add_subcommand("rewire", "Peel-and-rewire towards K_{k,n-k}");
  rewire->add_option("--graph6", graph6, "graph6 string (default: read input)");
  rewire->add_option("--L", l_text, "Comma-separated k-set (default: top-k Perron coordinates)");
  rewire->add_option("--tol", o.tol, "Residual tolerance")->capture_default_str();
  add_k(rewire, o, true);
  add_input(rewire, o);

  bool summary_only = false;
  auto* scan = app.add_subcommand("scan", "Extremal scan over a graph6 corpus");
  add_k(scan, o, true);
  add_mode(scan, o);
  scan->add_option("--tol", o.tol, "Residual tolerance")->capture_default_str();
  scan->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output(scan, o);
  add_input(scan, o);
  scan->add_flag("--summary-only", summary_only, "Print only the summary object");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a check suite over a graph6 corpus");
  verify->add_option("--suite", suite,
                     "bounds-global|bounds-subgraph|degree-k|forest|heredity|eigen-report|"
                     "decomposition")
      ->required();
  add_k(verify, o, true);
  add_mode(verify, o);
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output(verify, o);
  add_input(verify, o);
  verify->add_flag("--summary-only", summary_only, "Print only the summary object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(o, family, n);
    if (*enumerate) return run_enumerate(n, min_degree);
    if (*check) return run_check(o, graph6);
    if (*rho) return run_rho(o, graph6);
    if (*rewire) return run_rewire(o, graph6, l_text);
    if (*scan) return run_scan(o, summary_only);
    if (*verify) return run_verify(o, suite, summary_only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
