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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mincon/canonical.hpp"
#include "mincon/connectivity.hpp"
#include "mincon/graph.hpp"
#include "mincon/graph6.hpp"
#include "mincon/report_json.hpp"
#include "mincon/scan.hpp"
#include "mincon/spectral.hpp"

namespace mincon {
namespace {

using doctest::Approx;

// Hub 0 joined to every vertex of the cycle 1..m.
Graph wheel(std::size_t m) {
  Graph g(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % m + 1);
  }
  return g;
}

std::string dump_scan(const ScanResult& r) {
  std::string out;
  for (const auto& rec : r.records) out += to_json(rec).dump() + "\n";
  return out + to_json(r.report).dump();
}

TEST_CASE("scan picks K_{2,4} at n = 6") {
  const auto graphs = enumerate_graphs(6);
  const auto result = scan_graphs(graphs, {}, 2, Kind::vertex);
  const auto& rep = result.report;
  CHECK(rep.inputs == 156);
  REQUIRE(rep.argmax_rho.has_value());
  CHECK(rep.argmax_rho->graph6 == canonical_code(complete_bipartite(2, 6)));
  CHECK(rep.argmax_rho->rho == Approx(std::sqrt(8.0)).epsilon(1e-12));
  CHECK(rep.near_ties.empty());
  CHECK(rep.matches_complete_bipartite);
}

TEST_CASE("scan argmax is the Jacobi maximum over the population") {
  for (std::size_t n = 4; n <= 7; ++n) {
    const auto graphs = enumerate_graphs(n);
    for (std::size_t k = 2; k <= 3; ++k) {
      for (Kind mode : {Kind::vertex, Kind::edge}) {
        const auto result = scan_graphs(graphs, {}, k, mode);
        std::size_t population = 0;
        double best = -1.0;
        for (const auto& g : graphs) {
          if (!is_minimally_connected(g, k, mode)) continue;
          ++population;
          best = std::max(best, dense_spectrum(g).max());
        }
        CHECK(result.report.population == population);
        if (population > 0) {
          REQUIRE(result.report.argmax_rho.has_value());
          CHECK(std::abs(result.report.argmax_rho->rho - best) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("at n = 6 the wheel beats K_{3,3} among minimally 3-connected graphs") {
  REQUIRE(is_minimally_connected(wheel(5), 3, Kind::vertex));
  const auto result = scan_graphs(enumerate_graphs(6), {}, 3, Kind::vertex);
  REQUIRE(result.report.argmax_rho.has_value());
  CHECK(result.report.argmax_rho->graph6 == canonical_code(wheel(5)));
  CHECK(result.report.argmax_rho->rho == Approx(1.0 + std::sqrt(6.0)).epsilon(1e-12));
  CHECK_FALSE(result.report.matches_complete_bipartite);
}

TEST_CASE("empty population") {
  const auto result = scan_graphs(enumerate_graphs(5), {}, 5, Kind::vertex);
  CHECK(result.report.population == 0);
  CHECK_FALSE(result.report.argmax_rho.has_value());
  const Json j = to_json(result.report);
  CHECK(j["argmax_rho"].is_null());
  CHECK(j["population"] == 0);
}

TEST_CASE("scan output does not depend on the job count") {
  const auto graphs = enumerate_graphs(7);
  const std::string one = dump_scan(scan_graphs(graphs, {}, 2, Kind::edge, 1));
  CHECK(dump_scan(scan_graphs(graphs, {}, 2, Kind::edge, 3)) == one);
  CHECK(dump_scan(scan_graphs(graphs, {}, 2, Kind::edge, 8)) == one);

  const auto v1 = verify_graphs(graphs, {}, Suite::bounds_global, 2, Kind::vertex, 1);
  const auto v4 = verify_graphs(graphs, {}, Suite::bounds_global, 2, Kind::vertex, 4);
  CHECK(to_json(v1).dump() == to_json(v4).dump());
}

TEST_CASE("scan records") {
  const std::vector<Graph> graphs = {complete_bipartite(2, 6), cycle_graph(6), path_graph(6)};
  const auto result = scan_graphs(graphs, {}, 2, Kind::vertex);
  REQUIRE(result.records.size() == 3);
  CHECK(result.records[0].minimal);
  CHECK(result.records[0].kappa == 2u);
  CHECK(result.records[0].kappa_prime == 2);
  CHECK(result.records[0].degree_k_count == 4);
  CHECK(result.records[1].rho.has_value());
  CHECK_FALSE(result.records[2].minimal);
  CHECK_FALSE(result.records[2].rho.has_value());
  CHECK(result.report.population == 2);

  const std::vector<Graph> mixed = {cycle_graph(5), cycle_graph(6)};
  CHECK_THROWS_AS(scan_graphs(mixed, {}, 2, Kind::vertex), std::invalid_argument);
  CHECK_THROWS_AS(scan_graphs(graphs, {}, 0, Kind::vertex), std::invalid_argument);
}

TEST_CASE("scan above the canonical cap keys records by input text") {
  const Graph g = complete_bipartite(3, 12);
  const std::vector<Graph> graphs = {g};
  const std::vector<std::string> codes = {encode_graph6(g)};
  const auto result = scan_graphs(graphs, codes, 3, Kind::edge);
  CHECK(result.records[0].graph6 == codes[0]);
  CHECK(result.report.matches_complete_bipartite);
}

TEST_CASE("verify suites on small corpora") {
  std::vector<Graph> corpus;
  for (std::size_t n = 2; n <= 7; ++n)
    for (auto& g : enumerate_graphs(n)) corpus.push_back(std::move(g));

  const auto degree = verify_graphs(corpus, {}, Suite::degree_k, 2, Kind::edge);
  CHECK(degree.checked > 0);
  CHECK(degree.failed == 0);
  for (const auto& r : degree.results) {
    CHECK(r.detail[0]["bound_id"] == "lick-degree-k");
    CHECK(r.detail[0]["rhs"].get<int>() >= 3);
  }

  CHECK(verify_graphs(corpus, {}, Suite::decomposition, 2, Kind::edge).failed == 0);
  CHECK(verify_graphs(corpus, {}, Suite::forest, 2, Kind::vertex).failed == 0);
  CHECK(verify_graphs(corpus, {}, Suite::heredity, 2, Kind::vertex).failed == 0);
  CHECK(verify_graphs(corpus, {}, Suite::eigen_report, 2, Kind::vertex).failed == 0);
}

TEST_CASE("verify reports failures") {
  // Not minimal, so the forest hypothesis fails; verify_one runs regardless
  // of the minimality filter.
  const Graph k4_pendant = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  CHECK_FALSE(verify_one(k4_pendant, Suite::forest, 1, Kind::vertex).pass);
  const std::vector<Graph> corpus = {k4_pendant};
  const auto report = verify_graphs(corpus, {}, Suite::forest, 1, Kind::vertex);
  CHECK(report.checked == 0);  // filtered out before the check runs
  CHECK(report.failed == 0);
}

TEST_CASE("suite names") {
  for (Suite s : {Suite::bounds_global, Suite::bounds_subgraph, Suite::degree_k, Suite::forest,
                  Suite::heredity, Suite::eigen_report, Suite::decomposition})
    CHECK(parse_suite(to_string(s)) == s);
  CHECK_THROWS_AS(parse_suite("bogus"), std::invalid_argument);
}

}  // namespace
}  // namespace mincon
