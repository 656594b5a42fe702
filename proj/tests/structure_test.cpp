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
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "mincon/canonical.hpp"
#include "mincon/connectivity.hpp"
#include "mincon/graph.hpp"
#include "mincon/spectral.hpp"
#include "mincon/structure.hpp"
#include "test_support.hpp"

namespace mincon {
namespace {

std::optional<BoundReport> find_report(const std::vector<BoundReport>& reports,
                                       const std::string& id, std::size_t order) {
  for (const auto& r : reports)
    if (r.bound_id == id && r.order == order) return r;
  return std::nullopt;
}

std::optional<BoundReport> find_report(const std::vector<BoundReport>& reports,
                                       const std::string& id) {
  for (const auto& r : reports)
    if (r.bound_id == id) return r;
  return std::nullopt;
}

// Maximum e(H) over induced subgraphs of each order, by direct sweep.
std::vector<std::int64_t> max_induced_edges(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> best(n + 1, -1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto s = VertexSet::from_mask(n, mask);
    const auto h = s.count();
    best[h] = std::max(best[h], static_cast<std::int64_t>(g.edges_within(s)));
  }
  return best;
}

TEST_CASE("bipartite bound thresholds") {
  CHECK(bipartite_bound_threshold(2, Kind::edge) == 7);
  CHECK(bipartite_bound_threshold(3, Kind::edge) == 12);
  CHECK(bipartite_bound_threshold(2, Kind::vertex) == 6);
  CHECK(bipartite_bound_threshold(3, Kind::vertex) == 11);
}

TEST_CASE("subgraph bounds on K_{2,5}") {
  const auto reports = check_subgraph_bounds(complete_bipartite(2, 7), 2, Kind::vertex);
  const auto top = find_report(reports, bound_id::kSubgraphBipartite, 7);
  REQUIRE(top.has_value());
  CHECK(top->lhs == 10);
  CHECK(top->rhs == 10);
  CHECK(top->tight);
  CHECK(top->witness.count() == 7);
  CHECK(top->extremal_equality == true);
  for (const auto& r : reports) CHECK(r.holds);
}

TEST_CASE("subgraph bounds on C_6 in edge mode") {
  const auto reports = check_subgraph_bounds(cycle_graph(6), 2, Kind::edge);
  for (const auto& r : reports) {
    CHECK(r.holds);
    CHECK(r.bound_id == bound_id::kSubgraphLinear);
    CHECK(r.order <= 6);
  }
  CHECK(reports.size() == 5);  // orders 2..6
}

TEST_CASE("subgraph bounds on K_{2,6}") {
  const Graph g = complete_bipartite(2, 8);
  const auto reports = check_subgraph_bounds(g, 2, Kind::vertex);
  const auto seven = find_report(reports, bound_id::kSubgraphBipartite, 7);
  REQUIRE(seven.has_value());
  CHECK(seven->lhs == 10);
  CHECK(seven->tight);
  CHECK(seven->witness.contains(0));
  CHECK(seven->witness.contains(1));
  CHECK(is_complete_bipartite(induced_subgraph(g, seven->witness), 2));
  CHECK(seven->extremal_equality == true);
  CHECK(seven->tight_count == 6);  // drop any one of six right vertices
}

TEST_CASE("subgraph bound lhs is the maximum induced edge count") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 40; ++iter) {
    const Graph g = testing::random_graph(3 + rng() % 8, 0.5, rng);
    const auto best = max_induced_edges(g);
    for (const auto& r : check_subgraph_bounds(g, 2, Kind::vertex)) {
      CHECK(r.lhs == best[r.order]);
      CHECK(static_cast<std::int64_t>(g.edges_within(r.witness)) == r.lhs);
      CHECK(r.witness.count() == r.order);
    }
  }
}

TEST_CASE("k = 1 is flagged") {
  const auto reports = check_subgraph_bounds(path_graph(4), 1, Kind::edge);
  REQUIRE_FALSE(reports.empty());
  CHECK_FALSE(reports.front().note.empty());
}

TEST_CASE("global bounds examples") {
  const auto k25 = check_global_bounds(complete_bipartite(2, 7), 2, Kind::vertex);
  const auto kn = find_report(k25, bound_id::kMaderKn);
  REQUIRE(kn.has_value());
  CHECK(kn->lhs == 10);
  CHECK(kn->rhs == 11);
  CHECK(kn->holds);
  const auto knk = find_report(k25, bound_id::kMaderKnk);
  REQUIRE(knk.has_value());
  CHECK(knk->applicable);
  CHECK(knk->tight);
  CHECK(knk->extremal_equality == true);

  const auto c7 = check_global_bounds(cycle_graph(7), 2, Kind::edge);
  const auto c7knk = find_report(c7, bound_id::kMaderKnk);
  REQUIRE(c7knk.has_value());
  CHECK(c7knk->lhs == 7);
  CHECK(c7knk->rhs == 10);
  CHECK(c7knk->holds);
  CHECK_FALSE(c7knk->tight);

  REQUIRE(certify_minimality(complete_graph(5), 4, Kind::vertex).valid());
  const auto k5 = check_global_bounds(complete_graph(5), 4, Kind::vertex);
  const auto cai = find_report(k5, bound_id::kCai);
  REQUIRE(cai.has_value());
  CHECK(cai->applicable);
  CHECK(cai->lhs == 10);
  CHECK(cai->rhs == 10);
  CHECK(cai->tight);
  CHECK_FALSE(find_report(k5, bound_id::kMaderKnk)->applicable);
}

TEST_CASE("lemma bound uses the (k+1)-edge-connected subgraph test") {
  const auto c6 = find_report(check_global_bounds(cycle_graph(6), 2, Kind::edge),
                              bound_id::kLemma23);
  REQUIRE(c6.has_value());
  CHECK(c6->applicable);
  CHECK(c6->rhs == 2 * 4 + 1);
  const auto k5 = find_report(check_global_bounds(complete_graph(5), 2, Kind::edge),
                              bound_id::kLemma23);
  REQUIRE(k5.has_value());
  CHECK_FALSE(k5->applicable);
  CHECK(k5->witness.count() >= 2);
}

TEST_CASE("degree-k census") {
  CHECK(degree_k_census(cycle_graph(6), 2) == 6);
  CHECK(degree_k_census(complete_bipartite(2, 7), 2) == 5);
  CHECK(degree_k_census(complete_bipartite(3, 10), 3) == 7);
  const auto r = degree_k_report(complete_bipartite(3, 10), 3);
  CHECK(r.bound_id == bound_id::kDegreeK);
  CHECK(r.holds);
  CHECK(r.lhs == 4);
  CHECK(r.rhs == 7);
}

TEST_CASE("forest check") {
  const auto k25 = forest_check(complete_bipartite(2, 7), 2);
  CHECK(k25.is_forest);
  CHECK(k25.degree_k_vertices.count() == 5);
  CHECK(forest_check(cycle_graph(9), 2).is_forest);
  CHECK(forest_check(complete_graph(5), 4).is_forest);

  // K_4 plus a pendant vertex: only the pendant has degree 1, so K_4 survives.
  const Graph g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const auto bad = forest_check(g, 1);
  CHECK_FALSE(bad.is_forest);
  REQUIRE(bad.cycle.size() >= 3);
  for (std::size_t i = 0; i < bad.cycle.size(); ++i) {
    const std::size_t u = bad.cycle[i];
    const std::size_t v = bad.cycle[(i + 1) % bad.cycle.size()];
    CHECK(g.has_edge(u, v));
    CHECK_FALSE(bad.degree_k_vertices.contains(u));
  }
  CHECK_FALSE(forest_report(g, 1).holds);
}

TEST_CASE("minimal corpora pass the structural checks") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (is_minimally_connected(g, 2, Kind::edge)) {
        CHECK(degree_k_census(g, 2) >= 3);
        for (const auto& r : check_global_bounds(g, 2, Kind::edge))
          if (r.applicable) CHECK(r.holds);
      }
      if (n >= 3 && is_minimally_connected(g, 2, Kind::vertex)) {
        CHECK(forest_check(g, 2).is_forest);
        for (const auto& r : check_global_bounds(g, 2, Kind::vertex))
          if (r.applicable) CHECK(r.holds);
        for (const auto& r : check_subgraph_bounds(g, 2, Kind::vertex))
          if (r.bound_id == bound_id::kSubgraphLinear) CHECK(r.holds);
      }
    }
  }
}

TEST_CASE("level sets on complete bipartite graphs") {
  const Graph k312 = complete_bipartite(3, 15);
  const auto p = spectral_radius(k312);
  CHECK(p.vector[5] == doctest::Approx(0.5).epsilon(1e-10));
  const auto l = level_sets(k312, p, 3);
  CHECK(l.alpha == doctest::Approx(1.0 / 288.0));
  CHECK(l.beta == doctest::Approx(5.0 / 864.0));
  CHECK(l.gamma0 == doctest::Approx(1.0 / 6.0));
  CHECK(l.l_gamma0.count() == 15);
  CHECK(l.nested());

  const Graph n100 = complete_bipartite(3, 100);
  CHECK(level_sets(n100, spectral_radius(n100), 3).l_gamma0.count() == 100);
  const Graph n400 = complete_bipartite(3, 400);
  const auto l400 = level_sets(n400, spectral_radius(n400), 3);
  CHECK(l400.l_gamma0 == VertexSet::of(400, {0, 1, 2}));
  CHECK(l400.nested());
  CHECK_THROWS(level_sets(n100, spectral_radius(n100), 1));
}

TEST_CASE("level sets always nest") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = testing::random_connected_graph(2 + rng() % 30, 0.1, rng);
    CHECK(level_sets(g, spectral_radius(g), 2 + rng() % 4).nested());
  }
}

TEST_CASE("eigen structure report") {
  const auto big = eigen_structure_report(complete_bipartite(3, 500), 3);
  CHECK(big.size_l == 3);
  CHECK(big.coord_ok);
  CHECK(big.degree_ok);
  CHECK(big.min_degree == 497);
  CHECK_FALSE(big.hyp_n_ok);
  CHECK(big.n_threshold == doctest::Approx(18.0 * 3 * 288 * 288));

  const auto k28 = eigen_structure_report(complete_bipartite(2, 10), 2);
  CHECK(k28.size_l == 10);

  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 30; ++iter) {
    const Graph g = testing::random_connected_graph(3 + rng() % 12, 0.3, rng);
    const std::size_t k = 2 + rng() % 2;
    const auto r = eigen_structure_report(g, k);
    CHECK(r.hyp_rho_ok == (r.rho * r.rho >= static_cast<double>(k * (g.order() - k))));
  }
}

}  // namespace
}  // namespace mincon
