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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mincon/graph.hpp"
#include "mincon/rewire.hpp"
#include "mincon/spectral.hpp"
#include "test_support.hpp"

namespace mincon {
namespace {

using doctest::Approx;
using testing::bipartite_with_pendant;

// Edge sum over E(after) minus over E(before), computed edge by edge.
double direct_delta(const Graph& before, const Graph& after, const std::vector<double>& x) {
  double d = 0.0;
  for (const auto& [u, v] : after.edges()) d += x[u] * x[v];
  for (const auto& [u, v] : before.edges()) d -= x[u] * x[v];
  return d;
}

TEST_CASE("partition examples") {
  const auto k37 = partition_common(complete_bipartite(3, 10), VertexSet::of(10, {0, 1, 2}));
  CHECK(k37.common == VertexSet::of(10, {3, 4, 5, 6, 7, 8, 9}));
  CHECK(k37.rest.empty());

  const Graph g = bipartite_with_pendant(2, 6);  // pendant 6 hangs off vertex 2
  const auto p = partition_common(g, VertexSet::of(7, {0, 1}));
  CHECK(p.common == VertexSet::of(7, {2, 3, 4, 5}));
  CHECK(p.rest == VertexSet::of(7, {6}));

  const auto c5 = partition_common(cycle_graph(5), VertexSet::of(5, {0}));
  CHECK(c5.common == VertexSet::of(5, {1, 4}));
  CHECK(c5.rest == VertexSet::of(5, {2, 3}));

  CHECK_THROWS_AS(partition_common(cycle_graph(5), VertexSet(5)), std::invalid_argument);
  CHECK_THROWS_AS(partition_common(cycle_graph(5), VertexSet::of(6, {0})), std::invalid_argument);
}

TEST_CASE("peel order examples") {
  CHECK(peel_order(complete_bipartite(3, 10), VertexSet::of(10, {0, 1, 2}), 3).empty());

  const auto pendant = peel_order(bipartite_with_pendant(2, 6), VertexSet::of(7, {0, 1}), 2);
  REQUIRE(pendant.size() == 1);
  CHECK(pendant[0].vertex == 6);
  CHECK(pendant[0].into_l == 0);
  CHECK(pendant[0].into_rest == 1);
  CHECK(pendant[0].bound_ok);

  const auto c5 = peel_order(cycle_graph(5), VertexSet::of(5, {0}), 1);
  REQUIRE(c5.size() == 2);
  CHECK(c5[0].vertex == 2);
  CHECK(c5[0].into_l + c5[0].into_rest == 2);
  CHECK(c5[0].bound_ok);
  CHECK(c5[1].vertex == 3);
}

TEST_CASE("peel steps account for the current degree") {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 4 + rng() % 12;
    const Graph g = testing::random_connected_graph(n, 0.3, rng);
    const std::size_t k = 1 + rng() % 3;
    const VertexSet l = top_coordinates(spectral_radius(g).vector, k);
    VertexSet alive = g.all();
    for (const auto& step : peel_order(g, l, k)) {
      CHECK(step.into_l == g.neighbors(step.vertex).intersection_count(l));
      CHECK(step.into_l <= k - 1);
      CHECK(step.into_l + step.into_rest == g.neighbors(step.vertex).intersection_count(alive));
      CHECK(step.bound_ok == (step.into_l + step.into_rest <= 2 * k));
      alive.erase(step.vertex);
    }
  }
}

TEST_CASE("rewire examples") {
  const Graph k37 = complete_bipartite(3, 10);
  const auto identity = rewire_to_l(k37, VertexSet::of(10, {0, 1, 2}), 3);
  CHECK(identity.result == k37);
  CHECK(identity.rest.empty());

  const Graph g = bipartite_with_pendant(2, 6);
  const auto plan = rewire_to_l(g, VertexSet::of(7, {0, 1}), 2);
  CHECK(plan.result == complete_bipartite(2, 7));
  CHECK(spectral_radius(plan.result).rho == Approx(std::sqrt(10.0)).epsilon(1e-12));

  // L = {0,1}; 2 and 3 see both; 4 and 5 see one L-vertex each and each other.
  const Graph pair = build_graph(6, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 5}, {4, 5}});
  const auto pp = rewire_to_l(pair, VertexSet::of(6, {0, 1}), 2);
  CHECK(pp.rest == VertexSet::of(6, {4, 5}));
  CHECK(pp.result == complete_bipartite(2, 6));
  CHECK_FALSE(pp.result.has_edge(4, 5));

  CHECK_THROWS_AS(rewire_to_l(g, VertexSet::of(7, {0}), 2), std::invalid_argument);
}

TEST_CASE("rewire post-state properties") {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 5 + rng() % 12;
    const Graph g = testing::random_connected_graph(n, 0.25, rng);
    const std::size_t k = 1 + rng() % 3;
    const VertexSet l = top_coordinates(spectral_radius(g).vector, k);
    const auto plan = rewire_to_l(g, l, k);

    CHECK(partition_common(plan.result, l).rest.empty());
    CHECK(rewire_to_l(plan.result, l, k).result == plan.result);
    plan.rest.for_each([&](std::size_t u) { CHECK(plan.result.neighbors(u) == l); });
    const VertexSet kept = l | plan.common;
    CHECK(plan.result.edges_within(kept) == g.edges_within(kept));
    CHECK((plan.l | plan.common | plan.rest) == g.all());
    CHECK((plan.l & plan.common).empty());
    CHECK((plan.common & plan.rest).empty());
  }
}

TEST_CASE("rayleigh certificate examples") {
  const Graph k37 = complete_bipartite(3, 10);
  const auto x37 = spectral_radius(k37).vector;
  const auto id = certify_rayleigh_increase(k37, k37, x37);
  CHECK(id.delta == 0.0);
  CHECK_FALSE(id.increase_certified);

  const Graph g = bipartite_with_pendant(2, 6);
  const auto perron = spectral_radius(g);
  const auto plan = rewire_to_l(g, VertexSet::of(7, {0, 1}), 2);
  const auto cert = certify_rayleigh_increase(g, plan, perron.vector);
  CHECK(cert.delta > 0.0);
  CHECK(cert.rho_after == Approx(std::sqrt(10.0)).epsilon(1e-12));
  CHECK(cert.rho_after > cert.rho_before);
  CHECK(cert.increase_certified);
  CHECK(cert.rayleigh_before == Approx(perron.rho).epsilon(1e-10));
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps[0].exact == Approx(cert.delta).epsilon(1e-12));

  const auto drop = certify_rayleigh_increase(g, without_edge(g, 0, 2), perron.vector);
  CHECK(drop.delta < 0.0);
  CHECK(drop.delta == Approx(-perron.vector[0] * perron.vector[2]));

  CHECK_THROWS_AS(certify_rayleigh_increase(g, k37, perron.vector), std::invalid_argument);
  CHECK_THROWS_AS(certify_rayleigh_increase(g, g, x37), std::invalid_argument);
}

TEST_CASE("step terms sum to the edge-sum difference") {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 5 + rng() % 12;
    const Graph g = testing::random_connected_graph(n, 0.25, rng);
    const std::size_t k = 2 + rng() % 2;
    const auto perron = spectral_radius(g);
    const auto plan = rewire_to_l(g, top_coordinates(perron.vector, k), k);
    const auto cert = certify_rayleigh_increase(g, plan, perron.vector);
    double sum = 0.0;
    for (const auto& s : cert.steps) sum += s.exact;
    CHECK(sum == Approx(cert.delta).epsilon(1e-9));
    CHECK(cert.delta == Approx(direct_delta(g, plan.result, perron.vector)).epsilon(1e-9));
    CHECK(cert.steps.size() == plan.steps.size());
    if (cert.delta > 1e-12) CHECK(cert.rho_after > cert.rho_before);
  }
}

TEST_CASE("top coordinates") {
  const std::vector<double> x = {0.2, 1.0, 0.5, 1.0, 0.1};
  CHECK(top_coordinates(x, 2) == VertexSet::of(5, {1, 3}));
  CHECK(top_coordinates(x, 3) == VertexSet::of(5, {1, 2, 3}));
}

}  // namespace
}  // namespace mincon
