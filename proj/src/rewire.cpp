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

#include "mincon/rewire.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mincon {

CommonPartition partition_common(const Graph& g, const VertexSet& l) {
  if (l.universe() != g.order())
    throw std::invalid_argument("L is not a vertex set of this graph");
  if (l.empty()) throw std::invalid_argument("L must be nonempty");
  CommonPartition p{VertexSet(g.order()), VertexSet(g.order())};
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (l.contains(v)) continue;
    (l.is_subset_of(g.neighbors(v)) ? p.common : p.rest).insert(v);
  }
  return p;
}

std::vector<PeelStep> peel_order(const Graph& g, const VertexSet& l, std::size_t k) {
  VertexSet pending = partition_common(g, l).rest;
  VertexSet alive = g.all();
  std::vector<PeelStep> steps;
  while (!pending.empty()) {
    std::size_t pick = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    pending.for_each([&](std::size_t u) {
      const std::size_t d = g.neighbors(u).intersection_count(alive);
      if (d < best) {
        best = d;
        pick = u;
      }
    });
    PeelStep step;
    step.vertex = pick;
    step.into_l = g.neighbors(pick).intersection_count(l);
    step.into_rest = best - step.into_l;
    step.bound_ok = best <= 2 * k;
    steps.push_back(step);
    pending.erase(pick);
    alive.erase(pick);
  }
  return steps;
}

RewirePlan rewire_to_l(const Graph& g, const VertexSet& l, std::size_t k) {
  if (l.universe() != g.order() || l.count() != k)
    throw std::invalid_argument("rewire_to_l requires |L| = k");
  const CommonPartition part = partition_common(g, l);
  RewirePlan plan{l, part.common, part.rest, peel_order(g, l, k), g};
  VertexSet alive = g.all();
  for (const PeelStep& step : plan.steps) {
    const std::size_t u = step.vertex;
    const VertexSet drop = (g.neighbors(u) & alive) - l;
    drop.for_each([&](std::size_t w) { plan.result.remove_edge(u, w); });
    l.for_each([&](std::size_t v) { plan.result.add_edge(u, v); });
    alive.erase(u);
  }
  return plan;
}

VertexSet top_coordinates(std::span<const double> x, std::size_t k) {
  if (k > x.size()) throw std::invalid_argument("k exceeds the vector dimension");
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  VertexSet out(x.size());
  for (std::size_t i = 0; i < k; ++i) out.insert(idx[i]);
  return out;
}

namespace {

RayleighCertificate base_certificate(const Graph& before, const Graph& after,
                                     std::span<const double> x, double tol) {
  if (before.order() != after.order())
    throw std::invalid_argument("graphs have different vertex sets");
  if (x.size() != before.order())
    throw std::invalid_argument("vector dimension does not match vertex count");
  RayleighCertificate c;
  c.delta = edge_product_sum(after, x) - edge_product_sum(before, x);
  c.rayleigh_before = rayleigh_quotient(before, x);
  c.rayleigh_after = rayleigh_quotient(after, x);
  c.rho_before = spectral_radius_any(before, tol);
  c.rho_after = spectral_radius_any(after, tol);
  c.increase_certified = c.delta > 0.0 && c.rho_after > c.rho_before;
  return c;
}

}  // namespace

RayleighCertificate certify_rayleigh_increase(const Graph& before, const Graph& after,
                                              std::span<const double> x, double tol) {
  return base_certificate(before, after, x, tol);
}

RayleighCertificate certify_rayleigh_increase(const Graph& before, const RewirePlan& plan,
                                              std::span<const double> x, double tol) {
  RayleighCertificate c = base_certificate(before, plan.result, x, tol);
  double min_l = std::numeric_limits<double>::infinity();
  plan.l.for_each([&](std::size_t v) { min_l = std::min(min_l, x[v]); });
  VertexSet alive = before.all();
  for (const PeelStep& step : plan.steps) {
    const std::size_t u = step.vertex;
    double gained = 0.0;
    (plan.l - before.neighbors(u)).for_each([&](std::size_t v) { gained += x[v]; });
    double lost = 0.0;
    ((before.neighbors(u) & alive) - plan.l).for_each([&](std::size_t v) { lost += x[v]; });
    const double missing = static_cast<double>(plan.l.count() - step.into_l);
    c.steps.push_back({u, x[u] * (gained - lost), missing * min_l - lost});
    alive.erase(u);
  }
  return c;
}

bool coordinate_preconditions(const RewirePlan& plan, std::span<const double> x, std::size_t k) {
  if (x.size() != plan.result.order()) return false;
  const double top = *std::max_element(x.begin(), x.end());
  const double kd = static_cast<double>(k);
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (plan.l.contains(v)) {
      if (x[v] < (1.0 - 1.0 / (2.0 * kd)) * top) return false;
    } else if (!(x[v] < top / (2.0 * kd))) {
      return false;
    }
  }
  return std::all_of(plan.steps.begin(), plan.steps.end(), [&](const PeelStep& s) {
    return s.bound_ok && s.into_l + 1 <= k;
  });
}

}  // namespace mincon
