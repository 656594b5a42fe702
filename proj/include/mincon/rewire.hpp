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

#ifndef MINCON_REWIRE_HPP_
#define MINCON_REWIRE_HPP_

// Peel-and-rewire transformation towards K_{k,n-k}.
//
// Given a k-set L, every vertex outside L that is not adjacent to all of L
// (the set U) is peeled off in minimum-degree order and reattached to
// exactly L. The change in sum_{uv in E} x_u x_v under the old Perron
// vector x lower-bounds the change in spectral radius.

#include <cstddef>
#include <span>
#include <vector>

#include "mincon/graph.hpp"
#include "mincon/spectral.hpp"

namespace mincon {

struct CommonPartition {
  VertexSet common;  // vertices outside L adjacent to every vertex of L
  VertexSet rest;    // U = V - (L ∪ common)
};

/// Throws std::invalid_argument if L is empty or over the wrong universe.
CommonPartition partition_common(const Graph& g, const VertexSet& l);

struct PeelStep {
  std::size_t vertex = 0;
  std::size_t into_l = 0;     // d_i: neighbours in L at removal time
  std::size_t into_rest = 0;  // d_i': neighbours in G_i - L
  bool bound_ok = false;      // d_i + d_i' <= 2k
};

/// Repeatedly removes the U-vertex of minimum current degree (lowest index
/// on ties). Bound violations are recorded, not thrown.
std::vector<PeelStep> peel_order(const Graph& g, const VertexSet& l, std::size_t k);

struct RewirePlan {
  VertexSet l;
  VertexSet common;
  VertexSet rest;
  std::vector<PeelStep> steps;
  Graph result;
};

/// Each peeled u_i loses its edges into G_i - L and gains every missing
/// edge to L. Throws std::invalid_argument unless |L| = k.
RewirePlan rewire_to_l(const Graph& g, const VertexSet& l, std::size_t k);

/// The k vertices with the largest coordinates (lowest index on ties).
VertexSet top_coordinates(std::span<const double> x, std::size_t k);

struct RayleighStep {
  std::size_t vertex = 0;
  // x_u (sum_{v in L - N(u)} x_v - sum_{v in N_{G_i-L}(u)} x_v); these sum
  // to `delta`.
  double exact = 0.0;
  // (k - d_i) min_{v in L} x_v - sum of x over the removed neighbours.
  double lower = 0.0;
};

struct RayleighCertificate {
  // sum_{E(new)} x_u x_v - sum_{E(old)} x_u x_v
  double delta = 0.0;
  std::vector<RayleighStep> steps;
  double rayleigh_before = 0.0;
  double rayleigh_after = 0.0;
  double rho_before = 0.0;
  double rho_after = 0.0;
  // delta > 0 and the recomputed radii agree: rho_after > rho_before.
  bool increase_certified = false;
};

/// Throws std::invalid_argument when the graphs differ in order or x has
/// the wrong dimension.
RayleighCertificate certify_rayleigh_increase(const Graph& before, const Graph& after,
                                              std::span<const double> x,
                                              double tol = kDefaultTolerance);

/// Same, with per-step terms taken from `plan` (which must be the plan that
/// produced `plan.result` from `before`).
RayleighCertificate certify_rayleigh_increase(const Graph& before, const RewirePlan& plan,
                                              std::span<const double> x,
                                              double tol = kDefaultTolerance);

/// Coordinate conditions under which every step term is provably positive:
/// x_v >= (1 - 1/(2k)) x_u* on L, x_v < x_u*/(2k) off L, and each peel step
/// has bound_ok and d_i <= k-1.
bool coordinate_preconditions(const RewirePlan& plan, std::span<const double> x, std::size_t k);

}  // namespace mincon

#endif  // MINCON_REWIRE_HPP_
