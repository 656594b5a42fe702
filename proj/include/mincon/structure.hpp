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

#ifndef MINCON_STRUCTURE_HPP_
#define MINCON_STRUCTURE_HPP_

// Checkers for the edge bounds and structural facts known for minimally
// k-(edge)-connected graphs, plus the Perron level-set report.
//
// Checkers never decide minimality themselves: callers certify first, and
// the checkers report whatever the numbers say.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincon/graph.hpp"
#include "mincon/spectral.hpp"

namespace mincon {

// Stable identifiers used in reports.
namespace bound_id {
inline constexpr const char* kSubgraphLinear = "thm1.0-a";    // e(H) <= k(|H|-1)
inline constexpr const char* kSubgraphBipartite = "thm1.0-b"; // e(H) <= k(|H|-k)
inline constexpr const char* kMaderKn = "mader-kn";           // e <= kn - C(k+1,2)
inline constexpr const char* kMaderKnk = "mader-knk";         // e <= k(n-k), n >= 3k-2
inline constexpr const char* kCai = "cai";                    // e <= floor((n+k)^2/8)
inline constexpr const char* kLemma23 = "lemma2.3";           // e <= k(n-k) + C(k,2)
inline constexpr const char* kDegreeK = "lick-degree-k";      // >= k+1 vertices of degree k
inline constexpr const char* kForest = "lemma2.2-forest";     // G - S is a forest
}  // namespace bound_id

/// One evaluated inequality lhs <= rhs.
///
/// `applicable` is false when the inequality's hypothesis does not hold
/// for this input; lhs/rhs/holds are still filled in for inspection.
/// `extremal_equality` is set only when the bound is one whose equality case
/// is K_{k,|H|-k}, and records whether every tight witness is that graph.
struct BoundReport {
  std::string bound_id;
  std::size_t order = 0;  // |H| for subgraph bounds, n otherwise
  bool applicable = true;
  bool holds = true;
  bool tight = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  VertexSet witness;
  std::optional<bool> extremal_equality;
  std::size_t tight_count = 0;  // subgraph sweeps: number of tight subsets
  std::string note;
};

inline constexpr std::size_t kFullSubsetSweepMax = 20;
inline constexpr std::size_t kSampledSubsets = 1'000'000;
inline constexpr std::uint64_t kSubsetSampleSeed = 0x6d696e636f6e;

/// Order threshold for e(H) <= k(|H|-k): k(k+5)/2 in edge mode, 5k-4 in
/// vertex mode.
std::size_t bipartite_bound_threshold(std::size_t k, Kind mode);

/// Sweeps induced subgraphs H = G[S], |S| >= 2 (all subsets up to 20
/// vertices, seeded sampling above), and returns one report per bound per
/// subgraph order: thm1.0-a for every order, thm1.0-b from the threshold
/// on. Each report carries the worst subset of that order as its witness.
std::vector<BoundReport> check_subgraph_bounds(const Graph& g, std::size_t k, Kind mode);

/// Whole-graph bounds for the given mode: mader-kn, mader-knk and cai in
/// vertex mode; mader-knk in edge mode; lemma2.3 in both.
std::vector<BoundReport> check_global_bounds(const Graph& g, std::size_t k, Kind mode);

/// |{v : d(v) = k}|.
std::size_t degree_k_census(const Graph& g, std::size_t k);
/// census >= k+1, as a report (lhs = k+1, rhs = census).
BoundReport degree_k_report(const Graph& g, std::size_t k);

struct ForestCheck {
  bool is_forest = true;
  VertexSet degree_k_vertices;
  std::vector<std::size_t> cycle;  // closed walk v0..vm with vm adjacent to v0
};

/// S = vertices of degree k; checks that G - S is empty or acyclic.
ForestCheck forest_check(const Graph& g, std::size_t k);
BoundReport forest_report(const Graph& g, std::size_t k);

struct LevelSets {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma0 = 0.0;
  std::size_t ustar = 0;
  VertexSet l_alpha;   // x_v >  alpha  * x_u*
  VertexSet l_beta;    // x_v >  beta   * x_u*
  VertexSet l_gamma0;  // x_v >= gamma0 * x_u*

  bool nested() const {
    return l_gamma0.is_subset_of(l_beta) && l_beta.is_subset_of(l_alpha);
  }
};

/// alpha = 1/(24k(k+1)), beta = 5 alpha / 3, gamma0 = 1/(2k). Thresholds
/// are compared exactly, with no epsilon slack. Requires k >= 2.
LevelSets level_sets(const Graph& g, const PerronResult& perron, std::size_t k);

/// Hypotheses and conclusions of the high-coordinate-set theorem, computed
/// independently. No implication between them is asserted.
struct EigenStructureReport {
  std::size_t n = 0;
  std::size_t k = 0;
  double rho = 0.0;
  double n_threshold = 0.0;  // 18k / alpha^2
  bool hyp_n_ok = false;     // n >= 18k/alpha^2
  bool hyp_rho_ok = false;   // rho^2 >= k(n-k)
  VertexSet l;               // L_{gamma0}
  std::size_t size_l = 0;
  double min_coord = 0.0;    // min_{v in L} x_v / x_u*
  std::size_t min_degree = 0;
  bool coord_ok = false;     // min_coord >= 1 - 1/(2k)
  bool degree_ok = false;    // min degree over L >= (1 - 2/(3k)) n
  LevelSets levels;
};

EigenStructureReport eigen_structure_report(const Graph& g, std::size_t k,
                                            double tol = kDefaultTolerance);
EigenStructureReport eigen_structure_report(const Graph& g, const PerronResult& perron,
                                            std::size_t k);

}  // namespace mincon

#endif  // MINCON_STRUCTURE_HPP_
