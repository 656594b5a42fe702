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

#include "mincon/structure.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "mincon/connectivity.hpp"

namespace mincon {

namespace {

using i64 = std::int64_t;

i64 as_signed(std::size_t v) { return static_cast<i64>(v); }

// Mask-based test for G[S] ≅ K_{k,|S|-k}, assuming e(S) = k(|S|-k) has
// already been verified. Requires order <= 64.
bool mask_is_complete_bipartite(const Graph& g, std::uint64_t mask, std::size_t k) {
  const auto h = static_cast<std::size_t>(std::popcount(mask));
  if (k < 1 || k >= h) return false;
  std::uint64_t side[2] = {mask & (~mask + 1), 0};
  std::uint64_t visited = side[0];
  std::uint64_t frontier = side[0];
  int parity = 0;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1)
      next |= g.row(static_cast<std::size_t>(std::countr_zero(f)));
    next &= mask & ~visited;
    parity ^= 1;
    side[parity] |= next;
    visited |= next;
    frontier = next;
  }
  if (visited != mask) return false;
  for (int p = 0; p < 2; ++p)
    for (std::uint64_t f = side[p]; f != 0; f &= f - 1)
      if ((g.row(static_cast<std::size_t>(std::countr_zero(f))) & side[p]) != 0) return false;
  const auto a = static_cast<std::size_t>(std::popcount(side[0]));
  return a == k || a == h - k;
}

struct OrderTally {
  bool seen = false;
  i64 worst_slack = std::numeric_limits<i64>::min();  // lhs - rhs
  i64 lhs = 0;
  VertexSet witness;
  std::size_t tight = 0;
  bool all_tight_extremal = true;
};

void tally(OrderTally& t, i64 lhs, i64 rhs, const VertexSet& s) {
  t.seen = true;
  if (lhs - rhs > t.worst_slack) {
    t.worst_slack = lhs - rhs;
    t.lhs = lhs;
    t.witness = s;
  }
}

}  // namespace

std::size_t bipartite_bound_threshold(std::size_t k, Kind mode) {
  if (mode == Kind::edge) return k * (k + 5) / 2;
  return 5 * k >= 4 ? 5 * k - 4 : 0;
}

std::vector<BoundReport> check_subgraph_bounds(const Graph& g, std::size_t k, Kind mode) {
  const std::size_t n = g.order();
  const i64 kk = as_signed(k);
  const std::size_t threshold = bipartite_bound_threshold(k, mode);
  std::vector<OrderTally> linear(n + 1);
  std::vector<OrderTally> bipartite(n + 1);

  auto visit = [&](const VertexSet& s, std::size_t h, i64 e, std::uint64_t mask) {
    const i64 hh = as_signed(h);
    tally(linear[h], e, kk * (hh - 1), s);
    if (h >= threshold) {
      const i64 rhs = kk * (hh - kk);
      tally(bipartite[h], e, rhs, s);
      if (e == rhs) {
        ++bipartite[h].tight;
        const bool extremal = n <= 64
                                  ? mask_is_complete_bipartite(g, mask, k)
                                  : is_complete_bipartite(induced_subgraph(g, s), k);
        bipartite[h].all_tight_extremal = bipartite[h].all_tight_extremal && extremal;
      }
    }
  };

  if (n <= kFullSubsetSweepMax) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 3; mask < limit; ++mask) {
      const auto h = static_cast<std::size_t>(std::popcount(mask));
      if (h < 2) continue;
      i64 twice = 0;
      for (std::uint64_t f = mask; f != 0; f &= f - 1)
        twice += std::popcount(g.row(static_cast<std::size_t>(std::countr_zero(f))) & mask);
      // Witness sets are only materialised when they can matter.
      const i64 e = twice / 2;
      const i64 hh = as_signed(h);
      const bool improves_linear = e - kk * (hh - 1) > linear[h].worst_slack;
      const bool in_bipartite = h >= threshold;
      if (!improves_linear && !in_bipartite) continue;
      visit(VertexSet::from_mask(n, mask), h, e, mask);
    }
  } else {
    std::mt19937_64 rng(kSubsetSampleSeed);
    for (std::size_t sample = 0; sample < kSampledSubsets; ++sample) {
      VertexSet s(n);
      std::uint64_t bits = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (v % 64 == 0) bits = rng();
        if ((bits >> (v % 64)) & 1U) s.insert(v);
      }
      const std::size_t h = s.count();
      if (h < 2) continue;
      visit(s, h, as_signed(g.edges_within(s)), n <= 64 ? s.mask() : 0);
    }
  }

  std::vector<BoundReport> out;
  auto emit = [&](const char* id, std::size_t h, const OrderTally& t, i64 rhs, bool bipartite_bound) {
    BoundReport r;
    r.bound_id = id;
    r.order = h;
    r.lhs = t.lhs;
    r.rhs = rhs;
    r.holds = r.lhs <= r.rhs;
    r.tight = r.lhs == r.rhs;
    r.witness = t.witness;
    if (bipartite_bound) {
      r.tight_count = t.tight;
      if (t.tight > 0) r.extremal_equality = t.all_tight_extremal;
    }
    if (k == 1) r.note = "k = 1: minimally 1-connected graphs are trees";
    out.push_back(std::move(r));
  };
  for (std::size_t h = 2; h <= n; ++h) {
    const i64 hh = as_signed(h);
    if (linear[h].seen) emit(bound_id::kSubgraphLinear, h, linear[h], kk * (hh - 1), false);
  }
  for (std::size_t h = std::max<std::size_t>(threshold, 2); h <= n; ++h) {
    const i64 hh = as_signed(h);
    if (bipartite[h].seen)
      emit(bound_id::kSubgraphBipartite, h, bipartite[h], kk * (hh - kk), true);
  }
  return out;
}

std::vector<BoundReport> check_global_bounds(const Graph& g, std::size_t k, Kind mode) {
  const std::size_t n = g.order();
  const i64 nn = as_signed(n);
  const i64 kk = as_signed(k);
  const i64 e = as_signed(g.size());
  std::vector<BoundReport> out;

  auto make = [&](const char* id, bool applicable, i64 rhs) {
    BoundReport r;
    r.bound_id = id;
    r.order = n;
    r.applicable = applicable;
    r.lhs = e;
    r.rhs = rhs;
    r.holds = r.lhs <= r.rhs;
    r.tight = r.lhs == r.rhs;
    r.witness = g.all();
    return r;
  };

  if (mode == Kind::vertex) {
    out.push_back(make(bound_id::kMaderKn, n >= k + 1, kk * nn - kk * (kk + 1) / 2));
  }
  {
    BoundReport r = make(bound_id::kMaderKnk, nn >= 3 * kk - 2, kk * (nn - kk));
    if (r.tight) r.extremal_equality = is_complete_bipartite(g, k);
    out.push_back(std::move(r));
  }
  if (mode == Kind::vertex) {
    out.push_back(make(bound_id::kCai, nn < 3 * kk - 2, (nn + kk) * (nn + kk) / 8));
  }
  {
    auto dense = find_j_edge_connected_subgraph(g, k + 1);
    BoundReport r = make(bound_id::kLemma23, n >= k && !dense, kk * (nn - kk) + kk * (kk - 1) / 2);
    if (dense) {
      r.witness = *dense;
      r.note = "hypothesis fails: contains a (k+1)-edge-connected subgraph";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t degree_k_census(const Graph& g, std::size_t k) {
  std::size_t c = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) == k) ++c;
  return c;
}

BoundReport degree_k_report(const Graph& g, std::size_t k) {
  BoundReport r;
  r.bound_id = bound_id::kDegreeK;
  r.order = g.order();
  r.lhs = as_signed(k + 1);
  r.rhs = as_signed(degree_k_census(g, k));
  r.holds = r.lhs <= r.rhs;
  r.tight = r.lhs == r.rhs;
  r.witness = VertexSet(g.order());
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) == k) r.witness.insert(v);
  return r;
}

ForestCheck forest_check(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  ForestCheck out;
  out.degree_k_vertices = VertexSet(n);
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == k) out.degree_k_vertices.insert(v);
  const VertexSet rest = out.degree_k_vertices.complement();

  // Iterative DFS on G - S; the first non-tree edge closes a cycle.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, kNone);
  std::vector<bool> visited(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (!rest.contains(root) || visited[root]) continue;
    std::vector<std::size_t> stack{root};
    visited[root] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      bool closed = false;
      (g.neighbors(v) & rest).for_each([&](std::size_t w) {
        if (closed || w == parent[v]) return;
        if (!visited[w]) {
          visited[w] = true;
          parent[w] = v;
          stack.push_back(w);
          return;
        }
        // v and w are both in the DFS forest and adjacent through a
        // non-tree edge: join their tree paths at the lowest common ancestor.
        std::vector<std::size_t> up_v{v};
        for (std::size_t x = v; parent[x] != kNone; x = parent[x]) up_v.push_back(parent[x]);
        std::vector<std::size_t> up_w{w};
        for (std::size_t x = w; parent[x] != kNone; x = parent[x]) up_w.push_back(parent[x]);
        while (up_v.size() >= 2 && up_w.size() >= 2 &&
               up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
          up_v.pop_back();
          up_w.pop_back();
        }
        // up_v.back() == up_w.back() is the common ancestor.
        out.cycle.assign(up_v.begin(), up_v.end());
        for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) out.cycle.push_back(*it);
        out.is_forest = false;
        closed = true;
      });
      if (closed) return out;
    }
  }
  return out;
}

BoundReport forest_report(const Graph& g, std::size_t k) {
  const ForestCheck fc = forest_check(g, k);
  const VertexSet rest = fc.degree_k_vertices.complement();
  BoundReport r;
  r.bound_id = bound_id::kForest;
  r.order = g.order();
  // A graph is a forest iff e = |V| - #components.
  r.lhs = as_signed(g.edges_within(rest));
  if (rest.empty()) {
    r.rhs = 0;
  } else {
    const Graph h = induced_subgraph(g, rest);
    r.rhs = as_signed(h.order()) - as_signed(components(h).size());
  }
  r.holds = r.lhs <= r.rhs;
  r.tight = r.lhs == r.rhs;
  r.witness = VertexSet::of(g.order(), fc.cycle);
  return r;
}

LevelSets level_sets(const Graph& g, const PerronResult& perron, std::size_t k) {
  if (k < 2) throw std::invalid_argument("level_sets requires k >= 2");
  const std::size_t n = g.order();
  if (perron.vector.size() != n)
    throw std::invalid_argument("Perron vector dimension does not match the graph");
  const double kd = static_cast<double>(k);
  LevelSets ls;
  ls.alpha = 1.0 / (24.0 * kd * (kd + 1.0));
  ls.beta = 5.0 * ls.alpha / 3.0;
  ls.gamma0 = 1.0 / (2.0 * kd);
  ls.ustar = perron.argmax();
  const double top = perron.vector[ls.ustar];
  ls.l_alpha = VertexSet(n);
  ls.l_beta = VertexSet(n);
  ls.l_gamma0 = VertexSet(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double x = perron.vector[v];
    if (x > ls.alpha * top) ls.l_alpha.insert(v);
    if (x > ls.beta * top) ls.l_beta.insert(v);
    if (x >= ls.gamma0 * top) ls.l_gamma0.insert(v);
  }
  return ls;
}

EigenStructureReport eigen_structure_report(const Graph& g, const PerronResult& perron,
                                            std::size_t k) {
  EigenStructureReport r;
  r.n = g.order();
  r.k = k;
  r.rho = perron.rho;
  r.levels = level_sets(g, perron, k);
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(r.n);
  r.n_threshold = 18.0 * kd / (r.levels.alpha * r.levels.alpha);
  r.hyp_n_ok = nd >= r.n_threshold;
  r.hyp_rho_ok = r.rho * r.rho >= kd * (nd - kd);
  r.l = r.levels.l_gamma0;
  r.size_l = r.l.count();
  const double top = perron.vector[r.levels.ustar];
  r.min_coord = std::numeric_limits<double>::infinity();
  r.min_degree = std::numeric_limits<std::size_t>::max();
  bool coord_ok = true;
  r.l.for_each([&](std::size_t v) {
    r.min_coord = std::min(r.min_coord, perron.vector[v] / top);
    r.min_degree = std::min(r.min_degree, g.degree(v));
    coord_ok = coord_ok && perron.vector[v] >= (1.0 - 1.0 / (2.0 * kd)) * top;
  });
  r.coord_ok = coord_ok;
  r.degree_ok = static_cast<double>(r.min_degree) >= (1.0 - 2.0 / (3.0 * kd)) * nd;
  return r;
}

EigenStructureReport eigen_structure_report(const Graph& g, std::size_t k, double tol) {
  return eigen_structure_report(g, spectral_radius(g, tol), k);
}

}  // namespace mincon
