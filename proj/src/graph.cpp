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

#include "mincon/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mincon {

std::string_view to_string(Kind kind) {
  return kind == Kind::vertex ? "vertex" : "edge";
}

Kind parse_kind(std::string_view text) {
  if (text == "vertex") return Kind::vertex;
  if (text == "edge") return Kind::edge;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (expected vertex|edge)");
}

Graph::Graph(std::size_t n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxVertices) +
                                "]");
  adj_.assign(n, VertexSet(n));
}

void Graph::check_pair(std::size_t u, std::size_t v) const {
  if (u >= order() || v >= order())
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") has an endpoint out of range");
  if (u == v)
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edges_;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  if (!adj_[u].contains(v)) return;
  adj_[u].erase(v);
  adj_[v].erase(u);
  --edges_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < order(); ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t d = order();
  for (std::size_t v = 0; v < order(); ++v) d = std::min(d, degree(v));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

std::size_t Graph::edges_within(const VertexSet& s) const {
  std::size_t twice = 0;
  s.for_each([&](std::size_t v) { twice += adj_[v].intersection_count(s); });
  return twice / 2;
}

std::size_t Graph::edges_between(const VertexSet& s, const VertexSet& t) const {
  std::size_t c = 0;
  s.for_each([&](std::size_t v) { c += adj_[v].intersection_count(t); });
  return c;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  const auto members = s.indices();
  std::vector<std::size_t> index(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;
  Graph h(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    (g.neighbors(members[i]) & s).for_each([&](std::size_t w) {
      if (index[w] > i) h.add_edge(i, index[w]);
    });
  }
  return h;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, s.complement());
}

Graph without_edge(const Graph& g, std::size_t u, std::size_t v) {
  Graph h = g;
  h.remove_edge(u, v);
  return h;
}

Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  Graph h(g.order());
  for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

namespace {

// Vertices reachable from `start` avoiding `removed`.
VertexSet reach(const Graph& g, std::size_t start, const VertexSet& removed) {
  VertexSet seen(g.order());
  std::vector<std::size_t> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    VertexSet next = g.neighbors(v) - seen - removed;
    next.for_each([&](std::size_t w) {
      seen.insert(w);
      stack.push_back(w);
    });
  }
  return seen;
}

}  // namespace

bool is_connected_without(const Graph& g, const VertexSet& removed) {
  VertexSet rest = removed.complement();
  auto start = rest.first();
  if (!start) return true;
  return reach(g, *start, removed).count() == rest.count();
}

bool is_connected(const Graph& g) {
  return is_connected_without(g, VertexSet(g.order()));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet covered(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (covered.contains(v)) continue;
    VertexSet comp = reach(g, v, VertexSet(g.order()));
    covered |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_complete_bipartite(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k < 1 || k >= n) return false;
  if (g.size() != k * (n - k)) return false;
  // With e = k(n-k), a proper 2-colouring with side sizes {k, n-k} forces
  // every cross pair to be an edge.
  std::vector<int> color(n, -1);
  std::vector<std::size_t> queue{0};
  color[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t v = queue[head];
    bool ok = true;
    g.neighbors(v).for_each([&](std::size_t w) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  if (queue.size() != n) return false;
  std::size_t side = static_cast<std::size_t>(std::count(color.begin(), color.end(), 0));
  return side == k || side == n - k;
}

Family parse_family(std::string_view name) {
  if (name == "complete-bipartite" || name == "complete_bipartite")
    return Family::complete_bipartite;
  if (name == "complete") return Family::complete;
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "star") return Family::star;
  if (name == "k-appended" || name == "k_appended") return Family::k_appended;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::k_appended: return "k-appended";
  }
  return "?";
}

Graph complete_bipartite(std::size_t k, std::size_t n) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("complete_bipartite requires 1 <= k < n");
  Graph g(n);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = k; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw std::invalid_argument("star requires n >= 2");
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph k_appended(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw std::invalid_argument("k_appended requires n >= 2 and 1 <= k <= n-1");
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u)
    for (std::size_t v = u + 1; v + 1 < n; ++v) g.add_edge(u, v);
  for (std::size_t u = 0; u < k; ++u) g.add_edge(u, n - 1);
  return g;
}

Graph make_family(Family family, std::size_t n, std::size_t k) {
  switch (family) {
    case Family::complete_bipartite: return complete_bipartite(k, n);
    case Family::complete: return complete_graph(n);
    case Family::cycle: return cycle_graph(n);
    case Family::path: return path_graph(n);
    case Family::star: return star_graph(n);
    case Family::k_appended: return k_appended(n, k);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace mincon
