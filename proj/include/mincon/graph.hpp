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

#ifndef MINCON_GRAPH_HPP_
#define MINCON_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mincon/vertex_set.hpp"

namespace mincon {

using Edge = std::pair<std::size_t, std::size_t>;

/// Whether a question is about vertex connectivity or edge connectivity.
enum class Kind { vertex, edge };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view text);

/// Undirected simple graph with bitset adjacency.
///
/// Graphs on up to kMaxVertices vertices can be built; the graph6 codec and
/// the canonical form impose their own, smaller caps.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 4096;

  explicit Graph(std::size_t n);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_; }

  bool has_edge(std::size_t u, std::size_t v) const {
    return adj_[u].contains(v);
  }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  // Adjacency row as a single word; requires order() <= 64.
  std::uint64_t row(std::size_t v) const { return adj_[v].mask(); }

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::vector<Edge> edges() const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  VertexSet all() const { return VertexSet::full(order()); }

  /// e(S): edges with both ends in S.
  std::size_t edges_within(const VertexSet& s) const;
  /// e(S, T) for disjoint S and T.
  std::size_t edges_between(const VertexSet& s, const VertexSet& t) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(std::size_t u, std::size_t v) const;

  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

/// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
/// Throws std::invalid_argument on n outside [1, kMaxVertices], an endpoint
/// out of range, or a loop.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// G[S], relabelled 0..|S|-1 in ascending order of original index.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - S.
Graph remove_vertices(const Graph& g, const VertexSet& s);

Graph without_edge(const Graph& g, std::size_t u, std::size_t v);

/// Applies `perm` (new label of vertex v is perm[v]).
Graph relabel(const Graph& g, std::span<const std::size_t> perm);

bool is_connected(const Graph& g);
/// Same as is_connected(g - removed) without building the subgraph. An empty
/// or single-vertex remainder counts as connected.
bool is_connected_without(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> components(const Graph& g);

/// True iff g is isomorphic to K_{k, order-k}.
bool is_complete_bipartite(const Graph& g, std::size_t k);

// ---------------------------------------------------------------------------
// Named families.

enum class Family { complete_bipartite, complete, cycle, path, star, k_appended };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

/// K_{k,n-k}; vertices 0..k-1 form the k-side.
Graph complete_bipartite(std::size_t k, std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{1,n-1} centred at vertex 0.
Graph star_graph(std::size_t n);
/// K(n-1, k): K_{n-1} on 0..n-2 plus vertex n-1 joined to 0..k-1.
Graph k_appended(std::size_t n, std::size_t k);

/// Dispatches on `family`; `k` is ignored by families that take only n.
Graph make_family(Family family, std::size_t n, std::size_t k = 0);

}  // namespace mincon

#endif  // MINCON_GRAPH_HPP_
