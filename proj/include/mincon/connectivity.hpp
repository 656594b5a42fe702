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

#ifndef MINCON_CONNECTIVITY_HPP_
#define MINCON_CONNECTIVITY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "mincon/graph.hpp"

namespace mincon {

/// kappa or kappa' together with a cut that attains it.
///
/// For Kind::vertex the witness is `separator`; for Kind::edge it is
/// `cut_edges`. Removing the witness disconnects the graph, except for the
/// complete graph where removing n-1 vertices leaves a single vertex.
struct ConnectivityReport {
  Kind kind = Kind::edge;
  std::size_t value = 0;
  VertexSet separator;
  std::vector<Edge> cut_edges;
  // Edge kind only: the source side of the minimum cut.
  VertexSet source_side;

  std::size_t witness_size() const {
    return kind == Kind::vertex ? separator.count() : cut_edges.size();
  }
};

/// kappa'(G) by unit-capacity max-flow from vertex 0 to every other vertex.
/// n = 1 gives 0 with an empty witness.
ConnectivityReport edge_connectivity(const Graph& g);

/// kappa(G): n-1 for complete graphs, otherwise the minimum number of
/// internally disjoint paths over all non-adjacent pairs (vertex-split
/// max-flow). Throws std::invalid_argument for n < 2.
ConnectivityReport vertex_connectivity(const Graph& g);

ConnectivityReport connectivity(const Graph& g, Kind kind);

/// True iff removing the report's witness from g disconnects it (or, for a
/// vertex report of value n-1, leaves a single vertex).
bool witness_disconnects(const Graph& g, const ConnectivityReport& report);

/// Exhaustive oracle: tries removal sets in increasing size.
/// Caps: vertex kind n <= 12; edge kind e(G) <= 24, otherwise cut sizes are
/// only searched up to 8 and larger answers throw std::invalid_argument.
ConnectivityReport brute_force_connectivity(const Graph& g, Kind kind);

struct EdgeWitness {
  Edge edge;
  // Connectivity report for G - e; it proves minimality of this edge when
  // its value is below k.
  ConnectivityReport cut;
};

struct MinimalityCertificate {
  std::size_t k = 0;
  Kind kind = Kind::vertex;
  std::size_t connectivity = 0;
  bool base_ok = false;
  std::vector<EdgeWitness> per_edge;
  // Edges whose deletion keeps connectivity >= k.
  std::vector<Edge> redundant_edges;

  bool valid() const { return base_ok && redundant_edges.empty(); }
};

/// Is G minimally k-(edge)-connected? Failure is expressed in the
/// certificate, not thrown. `early_exit` stops at the first redundant edge
/// (the certificate is then incomplete but still correctly invalid).
MinimalityCertificate certify_minimality(const Graph& g, std::size_t k, Kind kind,
                                         bool early_exit = false);

inline bool is_minimally_connected(const Graph& g, std::size_t k, Kind kind) {
  return certify_minimality(g, k, kind, /*early_exit=*/true).valid();
}

/// A vertex set (>= 2 vertices) inducing a j-edge-connected subgraph, if
/// any exists. Splits along minimum edge cuts until one side qualifies.
std::optional<VertexSet> find_j_edge_connected_subgraph(const Graph& g, std::size_t j);

/// Recursive splitting along edge cuts of size <= k-1 until every part is
/// k-edge-connected or a single vertex.
struct DecompositionNode {
  VertexSet part;
  std::size_t cut_size = 0;  // split nodes only
  std::unique_ptr<DecompositionNode> left;
  std::unique_ptr<DecompositionNode> right;

  bool is_leaf() const { return !left; }
};

struct DecompositionTree {
  std::size_t k = 0;
  std::unique_ptr<DecompositionNode> root;
  std::vector<VertexSet> leaves;       // left-to-right
  std::vector<bool> leaf_k_connected;  // parallel to `leaves`
  std::size_t splits = 0;
  std::size_t leaf_edges = 0;          // sum of e(V_i) over leaves
  std::size_t edges = 0;               // e(G)
  std::size_t bound = 0;               // leaf_edges + (k-1) * splits
  bool bound_holds = false;            // edges <= bound
};

DecompositionTree decompose(const Graph& g, std::size_t k);

}  // namespace mincon

#endif  // MINCON_CONNECTIVITY_HPP_
