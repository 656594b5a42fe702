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

#include "mincon/connectivity.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace mincon {

namespace {

// Small residual network for augmenting-path max-flow. Arc i and arc i^1
// are each other's reverse.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

  void add(std::size_t u, std::size_t v, int cap_uv, int cap_vu) {
    out_[u].push_back(arcs_.size());
    arcs_.push_back({v, cap_uv});
    out_[v].push_back(arcs_.size());
    arcs_.push_back({u, cap_vu});
  }

  // Augments until the flow reaches `limit` or no path remains.
  std::size_t max_flow(std::size_t s, std::size_t t, std::size_t limit) {
    std::size_t flow = 0;
    std::vector<std::size_t> parent_arc(out_.size());
    std::vector<std::size_t> queue;
    while (flow < limit) {
      std::vector<bool> seen(out_.size(), false);
      seen[s] = true;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
        const std::size_t u = queue[head];
        for (std::size_t a : out_[u]) {
          const auto& arc = arcs_[a];
          if (arc.cap > 0 && !seen[arc.to]) {
            seen[arc.to] = true;
            parent_arc[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (!seen[t]) break;
      int bottleneck = std::numeric_limits<int>::max();
      for (std::size_t v = t; v != s; v = arcs_[parent_arc[v] ^ 1].to)
        bottleneck = std::min(bottleneck, arcs_[parent_arc[v]].cap);
      for (std::size_t v = t; v != s; v = arcs_[parent_arc[v] ^ 1].to) {
        arcs_[parent_arc[v]].cap -= bottleneck;
        arcs_[parent_arc[v] ^ 1].cap += bottleneck;
      }
      flow += static_cast<std::size_t>(bottleneck);
    }
    return flow;
  }

  // Nodes reachable from s in the residual network.
  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(out_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a : out_[u]) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

FlowNetwork edge_network(const Graph& g) {
  FlowNetwork net(g.order());
  for (const auto& [u, v] : g.edges()) net.add(u, v, 1, 1);
  return net;
}

// in(v) = 2v, out(v) = 2v+1; only the endpoints s and t are uncapped.
FlowNetwork split_network(const Graph& g, std::size_t s, std::size_t t) {
  const std::size_t n = g.order();
  const int big = static_cast<int>(n);
  FlowNetwork net(2 * n);
  for (std::size_t v = 0; v < n; ++v)
    net.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1, 0);
  for (const auto& [u, v] : g.edges()) {
    net.add(2 * u + 1, 2 * v, big, 0);
    net.add(2 * v + 1, 2 * u, big, 0);
  }
  return net;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - 1) / 2;
}

ConnectivityReport complete_graph_report(const Graph& g) {
  ConnectivityReport r;
  r.kind = Kind::vertex;
  r.value = g.order() - 1;
  r.separator = VertexSet(g.order());
  for (std::size_t v = 0; v + 1 < g.order(); ++v) r.separator.insert(v);
  return r;
}

bool edges_disconnect(const Graph& g, std::span<const Edge> removed) {
  Graph h = g;
  for (const auto& [u, v] : removed) h.remove_edge(u, v);
  return !is_connected(h);
}

// Calls f on every size-r combination of {0..m-1}; stops when f returns true.
bool any_combination(std::size_t m, std::size_t r,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > m) return false;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ConnectivityReport edge_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  ConnectivityReport best;
  best.kind = Kind::edge;
  best.separator = VertexSet(n);
  best.source_side = VertexSet::of(n, {0});
  if (n == 1) return best;
  best.value = std::numeric_limits<std::size_t>::max();
  const FlowNetwork base = edge_network(g);
  for (std::size_t t = 1; t < n; ++t) {
    FlowNetwork net = base;
    const std::size_t flow = net.max_flow(0, t, best.value);
    if (flow >= best.value) continue;
    const auto side = net.reachable(0);
    best.value = flow;
    best.source_side = VertexSet(n);
    best.cut_edges.clear();
    for (std::size_t v = 0; v < n; ++v)
      if (side[v]) best.source_side.insert(v);
    for (const auto& [u, v] : g.edges())
      if (side[u] != side[v]) best.cut_edges.emplace_back(u, v);
  }
  return best;
}

ConnectivityReport vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("vertex connectivity needs at least 2 vertices");
  if (is_complete(g)) return complete_graph_report(g);
  ConnectivityReport best;
  best.kind = Kind::vertex;
  best.value = std::numeric_limits<std::size_t>::max();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      FlowNetwork net = split_network(g, s, t);
      const std::size_t flow = net.max_flow(2 * s + 1, 2 * t, best.value);
      if (flow >= best.value) continue;
      const auto side = net.reachable(2 * s + 1);
      best.value = flow;
      best.separator = VertexSet(n);
      for (std::size_t v = 0; v < n; ++v)
        if (side[2 * v] && !side[2 * v + 1]) best.separator.insert(v);
      if (best.value == 0) return best;
    }
  }
  return best;
}

ConnectivityReport connectivity(const Graph& g, Kind kind) {
  return kind == Kind::vertex ? vertex_connectivity(g) : edge_connectivity(g);
}

bool witness_disconnects(const Graph& g, const ConnectivityReport& report) {
  if (report.kind == Kind::vertex) {
    if (report.separator.count() != report.value) return false;
    const std::size_t left = g.order() - report.value;
    if (left == 1) return true;
    return left >= 2 && !is_connected_without(g, report.separator);
  }
  if (report.cut_edges.size() != report.value) return false;
  for (const auto& [u, v] : report.cut_edges)
    if (!g.has_edge(u, v)) return false;
  if (g.order() == 1) return report.value == 0;
  return edges_disconnect(g, report.cut_edges);
}

ConnectivityReport brute_force_connectivity(const Graph& g, Kind kind) {
  const std::size_t n = g.order();
  ConnectivityReport r;
  r.kind = kind;
  r.separator = VertexSet(n);
  if (kind == Kind::vertex) {
    if (n < 2) throw std::invalid_argument("vertex connectivity needs at least 2 vertices");
    if (n > 12) throw std::invalid_argument("brute-force vertex connectivity capped at n <= 12");
    for (std::size_t size = 0; size + 2 <= n; ++size) {
      bool found = any_combination(n, size, [&](const std::vector<std::size_t>& pick) {
        VertexSet s = VertexSet::of(n, pick);
        if (is_connected_without(g, s)) return false;
        r.separator = s;
        return true;
      });
      if (found) {
        r.value = size;
        return r;
      }
    }
    return complete_graph_report(g);
  }

  if (n == 1) return r;
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t max_size = m <= 24 ? m : 8;
  for (std::size_t size = 0; size <= max_size; ++size) {
    bool found = any_combination(m, size, [&](const std::vector<std::size_t>& pick) {
      std::vector<Edge> removed;
      for (std::size_t i : pick) removed.push_back(edges[i]);
      if (!edges_disconnect(g, removed)) return false;
      r.cut_edges = std::move(removed);
      return true;
    });
    if (found) {
      r.value = size;
      return r;
    }
  }
  throw std::invalid_argument("brute-force edge connectivity exceeds the size-8 search cap");
}

MinimalityCertificate certify_minimality(const Graph& g, std::size_t k, Kind kind,
                                         bool early_exit) {
  if (k < 1) throw std::invalid_argument("certify_minimality requires k >= 1");
  MinimalityCertificate cert;
  cert.k = k;
  cert.kind = kind;
  if (kind == Kind::vertex && g.order() < 2) return cert;
  cert.connectivity = connectivity(g, kind).value;
  cert.base_ok = cert.connectivity >= k;
  if (!cert.base_ok && early_exit) return cert;
  for (const auto& e : g.edges()) {
    ConnectivityReport cut = connectivity(without_edge(g, e.first, e.second), kind);
    if (cut.value < k) {
      cert.per_edge.push_back({e, std::move(cut)});
    } else {
      cert.redundant_edges.push_back(e);
      if (early_exit) return cert;
    }
  }
  return cert;
}

namespace {

struct Split {
  VertexSet left;
  VertexSet right;
  std::size_t cut_size;
};

// Minimum edge cut of G[part], mapped back to original vertex labels.
// nullopt when G[part] is already j-edge-connected.
std::optional<Split> split_below(const Graph& g, const VertexSet& part, std::size_t j) {
  const Graph h = induced_subgraph(g, part);
  const ConnectivityReport r = edge_connectivity(h);
  if (r.value >= j) return std::nullopt;
  const auto members = part.indices();
  Split s{VertexSet(g.order()), VertexSet(g.order()), r.value};
  for (std::size_t i = 0; i < members.size(); ++i)
    (r.source_side.contains(i) ? s.left : s.right).insert(members[i]);
  return s;
}

std::optional<VertexSet> find_in(const Graph& g, const VertexSet& part, std::size_t j) {
  if (part.count() < 2) return std::nullopt;
  auto split = split_below(g, part, j);
  if (!split) return part;
  if (auto hit = find_in(g, split->left, j)) return hit;
  return find_in(g, split->right, j);
}

std::unique_ptr<DecompositionNode> build(const Graph& g, const VertexSet& part,
                                         DecompositionTree& tree) {
  auto node = std::make_unique<DecompositionNode>();
  node->part = part;
  std::optional<Split> split;
  if (part.count() >= 2) split = split_below(g, part, tree.k);
  if (!split) {
    tree.leaves.push_back(part);
    tree.leaf_k_connected.push_back(part.count() >= 2);
    tree.leaf_edges += g.edges_within(part);
    return node;
  }
  ++tree.splits;
  node->cut_size = split->cut_size;
  node->left = build(g, split->left, tree);
  node->right = build(g, split->right, tree);
  return node;
}

}  // namespace

std::optional<VertexSet> find_j_edge_connected_subgraph(const Graph& g, std::size_t j) {
  if (j < 1) throw std::invalid_argument("find_j_edge_connected_subgraph requires j >= 1");
  return find_in(g, g.all(), j);
}

DecompositionTree decompose(const Graph& g, std::size_t k) {
  if (k < 1) throw std::invalid_argument("decompose requires k >= 1");
  DecompositionTree tree;
  tree.k = k;
  tree.edges = g.size();
  tree.root = build(g, g.all(), tree);
  tree.bound = tree.leaf_edges + (k - 1) * tree.splits;
  tree.bound_holds = tree.edges <= tree.bound;
  return tree;
}

}  // namespace mincon
