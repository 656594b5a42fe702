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

#include "mincon/report_json.hpp"

#include <string>

#include "mincon/graph6.hpp"

namespace mincon {

namespace {

Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["e"] = g.size();
  if (g.order() <= kGraph6MaxVertices) j["graph6"] = encode_graph6(g);
  j["edges"] = to_json(g.edges());
  return j;
}

Json node_json(const DecompositionNode& node) {
  Json j;
  j["part"] = to_json(node.part);
  if (node.is_leaf()) {
    j["leaf"] = true;
    return j;
  }
  j["leaf"] = false;
  j["cut_size"] = node.cut_size;
  j["left"] = node_json(*node.left);
  j["right"] = node_json(*node.right);
  return j;
}

}  // namespace

Json to_json(const VertexSet& s) {
  Json j = Json::array();
  s.for_each([&](std::size_t v) { j.push_back(v); });
  return j;
}

Json to_json(std::span<const Edge> edges) {
  Json j = Json::array();
  for (const auto& [u, v] : edges) j.push_back(Json::array({u, v}));
  return j;
}

Json to_json(const ConnectivityReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["value"] = r.value;
  if (r.kind == Kind::vertex) {
    j["separator"] = to_json(r.separator);
  } else {
    j["cut_edges"] = to_json(r.cut_edges);
  }
  return j;
}

Json to_json(const MinimalityCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["kind"] = to_string(c.kind);
  j["connectivity"] = c.connectivity;
  j["base_ok"] = c.base_ok;
  j["minimal"] = c.valid();
  Json per_edge = Json::array();
  for (const auto& w : c.per_edge) {
    Json item;
    item["edge"] = Json::array({w.edge.first, w.edge.second});
    item["cut"] = to_json(w.cut);
    per_edge.push_back(std::move(item));
  }
  j["per_edge"] = std::move(per_edge);
  j["redundant_edges"] = to_json(c.redundant_edges);
  return j;
}

Json to_json(const DecompositionTree& t) {
  Json j;
  j["k"] = t.k;
  j["splits"] = t.splits;
  j["edges"] = t.edges;
  j["leaf_edges"] = t.leaf_edges;
  j["bound"] = t.bound;
  j["bound_holds"] = t.bound_holds;
  Json leaves = Json::array();
  for (std::size_t i = 0; i < t.leaves.size(); ++i) {
    Json leaf;
    leaf["part"] = to_json(t.leaves[i]);
    leaf["k_edge_connected"] = static_cast<bool>(t.leaf_k_connected[i]);
    leaves.push_back(std::move(leaf));
  }
  j["leaves"] = std::move(leaves);
  if (t.root) j["tree"] = node_json(*t.root);
  return j;
}

Json to_json(const PerronResult& p) {
  Json j;
  j["rho"] = p.rho;
  j["vector"] = p.vector;
  j["residual"] = p.residual;
  j["iterations"] = p.iterations;
  j["ustar"] = p.argmax();
  return j;
}

Json to_json(const BoundReport& b) {
  Json j;
  j["bound_id"] = b.bound_id;
  j["order"] = b.order;
  j["applicable"] = b.applicable;
  j["holds"] = b.holds;
  j["tight"] = b.tight;
  j["lhs"] = b.lhs;
  j["rhs"] = b.rhs;
  j["witness"] = to_json(b.witness);
  if (b.extremal_equality) j["extremal_equality"] = *b.extremal_equality;
  if (b.tight_count > 0) j["tight_count"] = b.tight_count;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

Json to_json(const LevelSets& l) {
  Json j;
  j["alpha"] = l.alpha;
  j["beta"] = l.beta;
  j["gamma0"] = l.gamma0;
  j["ustar"] = l.ustar;
  j["L_alpha"] = to_json(l.l_alpha);
  j["L_beta"] = to_json(l.l_beta);
  j["L_gamma0"] = to_json(l.l_gamma0);
  j["nested"] = l.nested();
  return j;
}

Json to_json(const EigenStructureReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["rho"] = r.rho;
  j["n_threshold"] = r.n_threshold;
  j["hyp_n_ok"] = r.hyp_n_ok;
  j["hyp_rho_ok"] = r.hyp_rho_ok;
  j["L"] = to_json(r.l);
  j["size_L"] = r.size_l;
  j["min_coord"] = r.min_coord;
  j["min_degree"] = r.min_degree;
  j["coord_ok"] = r.coord_ok;
  j["degree_ok"] = r.degree_ok;
  j["levels"] = to_json(r.levels);
  return j;
}

Json to_json(const PeelStep& s) {
  Json j;
  j["vertex"] = s.vertex;
  j["d"] = s.into_l;
  j["d_prime"] = s.into_rest;
  j["bound_ok"] = s.bound_ok;
  return j;
}

Json to_json(const RewirePlan& p) {
  Json j;
  j["L"] = to_json(p.l);
  j["V"] = to_json(p.common);
  j["U"] = to_json(p.rest);
  Json steps = Json::array();
  for (const auto& s : p.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  j["result"] = graph_json(p.result);
  return j;
}

Json to_json(const RayleighCertificate& c) {
  Json j;
  j["delta"] = c.delta;
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json item;
    item["vertex"] = s.vertex;
    item["exact"] = s.exact;
    item["lower"] = s.lower;
    steps.push_back(std::move(item));
  }
  j["steps"] = std::move(steps);
  j["rayleigh_before"] = c.rayleigh_before;
  j["rayleigh_after"] = c.rayleigh_after;
  j["rho_before"] = c.rho_before;
  j["rho_after"] = c.rho_after;
  j["increase_certified"] = c.increase_certified;
  return j;
}

}  // namespace mincon
