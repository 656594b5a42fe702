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

#include "mincon/scan.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "mincon/canonical.hpp"
#include "mincon/connectivity.hpp"
#include "mincon/graph6.hpp"
#include "mincon/report_json.hpp"
#include "mincon/structure.hpp"

namespace mincon {

namespace {

// Runs f(i) for i in [0, count) on up to `jobs` threads. Each index is
// handled exactly once; callers write results into per-index slots.
template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string record_key(const Graph& g, std::span<const std::string> codes, std::size_t i) {
  if (g.order() <= kCanonicalMaxVertices) return canonical_code(g);
  if (!codes.empty()) return codes[i];
  return encode_graph6(g);
}

std::size_t common_order(std::span<const Graph> graphs) {
  if (graphs.empty()) return 0;
  const std::size_t n = graphs.front().order();
  for (const auto& g : graphs)
    if (g.order() != n)
      throw std::invalid_argument("input mixes graphs on " + std::to_string(n) + " and " +
                                  std::to_string(g.order()) + " vertices");
  return n;
}

bool is_extremal(const Graph& g, std::size_t k) {
  if (k < 1 || k >= g.order()) return false;
  if (g.order() <= kCanonicalMaxVertices)
    return canonical_code(g) == canonical_code(complete_bipartite(k, g.order()));
  return is_complete_bipartite(g, k);
}

// Strictly better: larger value, then smaller code.
bool better_rho(const Extremum& a, const Extremum& b) {
  if (a.rho != b.rho) return a.rho > b.rho;
  return a.graph6 < b.graph6;
}

bool better_edges(const Extremum& a, const Extremum& b) {
  if (a.edges != b.edges) return a.edges > b.edges;
  return a.graph6 < b.graph6;
}

}  // namespace

ScanResult scan_graphs(std::span<const Graph> graphs, std::span<const std::string> codes,
                       std::size_t k, Kind mode, unsigned jobs, double tol) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!codes.empty() && codes.size() != graphs.size())
    throw std::invalid_argument("codes must be parallel to graphs");
  const std::size_t n = common_order(graphs);

  ScanResult out;
  out.records.resize(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    ScanRecord& r = out.records[i];
    r.graph6 = record_key(g, codes, i);
    r.n = g.order();
    r.e = g.size();
    if (g.order() >= 2) r.kappa = vertex_connectivity(g).value;
    r.kappa_prime = edge_connectivity(g).value;
    r.minimal = is_minimally_connected(g, k, mode);
    if (r.minimal) r.rho = spectral_radius(g, tol).rho;
    r.degree_k_count = degree_k_census(g, k);
  });

  ExtremalReport& rep = out.report;
  rep.k = k;
  rep.mode = mode;
  rep.n = n;
  rep.inputs = graphs.size();
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < out.records.size(); ++i) {
    const ScanRecord& r = out.records[i];
    if (!r.minimal) continue;
    survivors.push_back(i);
    ++rep.population;
    const Extremum here{r.graph6, *r.rho, r.e};
    if (!rep.argmax_rho || better_rho(here, *rep.argmax_rho)) rep.argmax_rho = here;
    if (!rep.argmax_edges || better_edges(here, *rep.argmax_edges)) rep.argmax_edges = here;
  }
  if (rep.population == 0) return out;

  std::size_t argmax_index = 0;
  rep.max_edges_all_complete_bipartite = true;
  for (std::size_t i : survivors) {
    const ScanRecord& r = out.records[i];
    if (r.graph6 == rep.argmax_rho->graph6 && *r.rho == rep.argmax_rho->rho) argmax_index = i;
    if (r.e == rep.argmax_edges->edges) {
      ++rep.max_edges_count;
      rep.max_edges_all_complete_bipartite =
          rep.max_edges_all_complete_bipartite && is_extremal(graphs[i], k);
    }
  }
  for (std::size_t i : survivors) {
    if (i == argmax_index) continue;
    const ScanRecord& r = out.records[i];
    if (*r.rho >= rep.argmax_rho->rho - kNearTieWindow)
      rep.near_ties.push_back({r.graph6, *r.rho, r.e});
  }
  std::sort(rep.near_ties.begin(), rep.near_ties.end(), better_rho);
  rep.matches_complete_bipartite = is_extremal(graphs[argmax_index], k);
  return out;
}

Suite parse_suite(std::string_view name) {
  if (name == "bounds-global") return Suite::bounds_global;
  if (name == "bounds-subgraph") return Suite::bounds_subgraph;
  if (name == "degree-k") return Suite::degree_k;
  if (name == "forest") return Suite::forest;
  if (name == "heredity") return Suite::heredity;
  if (name == "eigen-report") return Suite::eigen_report;
  if (name == "decomposition") return Suite::decomposition;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::bounds_global: return "bounds-global";
    case Suite::bounds_subgraph: return "bounds-subgraph";
    case Suite::degree_k: return "degree-k";
    case Suite::forest: return "forest";
    case Suite::heredity: return "heredity";
    case Suite::eigen_report: return "eigen-report";
    case Suite::decomposition: return "decomposition";
  }
  return "?";
}

namespace {

// Edge-count maximisers must be K_{k,n-k} in edge mode from n >= 3k and in
// vertex mode from n >= 3k-1 (k >= 2).
bool uniqueness_regime(std::size_t n, std::size_t k, Kind mode) {
  if (mode == Kind::edge) return n >= 3 * k;
  return k >= 2 && n + 1 >= 3 * k;
}

bool bound_failed(const BoundReport& b) { return b.applicable && !b.holds; }

VerifyGraphResult check_bounds(const Graph& g, std::vector<BoundReport> reports,
                               std::size_t k, Kind mode, bool uniqueness_applies) {
  VerifyGraphResult r;
  r.detail = Json::array();
  for (auto& b : reports) {
    bool failed = bound_failed(b);
    if (b.applicable && b.tight && b.extremal_equality && !*b.extremal_equality &&
        uniqueness_applies)
      failed = true;
    // No minimally k-edge-connected graph has a (k+1)-edge-connected subgraph.
    if (mode == Kind::edge && b.bound_id == bound_id::kLemma23 && !b.applicable &&
        g.order() >= k)
      failed = true;
    if (failed) r.pass = false;
    Json item = to_json(b);
    item["failed"] = failed;
    r.detail.push_back(std::move(item));
  }
  return r;
}

}  // namespace

VerifyGraphResult verify_one(const Graph& g, Suite suite, std::size_t k, Kind mode) {
  switch (suite) {
    case Suite::bounds_global: {
      auto reports = check_global_bounds(g, k, mode);
      return check_bounds(g, std::move(reports), k, mode,
                          uniqueness_regime(g.order(), k, mode));
    }
    case Suite::bounds_subgraph: {
      // Equality in e(H) <= k(|H|-k) always forces K_{k,|H|-k} above the
      // threshold, so uniqueness applies to every thm1.0-b report.
      return check_bounds(g, check_subgraph_bounds(g, k, mode), k, mode, true);
    }
    case Suite::degree_k: {
      BoundReport b = degree_k_report(g, k);
      b.applicable = mode == Kind::edge;
      if (!b.applicable) b.note = "asserted for minimally k-edge-connected graphs only";
      return check_bounds(g, {b}, k, mode, false);
    }
    case Suite::forest: {
      BoundReport b = forest_report(g, k);
      b.applicable = mode == Kind::vertex;
      if (!b.applicable) b.note = "asserted for minimally k-connected graphs only";
      return check_bounds(g, {b}, k, mode, false);
    }
    case Suite::heredity: {
      const std::size_t n = g.order();
      if (n > kHeredityMaxVertices)
        throw std::invalid_argument("heredity sweep is capped at 12 vertices");
      VerifyGraphResult r;
      std::size_t examined = 0;
      Json violations = Json::array();
      for (std::uint64_t mask = 3; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        const VertexSet s = VertexSet::from_mask(n, mask);
        const Graph h = induced_subgraph(g, s);
        if (connectivity(h, mode).value < k) continue;
        ++examined;
        if (!is_minimally_connected(h, k, mode)) violations.push_back(to_json(s));
      }
      r.pass = violations.empty();
      r.detail["k_connected_subgraphs"] = examined;
      r.detail["violations"] = std::move(violations);
      return r;
    }
    case Suite::eigen_report: {
      VerifyGraphResult r;
      const EigenStructureReport rep = eigen_structure_report(g, k);
      r.pass = rep.levels.nested();
      r.detail = to_json(rep);
      return r;
    }
    case Suite::decomposition: {
      VerifyGraphResult r;
      const DecompositionTree tree = decompose(g, k);
      bool leaves_ok = true;
      VertexSet covered(g.order());
      std::size_t covered_count = 0;
      for (std::size_t i = 0; i < tree.leaves.size(); ++i) {
        const VertexSet& part = tree.leaves[i];
        covered |= part;
        covered_count += part.count();
        if (part.count() >= 2 && edge_connectivity(induced_subgraph(g, part)).value < k)
          leaves_ok = false;
      }
      const bool partition = covered_count == g.order() && covered.count() == g.order();
      r.pass = tree.bound_holds && leaves_ok && partition;
      r.detail = to_json(tree);
      r.detail["leaves_valid"] = leaves_ok;
      r.detail["leaves_partition"] = partition;
      return r;
    }
  }
  throw std::invalid_argument("unknown suite");
}

VerifyReport verify_graphs(std::span<const Graph> graphs, std::span<const std::string> codes,
                           Suite suite, std::size_t k, Kind mode, unsigned jobs) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!codes.empty() && codes.size() != graphs.size())
    throw std::invalid_argument("codes must be parallel to graphs");
  std::vector<std::optional<VerifyGraphResult>> slots(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    if (!is_minimally_connected(g, k, mode)) return;
    VerifyGraphResult r = verify_one(g, suite, k, mode);
    r.graph6 = record_key(g, codes, i);
    slots[i] = std::move(r);
  });
  VerifyReport rep;
  rep.suite = suite;
  rep.k = k;
  rep.mode = mode;
  rep.inputs = graphs.size();
  for (auto& slot : slots) {
    if (!slot) continue;
    ++rep.checked;
    ++(slot->pass ? rep.passed : rep.failed);
    rep.results.push_back(std::move(*slot));
  }
  return rep;
}

Json to_json(const ScanRecord& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["e"] = r.e;
  j["kappa"] = r.kappa ? Json(*r.kappa) : Json(nullptr);
  j["kappa_prime"] = r.kappa_prime;
  j["minimal"] = r.minimal;
  j["rho"] = r.rho ? Json(*r.rho) : Json(nullptr);
  j["degree_k_count"] = r.degree_k_count;
  return j;
}

namespace {

Json extremum_json(const std::optional<Extremum>& e) {
  if (!e) return nullptr;
  Json j;
  j["graph6"] = e->graph6;
  j["rho"] = e->rho;
  j["e"] = e->edges;
  return j;
}

}  // namespace

Json to_json(const ExtremalReport& r) {
  Json j;
  j["k"] = r.k;
  j["mode"] = to_string(r.mode);
  j["n"] = r.n;
  j["inputs"] = r.inputs;
  j["population"] = r.population;
  j["argmax_rho"] = extremum_json(r.argmax_rho);
  Json ties = Json::array();
  for (const auto& t : r.near_ties) ties.push_back(extremum_json(t));
  j["near_ties"] = std::move(ties);
  j["argmax_edges"] = extremum_json(r.argmax_edges);
  j["max_edges_count"] = r.max_edges_count;
  j["max_edges_all_Kknk"] = r.max_edges_all_complete_bipartite;
  j["matches_Kknk"] = r.matches_complete_bipartite;
  return j;
}

Json to_json(const VerifyReport& r, bool include_results) {
  Json j;
  j["suite"] = to_string(r.suite);
  j["k"] = r.k;
  j["mode"] = to_string(r.mode);
  j["inputs"] = r.inputs;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  if (include_results) {
    Json results = Json::array();
    for (const auto& g : r.results) {
      Json item;
      item["graph6"] = g.graph6;
      item["pass"] = g.pass;
      item["detail"] = g.detail;
      results.push_back(std::move(item));
    }
    j["results"] = std::move(results);
  }
  return j;
}

}  // namespace mincon
