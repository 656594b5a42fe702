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

#ifndef MINCON_SCAN_HPP_
#define MINCON_SCAN_HPP_

// Corpus-level drivers behind the `scan` and `verify` subcommands.
//
// Both filter their input to minimally k-(edge)-connected graphs, process
// the survivors in parallel, and reduce in input order, so the output does
// not depend on the worker count.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mincon/graph.hpp"
#include "mincon/spectral.hpp"

namespace mincon {

using Json = nlohmann::ordered_json;

inline constexpr double kNearTieWindow = 1e-9;

struct ScanRecord {
  std::string graph6;  // canonical code when n <= 8, input text otherwise
  std::size_t n = 0;
  std::size_t e = 0;
  std::optional<std::size_t> kappa;  // undefined for n = 1
  std::size_t kappa_prime = 0;
  bool minimal = false;
  std::optional<double> rho;  // survivors only
  std::size_t degree_k_count = 0;
};

struct Extremum {
  std::string graph6;
  double rho = 0.0;
  std::size_t edges = 0;
};

struct ExtremalReport {
  std::size_t k = 0;
  Kind mode = Kind::vertex;
  std::size_t n = 0;
  std::size_t inputs = 0;
  std::size_t population = 0;
  std::optional<Extremum> argmax_rho;
  std::vector<Extremum> near_ties;  // other survivors within 1e-9 of the max
  std::optional<Extremum> argmax_edges;
  std::size_t max_edges_count = 0;       // survivors attaining the max edge count
  bool max_edges_all_complete_bipartite = false;
  bool matches_complete_bipartite = false;  // argmax_rho ≅ K_{k,n-k}
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ExtremalReport report;
};

/// `codes` may be empty or parallel to `graphs` (used as record keys above
/// 8 vertices). Throws std::invalid_argument on mixed vertex counts or
/// k < 1.
ScanResult scan_graphs(std::span<const Graph> graphs, std::span<const std::string> codes,
                       std::size_t k, Kind mode, unsigned jobs = 1,
                       double tol = kDefaultTolerance);

enum class Suite {
  bounds_global,
  bounds_subgraph,
  degree_k,
  forest,
  heredity,
  eigen_report,
  decomposition,
};

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

inline constexpr std::size_t kHeredityMaxVertices = 12;

struct VerifyGraphResult {
  std::string graph6;
  bool pass = true;
  Json detail;
};

struct VerifyReport {
  Suite suite = Suite::bounds_global;
  std::size_t k = 0;
  Kind mode = Kind::vertex;
  std::size_t inputs = 0;
  std::size_t checked = 0;  // inputs that passed the minimality filter
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<VerifyGraphResult> results;  // one per checked graph
};

/// Runs one check suite on each minimally k-(edge)-connected input.
VerifyReport verify_graphs(std::span<const Graph> graphs, std::span<const std::string> codes,
                           Suite suite, std::size_t k, Kind mode, unsigned jobs = 1);

/// Single-graph check used by verify_graphs; exposed for tests.
VerifyGraphResult verify_one(const Graph& g, Suite suite, std::size_t k, Kind mode);

Json to_json(const ScanRecord& r);
Json to_json(const ExtremalReport& r);
Json to_json(const VerifyReport& r, bool include_results = true);

}  // namespace mincon

#endif  // MINCON_SCAN_HPP_
