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

#include "mincon/canonical.hpp"

#include <array>
#include <set>
#include <stdexcept>

#include "mincon/graph6.hpp"

namespace mincon {

namespace {

// Branch and bound over vertex orderings. Placing a vertex at position j
// fixes graph6 column j (bits (0,j),...,(j-1,j)); any ordering whose column
// prefix already exceeds the best found is cut. The sweep still visits every
// ordering that ties the optimum, so the result is the true minimum.
class MinimalOrdering {
 public:
  explicit MinimalOrdering(const Graph& g) : n_(g.order()) {
    for (std::size_t v = 0; v < n_; ++v) rows_[v] = g.row(v);
  }

  std::array<std::size_t, kCanonicalMaxVertices> run() {
    search(0, 0);
    return best_perm_;
  }

 private:
  bool prefix_exceeds_best(std::size_t j) const {
    for (std::size_t c = 1; c <= j; ++c) {
      if (cols_[c] != best_cols_[c]) return cols_[c] > best_cols_[c];
    }
    return false;
  }

  void search(std::size_t j, std::uint64_t used) {
    if (j == n_) {
      if (!have_best_ || !prefix_exceeds_best(n_ - 1)) {
        best_cols_ = cols_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint32_t col = 0;
      for (std::size_t i = 0; i < j; ++i)
        col = (col << 1) | static_cast<std::uint32_t>((rows_[perm_[i]] >> v) & 1U);
      cols_[j] = col;
      if (have_best_ && prefix_exceeds_best(j)) continue;
      perm_[j] = v;
      search(j + 1, used | (std::uint64_t{1} << v));
    }
  }

  std::size_t n_;
  std::array<std::uint64_t, kCanonicalMaxVertices> rows_{};
  std::array<std::size_t, kCanonicalMaxVertices> perm_{};
  std::array<std::uint32_t, kCanonicalMaxVertices> cols_{};
  std::array<std::size_t, kCanonicalMaxVertices> best_perm_{};
  std::array<std::uint32_t, kCanonicalMaxVertices> best_cols_{};
  bool have_best_ = false;
};

}  // namespace

std::string canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalMaxVertices)
    throw std::invalid_argument("canonical_code supports at most 8 vertices");
  const auto order = MinimalOrdering(g).run();
  // order[i] is the original vertex placed at position i.
  std::vector<std::size_t> relabelling(n);
  for (std::size_t i = 0; i < n; ++i) relabelling[order[i]] = i;
  return encode_graph6(relabel(g, relabelling));
}

// Every graph with m+1 edges is a graph with m edges plus one edge, so
// growing canonical representatives one edge at a time reaches every class.
std::vector<std::string> enumerate_graph6(std::size_t n, std::size_t min_degree) {
  if (n < 1 || n > kEnumerateMaxVertices)
    throw std::invalid_argument("enumerate_graphs supports 1 <= n <= 7; ingest larger "
                                "corpora as graph6 files");
  std::set<std::string> all;
  std::set<std::string> level{canonical_code(Graph(n))};
  while (!level.empty()) {
    all.insert(level.begin(), level.end());
    std::set<std::string> next;
    for (const auto& code : level) {
      const Graph g = decode_graph6(code);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          next.insert(canonical_code(h));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<std::string> out;
  for (const auto& code : all) {
    if (min_degree == 0 || decode_graph6(code).min_degree() >= min_degree)
      out.push_back(code);
  }
  return out;
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t min_degree) {
  std::vector<Graph> out;
  for (const auto& code : enumerate_graph6(n, min_degree))
    out.push_back(decode_graph6(code));
  return out;
}

}  // namespace mincon
