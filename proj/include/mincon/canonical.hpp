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

#ifndef MINCON_CANONICAL_HPP_
#define MINCON_CANONICAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "mincon/graph.hpp"

namespace mincon {

inline constexpr std::size_t kCanonicalMaxVertices = 8;
inline constexpr std::size_t kEnumerateMaxVertices = 7;

/// Lexicographically smallest graph6 string over all vertex relabellings.
/// Two graphs on at most 8 vertices are isomorphic iff their codes match.
/// Throws std::invalid_argument above 8 vertices.
std::string canonical_code(const Graph& g);

/// One representative per isomorphism class of graphs on n vertices with
/// minimum degree >= min_degree, as canonical graph6 codes in ascending
/// order. Throws std::invalid_argument for n outside [1, 7].
std::vector<std::string> enumerate_graph6(std::size_t n, std::size_t min_degree = 0);

/// Same population, decoded; each graph carries its canonical labelling.
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t min_degree = 0);

}  // namespace mincon

#endif  // MINCON_CANONICAL_HPP_
