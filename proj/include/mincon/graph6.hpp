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

#ifndef MINCON_GRAPH6_HPP_
#define MINCON_GRAPH6_HPP_

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mincon/graph.hpp"

namespace mincon {

// graph6 short form: one byte n+63, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each
// offset by 63, zero padded.
inline constexpr std::size_t kGraph6MaxVertices = 62;

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string encode_graph6(const Graph& g);

/// Strict decoder: rejects bad lengths, bytes outside [63,126], non-zero
/// padding bits and the long-form (n > 62) header. A trailing '\n' or
/// "\r\n" is tolerated.
Graph decode_graph6(std::string_view text);

struct Graph6Line {
  std::size_t line_number = 0;  // 1-based
  std::string text;
};

struct Graph6ParseError {
  std::size_t line_number = 0;
  std::string message;
};

/// Reads one graph6 string per line; blank lines are skipped. Malformed
/// lines are collected in `errors` and do not stop the read.
struct Graph6Corpus {
  std::vector<Graph> graphs;
  std::vector<std::string> codes;  // input text per graph, line ending stripped
  std::vector<std::size_t> line_numbers;
  std::vector<Graph6ParseError> errors;
};
Graph6Corpus read_graph6_stream(std::istream& in);

}  // namespace mincon

#endif  // MINCON_GRAPH6_HPP_
