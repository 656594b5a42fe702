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

#include "mincon/graph6.hpp"

namespace mincon {

namespace {

constexpr int kOffset = 63;

std::size_t payload_bytes(std::size_t n) {
  const std::size_t bits = n * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxVertices)
    throw Graph6Error("graph6 short form supports at most 62 vertices");
  std::string out;
  out.reserve(1 + payload_bytes(n));
  out.push_back(static_cast<char>(n + kOffset));
  int group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error("byte outside [63,126] in graph6 string");
  }
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw Graph6Error("long-form graph6 (n > 62) is not supported");
  const std::size_t n = static_cast<std::size_t>(head - kOffset);
  if (n == 0) throw Graph6Error("graph6 string encodes the empty graph");
  const std::size_t expected = 1 + payload_bytes(n);
  if (text.size() < expected) throw Graph6Error("graph6 string too short for n");
  if (text.size() > expected) throw Graph6Error("trailing bytes after graph6 payload");

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - kOffset;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - kOffset;
    if ((last & ((1 << (6 - bit % 6)) - 1)) != 0)
      throw Graph6Error("non-zero padding bits in graph6 string");
  }
  return g;
}

Graph6Corpus read_graph6_stream(std::istream& in) {
  Graph6Corpus corpus;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      corpus.graphs.push_back(decode_graph6(line));
      corpus.codes.push_back(line);
      corpus.line_numbers.push_back(number);
    } catch (const std::invalid_argument& e) {
      corpus.errors.push_back({number, e.what()});
    }
  }
  return corpus;
}

}  // namespace mincon
