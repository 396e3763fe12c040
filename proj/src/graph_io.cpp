// Copyright 2026 the distlabel authors
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

#include "distlabel/graph_io.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "distlabel/errors.hpp"

namespace distlabel {

namespace {

constexpr int kBias = 63;    // printable graph6 characters are 63..126
constexpr int kMaxChar = 126;

int g6_char(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 data truncated", text.size());
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kMaxChar)
    throw ParseError("character out of graph6 range: 0x" + std::to_string(c), pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 line", 0);

  std::size_t pos = 0;
  long long n = 0;
  int first = g6_char(text, pos);
  if (first < 63) {  // 0..62 directly
    n = first;
    pos = 1;
  } else {  // '~': 18-bit size in the next three characters
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6 8-byte size header not supported", 1);
    n = 0;
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | g6_char(text, pos);
    if (n < 63) throw ParseError("malformed graph6 size header (non-canonical)", 0);
  }

  std::vector<std::pair<int, int>> edges;
  int chunk = 0;
  int bit_in_chunk = 6;  // forces a fetch on the first bit
  long long bit_index = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit_index) {
      if (bit_in_chunk == 6) {
        chunk = g6_char(text, pos);
        ++pos;
        bit_in_chunk = 0;
      }
      if (chunk & (0x20 >> bit_in_chunk)) edges.emplace_back(row, col);
      ++bit_in_chunk;
    }
  }
  if (pos != text.size()) throw ParseError("trailing characters after graph6 data", pos);
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  if (n > 258047) throw PreconditionError("graph too large for the supported graph6 headers");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kBias + ((n >> 12) & 0x3f)));
    out.push_back(static_cast<char>(kBias + ((n >> 6) & 0x3f)));
    out.push_back(static_cast<char>(kBias + (n & 0x3f)));
  }
  int chunk = 0;
  int bit_in_chunk = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (g.has_edge(row, col)) chunk |= 0x20 >> bit_in_chunk;
      if (++bit_in_chunk == 6) {
        out.push_back(static_cast<char>(kBias + chunk));
        chunk = 0;
        bit_in_chunk = 0;
      }
    }
  }
  if (bit_in_chunk > 0) out.push_back(static_cast<char>(kBias + chunk));
  return out;
}

Graph parse_dimacs(std::string_view text) {
  std::size_t line_start = 0;
  bool have_header = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string line(text.substr(line_start, line_end - line_start));
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream in(line);
    std::string tag;
    if (in >> tag) {
      if (tag == "c") {
        // comment
      } else if (tag == "p") {
        if (have_header) throw ParseError("duplicate p-line", line_start);
        std::string fmt;
        long long nn = -1, mm = -1;
        if (!(in >> fmt >> nn >> mm) || fmt != "edge" || nn < 0 || mm < 0)
          throw ParseError("malformed p-line, expected 'p edge n m'", line_start);
        n = static_cast<int>(nn);
        have_header = true;
      } else if (tag == "e") {
        if (!have_header) throw ParseError("edge line before p-line", line_start);
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("malformed edge line", line_start);
        if (u < 1 || u > n || v < 1 || v > n)
          throw ParseError("vertex index out of range on edge line", line_start);
        if (u == v) throw ParseError("self-loop on edge line", line_start);
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      } else {
        throw ParseError("unrecognized line type '" + tag + "'", line_start);
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (!have_header) throw ParseError("missing p-line", text.size());
  return Graph::from_edges(n, edges);
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

void for_each_graph6(std::istream& in, const std::function<void(const Graph&)>& fn) {
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    fn(parse_graph6(line));
  }
}

}  // namespace distlabel
