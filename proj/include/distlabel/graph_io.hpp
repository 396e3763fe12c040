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

#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "distlabel/graph.hpp"

namespace distlabel {

/// Decodes one graph6 line (standard format: size header, then the upper
/// triangle packed column-major in 6-bit chunks biased by 63).
/// Throws ParseError with the byte offset of the problem.
Graph parse_graph6(std::string_view text);

/// Encodes the graph in graph6 for its exact vertex ordering (no
/// canonicalization). Short header for n <= 62, 4-byte header up to 258047.
std::string to_graph6(const Graph& g);

/// Parses DIMACS .col text: "c" comments, one "p edge n m" line, "e u v"
/// lines with 1-based endpoints. Vertices are shifted to 0-based; duplicate
/// edge lines collapse. Throws ParseError (missing/bad p-line, vertex out of
/// range, self-loop) with the byte offset of the offending line.
Graph parse_dimacs(std::string_view text);

/// Writes DIMACS .col text: the p-line followed by one "e u v" line per
/// edge, 1-based, u < v, lexicographic.
std::string to_dimacs(const Graph& g);

/// Calls fn for every non-empty line of a graph6 stream, in order.
void for_each_graph6(std::istream& in, const std::function<void(const Graph&)>& fn);

}  // namespace distlabel
