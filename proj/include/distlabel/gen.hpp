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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distlabel/graph.hpp"

namespace distlabel {

enum class Family {
  path,                    // params: [n]
  cycle,                   // params: [n], n >= 3
  complete,                // params: [n]
  complete_bipartite,      // params: [a, b]
  complete_multipartite,   // params: [s1, ..., sk], k >= 1
  star,                    // params: [k] leaves (K_{1,k}, n = k+1)
  heawood,                 // params: []
  petersen,                // params: []
  random_tree,             // params: [n], seed required
  random_unicyclic,        // params: [n], n >= 3, seed required
  random_bipartite_girth6  // params: [n, m], seed required
};

std::optional<Family> family_from_string(std::string_view name);
std::string family_name(Family f);

struct FamilySpec {
  Family family;
  std::vector<int> params;
  std::optional<std::uint64_t> seed;  // required for random_* families
};

/// Deterministic generator: identical specs produce identical edge sets.
/// Throws PreconditionError for bad arity/sizes and GenerationInfeasible
/// when random_bipartite_girth6 cannot place the requested edges within its
/// retry budget.
Graph generate(const FamilySpec& spec);

}  // namespace distlabel
