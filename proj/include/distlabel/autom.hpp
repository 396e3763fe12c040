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
#include <vector>

#include "distlabel/graph.hpp"

namespace distlabel {

/// A bijection on 0..n-1; image[v] is where v goes.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);

  int apply(int v) const { return image[v]; }
  int degree() const { return static_cast<int>(image.size()); }
  bool is_identity() const;
  bool is_valid() const;  // bijectivity
  Permutation inverse() const;
  /// Composition applying `first` and then this: result(v) = this(first(v)).
  Permutation after(const Permutation& first) const;

  bool operator==(const Permutation& other) const = default;
};

/// True iff p maps every edge of g to an edge (hence, being a bijection on a
/// finite edge set, onto the edge set).
bool preserves_edges(const Permutation& p, const Graph& g);

/// Ordered list of disjoint nonempty cells covering 0..n-1. Cell order is
/// significant; members are kept ascending.
struct OrderedPartition {
  std::vector<std::vector<int>> cells;

  static OrderedPartition unit(int n);
  /// One cell per distinct label value, cells ordered by ascending label.
  static OrderedPartition from_labels(const std::vector<int>& labels);

  bool is_valid(int n) const;
  bool discrete() const;
};

/// Coarsest equitable refinement of p: within each cell, every vertex has
/// the same number of neighbors in every cell. Deterministic: a splitting
/// cell is replaced in place by its fragments ordered by ascending neighbor
/// count (the splitting signature).
OrderedPartition refine(const Graph& g, OrderedPartition p);

struct AutOptions {
  /// Backtracking node budget; exceeding it throws BudgetExceeded (never a
  /// silent truncation).
  std::uint64_t max_nodes = 10'000'000;
  /// Full element lists are materialized (and the group order cross-checked
  /// against the closure) only when order <= this cap.
  std::uint64_t materialize_cap = 1'000'000;
};

/// Generators plus order of a permutation group on 0..n-1. Generators of
/// automorphism groups map edges to edges and non-edges to non-edges; order
/// is the size of the generated group.
struct AutGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  unsigned long long order = 1;
  /// Present only when order <= the materialization cap in effect.
  std::optional<std::vector<Permutation>> elements;
};

/// Aut(g) via individualization-refinement backtracking: refine, branch on
/// the first non-singleton cell in ascending id, collect automorphisms from
/// leaves matching the first leaf. Order comes from a Schreier-Sims chain
/// over the found generators and is cross-checked by closure enumeration
/// when it is within the materialization cap.
AutGroup automorphism_group(const Graph& g, const AutOptions& opts = {});

/// Orbit partition of the generated group acting on 0..n-1; orbits ordered
/// by their minimum element, members ascending.
std::vector<std::vector<int>> orbits(const AutGroup& group, int n);

/// Some non-identity automorphism of g that preserves every vertex label,
/// or nothing if the labeling is preserved only by the identity. This is the
/// same backtracking search seeded with the label classes as initial
/// partition.
std::optional<Permutation> exists_color_preserving_nonidentity(
    const Graph& g, const std::vector<int>& labels, const AutOptions& opts = {});

/// True iff every generator of h_group maps E(g) onto E(g); generator
/// containment implies containment of the whole generated group.
bool generators_preserve(const AutGroup& h_group, const Graph& g);

/// BFS closure of the generators; stops with std::nullopt once more than
/// `cap` elements exist. Element order is deterministic (identity first,
/// then discovery order).
std::optional<std::vector<Permutation>> materialize_elements(
    const std::vector<Permutation>& generators, int n, std::uint64_t cap);

}  // namespace distlabel
