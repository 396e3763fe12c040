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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distlabel/graph.hpp"

namespace distlabel {

/// Breadth-first spanning tree. level(v) equals the graph distance from the
/// root (BFS property), and every (v, parent(v)) pair is a host-graph edge.
/// Neighbor visitation is in ascending vertex id, so the tree is a
/// deterministic function of (graph, root).
struct BfsTree {
  int root = 0;
  std::vector<std::optional<int>> parent;  // parent[root] is empty
  std::vector<int> level;

  int height() const;
  /// Vertices grouped by level: result[i] is the set at distance i, each
  /// group ascending by id.
  std::vector<std::vector<int>> levels() const;
  /// children()[v] = BFS children of v, ascending by id.
  std::vector<std::vector<int>> children() const;
};

/// Throws PreconditionError if some vertex is unreachable from root.
BfsTree bfs_tree(const Graph& g, int root);

/// Independent of BfsTree: plain BFS distance vector (-1 when unreachable).
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);

/// Girth with a distinguished "acyclic" state standing in for +infinity:
/// every threshold predicate treats a forest as having arbitrarily large
/// girth.
struct Girth {
  std::optional<int> value;  // empty = acyclic

  bool acyclic() const { return !value.has_value(); }
  bool at_least(int k) const { return !value.has_value() || *value >= k; }
};

Girth girth(const Graph& g);

/// Two-coloring certificate: every edge joins side 0 to side 1.
struct Bipartition {
  std::vector<std::int8_t> side;
};

/// A valid Bipartition when g has no odd cycle, otherwise nothing.
/// Defined for disconnected graphs too (per-component coloring).
std::optional<Bipartition> bipartition(const Graph& g);

/// The unique cycle of a connected graph with m = n, plus the hanging-tree
/// decomposition: hanging_trees[i] is the vertex set (ascending) of the
/// component of G - E(C) containing cycle_vertices[i], including it.
struct UniqueCycle {
  std::vector<int> cycle_vertices;             // cyclic order, deterministic
  std::vector<std::vector<int>> hanging_trees; // aligned with cycle_vertices
};

/// Returns the decomposition when m = n, nothing when the graph is a tree
/// (m = n-1). Throws PreconditionError when disconnected or m > n.
std::optional<UniqueCycle> unique_cycle(const Graph& g);

/// Exhaustive verification of the five girth->=5 neighborhood properties.
/// Each item records the exact tuple schema enumerated, so the check can be
/// audited, plus the first violating tuple if any. A violation on a genuine
/// girth->=5 input indicates an implementation bug.
struct ObservationReport {
  struct Item {
    std::string schema;
    bool pass = true;
    std::vector<int> violating_tuple;  // empty when pass
  };

  Girth graph_girth;
  std::array<Item, 5> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Preconditions: g connected and girth(g) >= 5 (acyclic passes); violations
/// throw PreconditionError, which is distinct from a property failure in the
/// returned report.
ObservationReport check_observation(const Graph& g);

}  // namespace distlabel
