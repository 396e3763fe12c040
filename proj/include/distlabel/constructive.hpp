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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "distlabel/graph.hpp"
#include "distlabel/labeling.hpp"
#include "distlabel/structure.hpp"

namespace distlabel {

/// Per-level bookkeeping for the BFS-level labeler. Level i >= 2 vertices
/// are grouped by their unique previous-level neighbor when they have one
/// (those must receive pairwise-distinct labels within a group); vertices
/// with two or more previous-level neighbors are pinned by their
/// already-fixed neighborhood and may take any available label.
struct LevelAssignmentState {
  int level_index = 0;
  /// parent at level i-1 -> its singleton-back-neighbor children, ascending.
  std::map<int, std::vector<int>> groups;
  /// child -> labels already placed on its level-(i-1) neighbors.
  std::map<int, std::set<int>> forbidden;
  /// child -> {1..Delta} minus forbidden.
  std::map<int, std::set<int>> available;
  /// Same as groups (children whose only level-(i-1) neighbor is the key);
  /// kept separately so multi-back-neighbor children never appear here.
  std::map<int, std::vector<int>> singleton_children;

  std::string describe() const;
};

/// Proper distinguishing labeling of a connected bipartite graph with girth
/// at least six (a forest counts) and maximum degree Delta >= 3, using
/// labels within {0..Delta}. Label 0 appears exactly once, on a root of
/// maximum degree (lowest id first); the root's neighbors get 1..Delta in
/// ascending id order; deeper levels are filled level by level, re-solving
/// the previous level as a small constraint problem whenever a vertex would
/// run out of labels. Some graphs admit no such level repair at all (the
/// Heawood graph is one); those fall back to a complete search over the same
/// label space. The result is always verified before it is returned; a
/// failure throws ConstructionDefect.
Labeling label_bipartite_girth6(const Graph& g, const AutOptions& opts = {});

/// Labels a tree so that every vertex differs from its siblings and from
/// its parent in the rooted orientation, which makes the labeling proper and
/// distinguishing for the rooted tree. Deterministic: children in ascending
/// id, smallest usable alphabet label first; the root takes the smallest
/// alphabet label unless preset_root_label pins it (the pinned value need
/// not belong to the alphabet; children still avoid it).
Labeling label_rooted_tree(const Graph& g, int root, const std::vector<int>& alphabet,
                           std::optional<int> preset_root_label = std::nullopt);

/// Proper distinguishing labeling of the cycle C_n (vertices 0..n-1 in
/// cyclic order) over labels {0,1,2,3}, verified before return. n >= 3.
Labeling label_cycle(int n, const AutOptions& opts = {});

/// Proper distinguishing labeling with at most Delta+1 distinct labels for a
/// connected graph with m <= n and Delta >= 3: a tree is labeled from its
/// lowest-id maximum-degree vertex; otherwise the unique cycle gets the
/// 4-label cycle pattern and each hanging tree is labeled over {1..Delta}
/// with its cycle vertex as preset root. Verified before return.
Labeling label_unicyclic(const Graph& g, const AutOptions& opts = {});

/// Outcome of moving a labeling from g down to a spanning subgraph h.
struct TransferReport {
  /// Whether every generator of Aut(h) preserves E(g) (so Aut(h) <= Aut(g)).
  bool hypothesis_holds = false;
  std::optional<Permutation> violating_generator;
  /// Verification of f on h; present only when the hypothesis holds.
  std::optional<VerifyReport> subgraph_report;
};

/// Checks that Aut(h) <= Aut(g) via generators, and when that holds,
/// confirms that f (a proper distinguishing labeling of g) is proper and
/// distinguishing on h as well. Preconditions: h spans g (same vertex set,
/// E(h) within E(g)) and f verifies on g; violations throw
/// PreconditionError. A verification failure on h under a true hypothesis
/// throws ConstructionDefect.
TransferReport transfer_to_spanning_subgraph(const Graph& g, const Graph& h,
                                             const Labeling& f,
                                             const AutOptions& opts = {});

}  // namespace distlabel
