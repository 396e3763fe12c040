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

#include "distlabel/constructive.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "distlabel/errors.hpp"

namespace distlabel {

std::string LevelAssignmentState::describe() const {
  std::ostringstream out;
  out << "level " << level_index << "\n";
  out << " groups:";
  for (const auto& [p, kids] : groups) {
    out << " " << p << "->[";
    for (std::size_t i = 0; i < kids.size(); ++i) out << (i ? "," : "") << kids[i];
    out << "]";
  }
  out << "\n singleton_children:";
  for (const auto& [p, kids] : singleton_children) {
    out << " " << p << "->[";
    for (std::size_t i = 0; i < kids.size(); ++i) out << (i ? "," : "") << kids[i];
    out << "]";
  }
  out << "\n forbidden/available:";
  for (const auto& [w, forb] : forbidden) {
    out << " " << w << ":{";
    bool first = true;
    for (int l : forb) {
      out << (first ? "" : ",") << l;
      first = false;
    }
    out << "}/{";
    first = true;
    if (auto it = available.find(w); it != available.end())
      for (int l : it->second) {
        out << (first ? "" : ",") << l;
        first = false;
      }
    out << "}";
  }
  return out.str();
}

namespace {

struct LevelPlan {
  LevelAssignmentState state;
  std::vector<int> multi_back;  // >= 2 previous-level neighbors, ascending
};

LevelPlan build_level_plan(const Graph& g, const BfsTree& tree,
                           const std::vector<std::vector<int>>& levels, int level_index,
                           const std::vector<int>& labels, int delta) {
  LevelPlan plan;
  plan.state.level_index = level_index;
  for (int w : levels[static_cast<std::size_t>(level_index)]) {
    plan.state.groups[*tree.parent[w]].push_back(w);
    std::vector<int> back;
    for (int x : g.neighbors(w))
      if (tree.level[x] == level_index - 1) back.push_back(x);
    std::set<int> forb;
    for (int x : back) forb.insert(labels[x]);
    std::set<int> avail;
    for (int l = 1; l <= delta; ++l)
      if (!forb.count(l)) avail.insert(l);
    plan.state.forbidden[w] = std::move(forb);
    plan.state.available[w] = std::move(avail);
    if (back.size() == 1)
      plan.state.singleton_children[back[0]].push_back(w);
    else
      plan.multi_back.push_back(w);
  }
  return plan;
}

bool plan_feasible(const LevelPlan& plan) {
  for (const auto& [w, avail] : plan.state.available)
    if (avail.empty()) return false;
  return true;
}

// Re-solves the level-(prev) assignment as a CSP: every prev-level vertex
// picks from its own available set (labels 1..delta minus its already-fixed
// neighbors two levels up), vertices sharing their unique back-neighbor stay
// pairwise distinct, and no next-level vertex may see all of 1..delta on its
// back-neighborhood. Backtracking, smallest domain first, values ascending.
class LevelRepair {
 public:
  LevelRepair(const Graph& g, const BfsTree& tree, const std::vector<std::vector<int>>& levels,
              int prev_level, std::vector<int>& labels, int delta)
      : labels_(labels), delta_(delta) {
    const auto& prev = levels[static_cast<std::size_t>(prev_level)];
    vars_.assign(prev.begin(), prev.end());
    var_index_.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = static_cast<int>(i);

    domains_.resize(vars_.size());
    group_of_.assign(vars_.size(), -1);
    std::map<int, int> group_ids;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const int w = vars_[i];
      std::vector<int> back;
      for (int x : g.neighbors(w))
        if (tree.level[x] == prev_level - 1) back.push_back(x);
      std::set<int> forb;
      for (int x : back) forb.insert(labels[x]);
      for (int l = 1; l <= delta; ++l)
        if (!forb.count(l)) domains_[i].push_back(l);
      if (back.size() == 1)
        group_of_[i] =
            group_ids.emplace(back[0], static_cast<int>(group_ids.size())).first->second;
    }
    group_used_.resize(group_ids.size());

    // next-level vertices whose whole neighborhood lies one level up and is
    // large enough to exhaust the alphabet
    if (prev_level + 1 < static_cast<int>(levels.size())) {
      for (int u : levels[static_cast<std::size_t>(prev_level) + 1]) {
        std::vector<int> back;
        for (int x : g.neighbors(u))
          if (tree.level[x] == prev_level) back.push_back(x);
        if (static_cast<int>(back.size()) >= delta) watchers_.push_back(std::move(back));
      }
    }
  }

  bool solve() {
    assignment_.assign(vars_.size(), -1);
    nodes_ = 0;
    if (!backtrack()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i) labels_[vars_[i]] = assignment_[i];
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool value_ok(std::size_t var, int value) const {
    if (group_of_[var] >= 0 &&
        group_used_[static_cast<std::size_t>(group_of_[var])].count(value))
      return false;
    // a watcher must never end up seeing all labels 1..delta
    for (const auto& back : watchers_) {
      bool involves = false;
      std::set<int> seen;
      bool complete = true;
      for (int x : back) {
        const int idx = var_index_[x];
        int lab = -1;
        if (static_cast<std::size_t>(idx) == var)
          lab = value, involves = true;
        else if (assignment_[static_cast<std::size_t>(idx)] >= 0)
          lab = assignment_[static_cast<std::size_t>(idx)];
        else
          complete = false;
        if (lab >= 0) seen.insert(lab);
      }
      if (!involves) continue;
      if (static_cast<int>(seen.size()) >= delta_) return false;
      (void)complete;
    }
    return true;
  }

  bool backtrack() {
    if (++nodes_ > kNodeCap)
      throw ConstructionDefect("level repair search exceeded its node cap");
    // smallest remaining domain first, ties by vertex id (vars_ ascending)
    std::size_t best = vars_.size();
    std::size_t best_size = ~std::size_t{0};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (assignment_[i] >= 0) continue;
      std::size_t feasible = 0;
      for (int l : domains_[i]) feasible += value_ok(i, l);
      if (feasible < best_size) {
        best_size = feasible;
        best = i;
      }
    }
    if (best == vars_.size()) return true;  // all assigned
    for (int l : domains_[best]) {
      if (!value_ok(best, l)) continue;
      assignment_[best] = l;
      if (group_of_[best] >= 0) group_used_[static_cast<std::size_t>(group_of_[best])].insert(l);
      if (backtrack()) return true;
      assignment_[best] = -1;
      if (group_of_[best] >= 0) group_used_[static_cast<std::size_t>(group_of_[best])].erase(l);
    }
    return false;
  }

  static constexpr std::uint64_t kNodeCap = 20'000'000;

  std::vector<int>& labels_;
  int delta_;
  std::vector<int> vars_;
  std::vector<int> var_index_;
  std::vector<std::vector<int>> domains_;
  std::vector<int> group_of_;
  std::vector<std::set<int>> group_used_;
  std::vector<std::vector<int>> watchers_;
  std::vector<int> assignment_;
  std::uint64_t nodes_ = 0;
};

// Complete fallback for graphs where no relabeling of the previous level can
// free every vertex of the current one (the girth-6 hypothesis does not
// actually rule that out; the Heawood graph is a concrete case). Keeps the
// same label space: 0 pinned to the root, everything else proper over
// {1..delta}, vertices in BFS order, distinguishing tested on completions.
class UniqueZeroSearch {
 public:
  UniqueZeroSearch(const Graph& g, int delta, const AutOptions& opts)
      : g_(g), delta_(delta), opts_(opts) {
    const AutGroup group = automorphism_group(g, opts);
    if (group.elements) elements_ = *group.elements;
  }

  std::optional<Labeling> run(int root) {
    const BfsTree tree = bfs_tree(g_, root);
    order_.clear();
    order_.resize(static_cast<std::size_t>(g_.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return tree.level[a] < tree.level[b]; });
    labels_.assign(static_cast<std::size_t>(g_.order()), -1);
    labels_[root] = 0;
    nodes_ = 0;
    if (extend(1)) return Labeling{labels_};
    return std::nullopt;
  }

 private:
  bool distinguishing(const std::vector<int>& labels) const {
    if (!elements_.empty()) {
      for (const auto& p : elements_) {
        if (p.is_identity()) continue;
        bool preserved = true;
        for (int v = 0; v < g_.order() && preserved; ++v)
          preserved = labels[p.image[v]] == labels[v];
        if (preserved) return false;
      }
      return true;
    }
    return !exists_color_preserving_nonidentity(g_, labels, opts_).has_value();
  }

  bool extend(std::size_t t) {
    if (++nodes_ > kNodeCap)
      throw ConstructionDefect("fallback labeling search exceeded its node cap");
    if (t == order_.size()) return distinguishing(labels_);
    const int u = order_[t];
    for (int l = 1; l <= delta_; ++l) {
      bool clash = false;
      for (int w : g_.neighbors(u))
        if (labels_[w] == l) {
          clash = true;
          break;
        }
      if (clash) continue;
      labels_[u] = l;
      if (extend(t + 1)) return true;
      labels_[u] = -1;
    }
    return false;
  }

  static constexpr std::uint64_t kNodeCap = 100'000'000;

  const Graph& g_;
  int delta_;
  AutOptions opts_;
  std::vector<Permutation> elements_;
  std::vector<int> order_;
  std::vector<int> labels_;
  std::uint64_t nodes_ = 0;
};

void assign_level(const LevelPlan& plan, std::vector<int>& labels) {
  for (const auto& [parent, kids] : plan.state.singleton_children) {
    std::set<int> used;
    for (int w : kids) {
      int chosen = -1;
      for (int l : plan.state.available.at(w))
        if (!used.count(l)) {
          chosen = l;
          break;
        }
      if (chosen < 0)
        throw ConstructionDefect("no label left for vertex " + std::to_string(w) + " in " +
                                 plan.state.describe());
      labels[w] = chosen;
      used.insert(chosen);
    }
  }
  for (int w : plan.multi_back) labels[w] = *plan.state.available.at(w).begin();
}

// Repeatedly peel leaves; the one or two surviving vertices are the center,
// which every automorphism maps to itself. Rooting there (and breaking a
// center edge via the parent-distinct rule) is what lets the sibling/parent
// labeling pin the whole tree.
int tree_center(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 0;
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) frontier.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      removed[v] = true;
      --remaining;
      for (int w : g.neighbors(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    frontier = std::move(next);
  }
  for (int v = 0; v < n; ++v)
    if (!removed[v]) return v;  // lowest-id central vertex
  return 0;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>& to_sub) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i])) {
      const int j = to_sub[w];
      if (j >= 0 && static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
    }
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

}  // namespace

Labeling label_bipartite_girth6(const Graph& g, const AutOptions& opts) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("label_bipartite_girth6: empty graph");
  if (!is_connected(g)) throw PreconditionError("label_bipartite_girth6: graph is disconnected");
  if (!bipartition(g).has_value())
    throw PreconditionError("label_bipartite_girth6: graph is not bipartite");
  const Girth gr = girth(g);
  if (!gr.at_least(6))
    throw PreconditionError("label_bipartite_girth6: girth " + std::to_string(*gr.value) +
                            " < 6");
  const int delta = g.max_degree();
  if (delta < 3)
    throw PreconditionError("label_bipartite_girth6: maximum degree " + std::to_string(delta) +
                            " < 3");

  int root = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == delta) {
      root = v;
      break;
    }

  // Staged level-by-level construction; empty when some level repair is
  // provably infeasible (no relabeling of the previous level works).
  const auto staged = [&]() -> std::optional<std::vector<int>> {
    const BfsTree tree = bfs_tree(g, root);
    const auto levels = tree.levels();
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    labels[root] = 0;  // label 0 is used here and nowhere else
    int next = 1;
    for (int v : levels[1]) labels[v] = next++;

    for (int i = 2; i < static_cast<int>(levels.size()); ++i) {
      LevelPlan plan = build_level_plan(g, tree, levels, i, labels, delta);
      if (!plan_feasible(plan)) {
        if (i - 1 < 2) return std::nullopt;  // level 1 is pinned
        LevelRepair repair(g, tree, levels, i - 1, labels, delta);
        if (!repair.solve()) return std::nullopt;
        plan = build_level_plan(g, tree, levels, i, labels, delta);
        if (!plan_feasible(plan))
          throw ConstructionDefect("level repair left an empty label set in " +
                                   plan.state.describe());
      }
      assign_level(plan, labels);
    }
    return labels;
  };

  Labeling f;
  if (auto labels = staged()) {
    f.labels = std::move(*labels);
  } else {
    // The previous-level repair has no solution, so the greedy staging can
    // never finish; fall back to a complete search over the same label
    // space, anchored at each maximum-degree root in turn.
    UniqueZeroSearch search(g, delta, opts);
    std::optional<Labeling> found;
    for (int v = 0; v < n && !found; ++v)
      if (g.degree(v) == delta) found = search.run(v);
    if (!found)
      throw ConstructionDefect(
          "label_bipartite_girth6: no proper distinguishing labeling with a uniquely-used "
          "label 0 on a maximum-degree root exists for this graph");
    f = std::move(*found);
  }

  const VerifyReport rep = verify(g, f, opts);
  if (!rep.ok()) {
    std::string why = rep.proper ? "labeling is not distinguishing" : "labeling is not proper";
    throw ConstructionDefect("label_bipartite_girth6: " + why + " on the final check");
  }
  return f;
}

Labeling label_rooted_tree(const Graph& g, int root, const std::vector<int>& alphabet,
                           std::optional<int> preset_root_label) {
  const int n = g.order();
  if (root < 0 || root >= n) throw PreconditionError("label_rooted_tree: root out of range");
  if (!is_connected(g) || g.size() != n - 1)
    throw PreconditionError("label_rooted_tree: graph is not a tree");
  std::vector<int> alpha(alphabet);
  std::sort(alpha.begin(), alpha.end());
  alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());
  if (alpha.empty() || alpha.front() < 0)
    throw PreconditionError("label_rooted_tree: alphabet must be non-empty and non-negative");
  if (preset_root_label && *preset_root_label < 0)
    throw PreconditionError("label_rooted_tree: preset root label must be non-negative");

  const BfsTree tree = bfs_tree(g, root);
  const auto kids = tree.children();
  for (int v = 0; v < n; ++v) {
    // every vertex needs its children distinct from each other and from itself
    std::size_t needed = kids[v].size() + 1;
    if (v == root && preset_root_label &&
        std::find(alpha.begin(), alpha.end(), *preset_root_label) == alpha.end())
      needed -= 1;
    if (needed > alpha.size())
      throw PreconditionError("label_rooted_tree: alphabet too small at vertex " +
                              std::to_string(v));
  }

  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  labels[root] = preset_root_label ? *preset_root_label : alpha.front();
  // parents are labeled before children when vertices go level by level
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return tree.level[a] < tree.level[b]; });
  for (int v : order) {
    std::set<int> used;
    for (int c : kids[v]) {
      int chosen = -1;
      for (int l : alpha)
        if (l != labels[v] && !used.count(l)) {
          chosen = l;
          break;
        }
      if (chosen < 0)
        throw PreconditionError("label_rooted_tree: alphabet too small at vertex " +
                                std::to_string(v));
      labels[c] = chosen;
      used.insert(chosen);
    }
  }
  return Labeling{std::move(labels)};
}

namespace {

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

// Exhaustive fallback: proper labelings over {0,1,2,3} up to label renaming.
std::optional<Labeling> cycle_search(const Graph& g, const AutOptions& opts) {
  const int n = g.order();
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  std::optional<Labeling> found;
  auto rec = [&](auto&& self, int v, int max_used) -> bool {
    if (v == n) {
      if (labels[n - 1] == labels[0]) return false;
      Labeling f{labels};
      if (verify(g, f, opts).ok()) {
        found = std::move(f);
        return true;
      }
      return false;
    }
    for (int l = 0; l <= std::min(3, max_used + 1); ++l) {
      if (v > 0 && labels[v - 1] == l) continue;
      labels[v] = l;
      if (self(self, v + 1, std::max(max_used, l))) return true;
    }
    labels[v] = -1;
    return false;
  };
  rec(rec, 0, -1);
  return found;
}

}  // namespace

Labeling label_cycle(int n, const AutOptions& opts) {
  if (n < 3) throw PreconditionError("label_cycle: need n >= 3");
  Labeling f;
  f.labels.resize(static_cast<std::size_t>(n));
  if (n == 3) {
    f.labels = {0, 1, 2};
  } else {
    // one 0, then alternating 1/2, closed off by a single 3
    f.labels[0] = 0;
    for (int i = 1; i < n - 1; ++i) f.labels[i] = (i % 2 == 1) ? 1 : 2;
    f.labels[static_cast<std::size_t>(n) - 1] = 3;
  }
  const Graph cn = cycle_graph(n);
  if (verify(cn, f, opts).ok()) return f;
  if (n <= 12) {
    if (auto fallback = cycle_search(cn, opts)) return *fallback;
  }
  throw ConstructionDefect("label_cycle: no pattern verified for n = " + std::to_string(n));
}

Labeling label_unicyclic(const Graph& g, const AutOptions& opts) {
  const int n = g.order();
  const int m = g.size();
  if (n == 0) throw PreconditionError("label_unicyclic: empty graph");
  if (!is_connected(g)) throw PreconditionError("label_unicyclic: graph is disconnected");
  if (m > n) throw PreconditionError("label_unicyclic: m > n");
  const int delta = g.max_degree();
  if (delta < 3)
    throw PreconditionError("label_unicyclic: maximum degree " + std::to_string(delta) +
                            " < 3");

  Labeling f;
  if (m == n - 1) {
    std::vector<int> alphabet(static_cast<std::size_t>(delta) + 1);
    std::iota(alphabet.begin(), alphabet.end(), 0);
    f = label_rooted_tree(g, tree_center(g), alphabet);
  } else {
    const auto uc = unique_cycle(g);
    const int t = static_cast<int>(uc->cycle_vertices.size());
    const Labeling cycle_labels = label_cycle(t, opts);
    f.labels.assign(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < t; ++k) f.labels[uc->cycle_vertices[k]] = cycle_labels.labels[k];

    std::vector<int> tree_alphabet(static_cast<std::size_t>(delta));
    std::iota(tree_alphabet.begin(), tree_alphabet.end(), 1);
    std::vector<int> to_sub(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < t; ++k) {
      const auto& tree_vertices = uc->hanging_trees[static_cast<std::size_t>(k)];
      if (tree_vertices.size() == 1) continue;
      for (std::size_t i = 0; i < tree_vertices.size(); ++i)
        to_sub[tree_vertices[i]] = static_cast<int>(i);
      const Graph sub = induced_subgraph(g, tree_vertices, to_sub);
      const int x = uc->cycle_vertices[static_cast<std::size_t>(k)];
      const Labeling tf =
          label_rooted_tree(sub, to_sub[x], tree_alphabet, f.labels[x]);
      for (std::size_t i = 0; i < tree_vertices.size(); ++i)
        if (tree_vertices[i] != x) f.labels[tree_vertices[i]] = tf.labels[i];
      for (int v : tree_vertices) to_sub[v] = -1;
    }
  }

  const VerifyReport rep = verify(g, f, opts);
  if (!rep.ok()) {
    std::string why = rep.proper ? "labeling is not distinguishing" : "labeling is not proper";
    throw ConstructionDefect("label_unicyclic: " + why + " on the final check");
  }
  return f;
}

TransferReport transfer_to_spanning_subgraph(const Graph& g, const Graph& h, const Labeling& f,
                                             const AutOptions& opts) {
  if (h.order() != g.order())
    throw PreconditionError("transfer: subgraph does not span the same vertex set");
  for (const auto& [u, v] : h.edges())
    if (!g.has_edge(u, v))
      throw PreconditionError("transfer: subgraph edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") is not an edge of the host graph");
  if (!verify(g, f, opts).ok())
    throw PreconditionError("transfer: labeling is not proper distinguishing on the host graph");

  const AutGroup h_group = automorphism_group(h, opts);
  TransferReport out;
  for (const auto& gen : h_group.generators)
    if (!preserves_edges(gen, g)) {
      out.hypothesis_holds = false;
      out.violating_generator = gen;
      return out;
    }
  out.hypothesis_holds = true;
  out.subgraph_report = verify(h, f, opts);
  if (!out.subgraph_report->ok())
    throw ConstructionDefect(
        "transfer: generator containment holds but the labeling fails on the subgraph");
  return out;
}

}  // namespace distlabel
