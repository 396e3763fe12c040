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

#include "distlabel/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "distlabel/errors.hpp"
#include "distlabel/rng.hpp"
#include "distlabel/structure.hpp"

namespace distlabel {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

void require_params(const FamilySpec& spec, std::size_t arity) {
  require(spec.params.size() == arity,
          family_name(spec.family) + " takes " + std::to_string(arity) + " parameter(s), got " +
              std::to_string(spec.params.size()));
  for (int p : spec.params)
    require(p >= 1, family_name(spec.family) + ": sizes must be >= 1");
}

Rng seeded_rng(const FamilySpec& spec) {
  require(spec.seed.has_value(), family_name(spec.family) + " requires a seed");
  return Rng(*spec.seed);
}

Graph make_path(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph make_complete_multipartite(const std::vector<int>& sizes) {
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> part(static_cast<std::size_t>(n));
  int v = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p)
    for (int i = 0; i < sizes[p]; ++i) part[v++] = static_cast<int>(p);
  EdgeList e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part[a] != part[b]) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

// 14-cycle plus the chords of the standard LCF [5,-5]^7 presentation.
Graph make_heawood() {
  EdgeList e;
  for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) e.emplace_back(i, (i + 5) % 14);
  return Graph::from_edges(14, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph make_petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, e);
}

// Uniform labeled tree by decoding a random Pruefer sequence.
EdgeList random_tree_edges(int n, Rng& rng) {
  EdgeList e;
  if (n == 1) return e;
  if (n == 2) {
    e.emplace_back(0, 1);
    return e;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& s : seq) s = rng.below_int(n);
  std::vector<int> use_count(static_cast<std::size_t>(n), 0);
  for (int s : seq) ++use_count[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (use_count[v] == 0) leaves.insert(v);
  for (int s : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--use_count[s] == 0) leaves.insert(s);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  e.emplace_back(std::min(a, b), std::max(a, b));
  return e;
}

Graph make_random_unicyclic(int n, Rng& rng) {
  require(n >= 3, "random_unicyclic needs n >= 3");
  EdgeList e = random_tree_edges(n, rng);
  std::set<std::pair<int, int>> present(e.begin(), e.end());
  for (;;) {
    int u = rng.below_int(n);
    int v = rng.below_int(n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (present.count({u, v})) continue;
    e.emplace_back(u, v);
    return Graph::from_edges(n, e);
  }
}

// Random spanning tree first (a tree is bipartite), then cross-part edges
// proposed at random and kept only when the endpoints are at distance >= 5,
// so every cycle ever created has length >= 6; same-part pairs would close
// odd cycles and are never taken.
Graph make_random_bipartite_girth6(int n, int m, Rng& rng) {
  require(m >= n - 1, "random_bipartite_girth6 needs m >= n-1 for connectivity");
  EdgeList e = random_tree_edges(n, rng);
  Graph g = Graph::from_edges(n, e);
  const auto sides = bipartition(g);
  int placed = n - 1;
  std::uint64_t attempts = 0;
  const std::uint64_t attempt_budget =
      1000 + 600ULL * static_cast<std::uint64_t>(m - placed + 1);
  while (placed < m) {
    if (++attempts > attempt_budget)
      throw GenerationInfeasible(
          "random_bipartite_girth6: could not place " + std::to_string(m) + " edges on " +
          std::to_string(n) + " vertices within the retry budget (placed " +
          std::to_string(placed) + ")");
    const int u = rng.below_int(n);
    const int v = rng.below_int(n);
    if (u == v || g.has_edge(u, v)) continue;
    if (sides->side[u] == sides->side[v]) continue;
    const auto dist = bfs_distances(g, u);
    if (dist[v] < 5) continue;  // a shorter distance would close a cycle < 6
    e.emplace_back(std::min(u, v), std::max(u, v));
    g = Graph::from_edges(n, e);
    ++placed;
  }
  return g;
}

}  // namespace

std::optional<Family> family_from_string(std::string_view name) {
  static const std::map<std::string_view, Family> table = {
      {"path", Family::path},
      {"cycle", Family::cycle},
      {"complete", Family::complete},
      {"complete_bipartite", Family::complete_bipartite},
      {"complete_multipartite", Family::complete_multipartite},
      {"star", Family::star},
      {"heawood", Family::heawood},
      {"petersen", Family::petersen},
      {"random_tree", Family::random_tree},
      {"random_unicyclic", Family::random_unicyclic},
      {"random_bipartite_girth6", Family::random_bipartite_girth6},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::complete_multipartite: return "complete_multipartite";
    case Family::star: return "star";
    case Family::heawood: return "heawood";
    case Family::petersen: return "petersen";
    case Family::random_tree: return "random_tree";
    case Family::random_unicyclic: return "random_unicyclic";
    case Family::random_bipartite_girth6: return "random_bipartite_girth6";
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path:
      require_params(spec, 1);
      return make_path(spec.params[0]);
    case Family::cycle:
      require_params(spec, 1);
      return make_cycle(spec.params[0]);
    case Family::complete:
      require_params(spec, 1);
      return make_complete_multipartite(std::vector<int>(spec.params[0], 1));
    case Family::complete_bipartite:
      require_params(spec, 2);
      return make_complete_multipartite(spec.params);
    case Family::complete_multipartite:
      require(!spec.params.empty(), "complete_multipartite needs at least one part");
      for (int p : spec.params) require(p >= 1, "complete_multipartite: sizes must be >= 1");
      return make_complete_multipartite(spec.params);
    case Family::star:
      require_params(spec, 1);
      return make_complete_multipartite({1, spec.params[0]});
    case Family::heawood:
      require_params(spec, 0);
      return make_heawood();
    case Family::petersen:
      require_params(spec, 0);
      return make_petersen();
    case Family::random_tree: {
      require_params(spec, 1);
      Rng rng = seeded_rng(spec);
      return Graph::from_edges(spec.params[0], random_tree_edges(spec.params[0], rng));
    }
    case Family::random_unicyclic: {
      require_params(spec, 1);
      Rng rng = seeded_rng(spec);
      return make_random_unicyclic(spec.params[0], rng);
    }
    case Family::random_bipartite_girth6: {
      require_params(spec, 2);
      Rng rng = seeded_rng(spec);
      return make_random_bipartite_girth6(spec.params[0], spec.params[1], rng);
    }
  }
  throw PreconditionError("unknown family");
}

}  // namespace distlabel
