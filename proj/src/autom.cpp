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

#include "distlabel/autom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "distlabel/errors.hpp"

namespace distlabel {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < degree(); ++v)
    if (image[v] != v) return false;
  return true;
}

bool Permutation::is_valid() const {
  std::vector<bool> hit(image.size(), false);
  for (int v : image) {
    if (v < 0 || v >= degree() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image.resize(image.size());
  for (int v = 0; v < degree(); ++v) p.image[image[v]] = v;
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  Permutation p;
  p.image.resize(image.size());
  for (int v = 0; v < degree(); ++v) p.image[v] = image[first.image[v]];
  return p;
}

bool preserves_edges(const Permutation& p, const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      if (!g.has_edge(p.image[u], p.image[v])) return false;
    }
  return true;
}

OrderedPartition OrderedPartition::unit(int n) {
  OrderedPartition p;
  if (n > 0) {
    p.cells.emplace_back(static_cast<std::size_t>(n));
    std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
  }
  return p;
}

OrderedPartition OrderedPartition::from_labels(const std::vector<int>& labels) {
  std::map<int, std::vector<int>> by_label;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) by_label[labels[v]].push_back(v);
  OrderedPartition p;
  for (auto& [label, cell] : by_label) p.cells.push_back(std::move(cell));
  return p;
}

bool OrderedPartition::is_valid(int n) const {
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  std::size_t covered = 0;
  for (const auto& cell : cells) {
    if (cell.empty()) return false;
    for (int v : cell) {
      if (v < 0 || v >= n || hit[v]) return false;
      hit[v] = true;
      ++covered;
    }
  }
  return covered == static_cast<std::size_t>(n);
}

bool OrderedPartition::discrete() const {
  for (const auto& cell : cells)
    if (cell.size() != 1) return false;
  return true;
}

OrderedPartition refine(const Graph& g, OrderedPartition p) {
  const int n = g.order();
  if (!p.is_valid(n)) throw PreconditionError("refine: not a partition of the vertex set");
  auto& cells = p.cells;
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());

  std::vector<int> cell_of(static_cast<std::size_t>(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);

    for (std::size_t target = 0; target < cells.size() && !changed; ++target) {
      if (cells[target].size() == 1) continue;
      for (std::size_t splitter = 0; splitter < cells.size() && !changed; ++splitter) {
        // neighbor count of each target member into the splitter cell
        std::vector<std::pair<int, int>> keyed;  // (count, vertex)
        keyed.reserve(cells[target].size());
        bool uniform = true;
        for (int v : cells[target]) {
          int count = 0;
          for (int w : g.neighbors(v)) count += cell_of[w] == static_cast<int>(splitter);
          keyed.emplace_back(count, v);
          uniform = uniform && count == keyed.front().first;
        }
        if (uniform) continue;

        // split in place: fragments ordered by ascending count
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::vector<int>> fragments;
        int prev_count = keyed.front().first - 1;
        for (const auto& [count, v] : keyed) {
          if (count != prev_count) {
            fragments.emplace_back();
            prev_count = count;
          }
          fragments.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(target));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(target),
                     std::make_move_iterator(fragments.begin()),
                     std::make_move_iterator(fragments.end()));
        changed = true;
      }
    }
  }
  return p;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

OrderedPartition individualize(const OrderedPartition& p, std::size_t cell_idx, int u) {
  OrderedPartition out;
  out.cells.reserve(p.cells.size() + 1);
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    if (c != cell_idx) {
      out.cells.push_back(p.cells[c]);
      continue;
    }
    out.cells.push_back({u});
    std::vector<int> rest;
    rest.reserve(p.cells[c].size() - 1);
    for (int v : p.cells[c])
      if (v != u) rest.push_back(v);
    out.cells.push_back(std::move(rest));
  }
  return out;
}

// Individualization-refinement backtracking. Leaves are discrete partitions;
// the first leaf is the reference, and every later leaf whose induced vertex
// map preserves edges contributes an automorphism. Siblings already covered
// by the group found so far (restricted to elements fixing the current path
// pointwise) are skipped.
class IrSearch {
 public:
  IrSearch(const Graph& g, const AutOptions& opts, bool early_exit)
      : g_(g), opts_(opts), early_exit_(early_exit) {}

  void run(OrderedPartition start) { search(std::move(start)); }

  const std::vector<Permutation>& generators() const { return gens_; }
  const std::optional<Permutation>& witness() const { return witness_; }

 private:
  void search(OrderedPartition pi) {
    if (++nodes_ > opts_.max_nodes)
      throw BudgetExceeded("automorphism search exceeded " + std::to_string(opts_.max_nodes) +
                           " nodes");
    pi = refine(g_, pi);

    std::size_t cell_idx = pi.cells.size();
    for (std::size_t c = 0; c < pi.cells.size(); ++c)
      if (pi.cells[c].size() > 1) {
        cell_idx = c;
        break;
      }
    if (cell_idx == pi.cells.size()) {
      handle_leaf(pi);
      return;
    }

    const std::vector<int> candidates = pi.cells[cell_idx];
    std::vector<int> tried;
    for (int u : candidates) {
      if (early_exit_ && witness_) return;
      if (!tried.empty() && covered_by_known(u, tried)) continue;
      tried.push_back(u);
      path_.push_back(u);
      search(individualize(pi, cell_idx, u));
      path_.pop_back();
    }
  }

  // True iff some known automorphism fixing the current path pointwise maps
  // an already-tried sibling to u.
  bool covered_by_known(int u, const std::vector<int>& tried) {
    if (gens_.empty()) return false;
    UnionFind uf(g_.order());
    bool any = false;
    for (const auto& perm : gens_) {
      bool fixes_path = true;
      for (int p : path_)
        if (perm.image[p] != p) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      any = true;
      for (int v = 0; v < g_.order(); ++v) uf.unite(v, perm.image[v]);
    }
    if (!any) return false;
    const int ru = uf.find(u);
    for (int t : tried)
      if (uf.find(t) == ru) return true;
    return false;
  }

  void handle_leaf(const OrderedPartition& pi) {
    std::vector<int> vertex_at_pos(pi.cells.size());
    for (std::size_t k = 0; k < pi.cells.size(); ++k) vertex_at_pos[k] = pi.cells[k][0];
    if (!have_first_leaf_) {
      first_leaf_ = std::move(vertex_at_pos);
      have_first_leaf_ = true;
      return;
    }
    Permutation sigma;
    sigma.image.resize(static_cast<std::size_t>(g_.order()));
    for (std::size_t k = 0; k < first_leaf_.size(); ++k)
      sigma.image[first_leaf_[k]] = vertex_at_pos[k];
    if (sigma.is_identity()) return;
    if (!preserves_edges(sigma, g_)) return;
    if (std::find(gens_.begin(), gens_.end(), sigma) == gens_.end()) gens_.push_back(sigma);
    if (early_exit_ && !witness_) witness_ = std::move(sigma);
  }

  const Graph& g_;
  AutOptions opts_;
  bool early_exit_;
  std::uint64_t nodes_ = 0;
  std::vector<int> path_;
  std::vector<int> first_leaf_;
  bool have_first_leaf_ = false;
  std::vector<Permutation> gens_;
  std::optional<Permutation> witness_;
};

// Deterministic Schreier-Sims: incremental stabilizer chain re-verified until
// every Schreier generator sifts to the identity. Order is the product of
// the basic orbit sizes.
class StabilizerChain {
 public:
  StabilizerChain(int n, const std::vector<Permutation>& gens) : n_(n) {
    levels_.reserve(static_cast<std::size_t>(n) + 1);  // references stay stable
    for (const auto& g : gens)
      if (!g.is_identity()) add_level_generator(g, 0);
    verify();
  }

  unsigned long long order() const {
    unsigned __int128 o = 1;
    for (const auto& lvl : levels_) {
      o *= lvl.transversal.size();
      if (o > static_cast<unsigned __int128>(~0ULL))
        throw BudgetExceeded("automorphism group order exceeds the 64-bit range");
    }
    return static_cast<unsigned long long>(o);
  }

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;
    std::map<int, Permutation> transversal;  // v -> element mapping base_point to v
  };

  void rebuild_orbit(Level& lvl) {
    lvl.transversal.clear();
    lvl.transversal.emplace(lvl.base_point, Permutation::identity(n_));
    std::vector<int> queue{lvl.base_point};
    while (!queue.empty()) {
      const int w = queue.back();
      queue.pop_back();
      const Permutation reach = lvl.transversal.at(w);
      for (const auto& s : lvl.gens) {
        const int v = s.image[w];
        if (lvl.transversal.count(v)) continue;
        lvl.transversal.emplace(v, s.after(reach));
        queue.push_back(v);
      }
    }
  }

  // Residue of p after dividing out transversal elements from `level` on;
  // also reports the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t level) const {
    for (std::size_t i = level; i < levels_.size(); ++i) {
      const int v = p.image[levels_[i].base_point];
      auto it = levels_[i].transversal.find(v);
      if (it == levels_[i].transversal.end()) return {std::move(p), i};
      p = it->second.inverse().after(p);
    }
    return {std::move(p), levels_.size()};
  }

  // Insert p (known to fix base points below `level`) at levels
  // level..stop_level, extending the base when p fixes the whole base.
  void add_level_generator(const Permutation& p, std::size_t level) {
    auto [residue, stop] = sift(p, level);
    if (residue.is_identity()) return;
    if (stop == levels_.size()) {
      int moved = -1;
      for (int v = 0; v < n_; ++v)
        if (residue.image[v] != v) {
          moved = v;
          break;
        }
      levels_.emplace_back();
      levels_.back().base_point = moved;
    }
    for (std::size_t l = level; l <= stop && l < levels_.size(); ++l) {
      levels_[l].gens.push_back(residue);
      rebuild_orbit(levels_[l]);
    }
  }

  void verify() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < levels_.size() && !changed; ++i) {
        Level& lvl = levels_[i];
        for (const auto& [u, reach_u] : lvl.transversal) {
          for (const auto& s : lvl.gens) {
            const int v = s.image[u];
            const Permutation schreier = lvl.transversal.at(v).inverse().after(s.after(reach_u));
            if (schreier.is_identity()) continue;
            auto [residue, stop] = sift(schreier, i + 1);
            if (residue.is_identity()) continue;
            add_level_generator(residue, i + 1);
            changed = true;
            break;
          }
          if (changed) break;
        }
      }
    }
  }

  int n_;
  std::vector<Level> levels_;
};

}  // namespace

AutGroup automorphism_group(const Graph& g, const AutOptions& opts) {
  if (g.order() < 1) throw PreconditionError("automorphism_group: need n >= 1");
  IrSearch search(g, opts, /*early_exit=*/false);
  search.run(OrderedPartition::unit(g.order()));

  AutGroup group;
  group.degree = g.order();
  group.generators = search.generators();
  group.order = StabilizerChain(g.order(), group.generators).order();
  if (group.order <= opts.materialize_cap) {
    auto closure = materialize_elements(group.generators, g.order(), opts.materialize_cap);
    if (!closure || closure->size() != group.order)
      throw ConstructionDefect(
          "group order disagreement: stabilizer chain says " + std::to_string(group.order) +
          ", closure found " + std::to_string(closure ? closure->size() : 0));
    group.elements = std::move(closure);
  }
  return group;
}

std::vector<std::vector<int>> orbits(const AutGroup& group, int n) {
  if (group.degree != n) throw PreconditionError("orbits: group degree does not match n");
  UnionFind uf(n);
  for (const auto& p : group.generators)
    for (int v = 0; v < n; ++v) uf.unite(v, p.image[v]);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

std::optional<Permutation> exists_color_preserving_nonidentity(const Graph& g,
                                                               const std::vector<int>& labels,
                                                               const AutOptions& opts) {
  if (static_cast<int>(labels.size()) != g.order())
    throw PreconditionError("labeling size does not match vertex count");
  if (g.order() == 0) return std::nullopt;
  IrSearch search(g, opts, /*early_exit=*/true);
  search.run(OrderedPartition::from_labels(labels));
  return search.witness();
}

bool generators_preserve(const AutGroup& h_group, const Graph& g) {
  if (h_group.degree != g.order())
    throw PreconditionError("generators_preserve: group degree does not match graph order");
  for (const auto& p : h_group.generators)
    if (!preserves_edges(p, g)) return false;
  return true;
}

std::optional<std::vector<Permutation>> materialize_elements(
    const std::vector<Permutation>& generators, int n, std::uint64_t cap) {
  std::vector<Permutation> elements{Permutation::identity(n)};
  std::set<std::vector<int>> seen{elements[0].image};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const Permutation current = elements[head];
    for (const auto& s : generators) {
      Permutation next = s.after(current);
      if (seen.count(next.image)) continue;
      if (elements.size() + 1 > cap) return std::nullopt;
      seen.insert(next.image);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace distlabel
