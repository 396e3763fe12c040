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

#include "distlabel/exact.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "distlabel/constructive.hpp"
#include "distlabel/errors.hpp"
#include "distlabel/graph_io.hpp"
#include "distlabel/structure.hpp"

namespace distlabel {

namespace {

void require_nonempty(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("exact solver: need n >= 1");
}

// Distinguishing test reused across a whole sweep: loop the materialized
// group elements when the group is small, otherwise run the seeded
// automorphism search per labeling.
class DistinguishingChecker {
 public:
  DistinguishingChecker(const Graph& g, const ExactOptions& opts) : g_(g), aut_opts_(opts.aut) {
    AutOptions group_opts = opts.aut;
    group_opts.materialize_cap = std::min<std::uint64_t>(group_opts.materialize_cap,
                                                         opts.element_cap);
    group_ = automorphism_group(g, group_opts);
  }

  const AutGroup& group() const { return group_; }

  bool distinguishing(const std::vector<int>& labels) const {
    if (group_.elements) {
      for (const auto& p : *group_.elements) {
        if (p.is_identity()) continue;
        bool preserved = true;
        for (int v = 0; v < g_.order() && preserved; ++v)
          preserved = labels[p.image[v]] == labels[v];
        if (preserved) return false;
      }
      return true;
    }
    return !exists_color_preserving_nonidentity(g_, labels, aut_opts_).has_value();
  }

 private:
  const Graph& g_;
  AutOptions aut_opts_;
  AutGroup group_;
};

// Lowest-id vertex of a maximum orbit first, the rest ascending: combined
// with restricted-growth enumeration this pins that vertex to label 0, the
// quotient by label renaming the sweep relies on.
std::vector<int> sweep_vertex_order(const Graph& g, const AutGroup& group) {
  const auto orbs = orbits(group, g.order());
  std::size_t best = 0;
  for (std::size_t i = 1; i < orbs.size(); ++i)
    if (orbs[i].size() > orbs[best].size()) best = i;
  const int v0 = orbs.empty() ? 0 : orbs[best].front();
  std::vector<int> order{v0};
  for (int v = 0; v < g.order(); ++v)
    if (v != v0) order.push_back(v);
  return order;
}

struct EnumCounter {
  std::uint64_t nodes = 0;
  std::uint64_t cap = 0;
};

// Restricted-growth enumeration over `order` of labelings using exactly k
// distinct values, optionally proper at every step; sink returns true to
// stop the search. Returns true when the sink accepted a labeling.
bool enumerate_labelings(const Graph& g, const std::vector<int>& order, int k,
                         bool require_proper, EnumCounter& counter, std::vector<int>& labels,
                         const std::function<bool(const std::vector<int>&)>& sink) {
  const int n = g.order();
  const auto step = [&](auto&& self, int t, int max_used) -> bool {
    if (++counter.nodes > counter.cap)
      throw BudgetExceeded("labeling enumeration exceeded " + std::to_string(counter.cap) +
                           " nodes");
    if (t == n) return max_used + 1 == k && sink(labels);
    if (max_used + 1 + (n - t) < k) return false;  // cannot reach k values
    const int u = order[t];
    const int top = std::min(max_used + 1, k - 1);
    for (int l = 0; l <= top; ++l) {
      if (require_proper) {
        bool clash = false;
        for (int w : g.neighbors(u))
          if (labels[w] == l) {
            clash = true;
            break;
          }
        if (clash) continue;
      }
      labels[u] = l;
      if (self(self, t + 1, std::max(max_used, l))) return true;
      labels[u] = -1;
    }
    return false;
  };
  labels.assign(static_cast<std::size_t>(n), -1);
  return step(step, 0, -1);
}

}  // namespace

ExactResult chromatic_number(const Graph& g) {
  require_nonempty(g);
  const int n = g.order();

  // first-fit greedy upper bound
  std::vector<int> greedy(static_cast<std::size_t>(n), -1);
  int ub = 0;
  for (int v = 0; v < n; ++v) {
    int l = 0;
    for (bool clash = true; clash; ++l) {
      clash = false;
      for (int w : g.neighbors(v))
        if (greedy[w] == l) {
          clash = true;
          break;
        }
      if (!clash) break;
    }
    greedy[v] = l;
    ub = std::max(ub, l + 1);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> labels;
  for (int k = 1; k < ub; ++k) {
    EnumCounter counter{0, ~std::uint64_t{0}};
    if (enumerate_labelings(g, order, k, /*require_proper=*/true, counter, labels,
                            [](const std::vector<int>&) { return true; }))
      return {k, Labeling{labels}};
  }
  return {ub, Labeling{greedy}};
}

ExactResult distinguishing_number(const Graph& g, const ExactOptions& opts) {
  require_nonempty(g);
  const DistinguishingChecker checker(g, opts);
  const auto order = sweep_vertex_order(g, checker.group());
  EnumCounter counter{0, opts.max_enum_nodes};
  std::vector<int> labels;
  for (int r = 1; r <= g.order(); ++r) {
    try {
      if (enumerate_labelings(g, order, r, /*require_proper=*/false, counter, labels,
                              [&](const std::vector<int>& c) { return checker.distinguishing(c); }))
        return {r, Labeling{labels}};
    } catch (const BudgetExceeded&) {
      throw SolverBudgetExceeded("distinguishing_number ran out of nodes during the sweep at r = " +
                                     std::to_string(r),
                                 r, std::nullopt);
    }
  }
  throw ConstructionDefect("distinguishing_number: the all-distinct labeling was rejected");
}

ExactResult distinguishing_chromatic_number(const Graph& g, const ExactOptions& opts) {
  require_nonempty(g);
  const int n = g.order();
  const int chi = chromatic_number(g).value;

  // constructive labelings double as a primal bound for the sweep
  ExactResult upper{n, Labeling{}};
  upper.witness.labels.resize(static_cast<std::size_t>(n));
  std::iota(upper.witness.labels.begin(), upper.witness.labels.end(), 0);
  const int delta = g.max_degree();
  if (delta >= 3 && is_connected(g)) {
    std::optional<Labeling> primal;
    try {
      if (bipartition(g) && girth(g).at_least(6))
        primal = label_bipartite_girth6(g, opts.aut);
      else if (g.size() <= n)
        primal = label_unicyclic(g, opts.aut);
    } catch (const PreconditionError&) {
    } catch (const ConstructionDefect&) {
      // a failed primal heuristic never blocks the exact sweep
    }
    if (primal && primal->labels_used() < upper.value)
      upper = {primal->labels_used(), *primal};
  }

  const DistinguishingChecker checker(g, opts);
  const auto order = sweep_vertex_order(g, checker.group());
  EnumCounter counter{0, opts.max_enum_nodes};
  std::vector<int> labels;
  for (int k = chi; k < upper.value; ++k) {
    try {
      if (enumerate_labelings(g, order, k, /*require_proper=*/true, counter, labels,
                              [&](const std::vector<int>& c) { return checker.distinguishing(c); }))
        return {k, Labeling{labels}};
    } catch (const BudgetExceeded&) {
      throw SolverBudgetExceeded(
          "distinguishing_chromatic_number ran out of nodes during the sweep at k = " +
              std::to_string(k),
          k, upper);
    }
  }
  return upper;
}

ScanReport scan_conjecture(int max_n, const std::function<std::optional<Graph>()>& source,
                           const ExactOptions& opts) {
  ScanReport report;
  while (auto next = source()) {
    const Graph& g = *next;
    if (g.order() < 1 || g.order() > max_n) continue;
    if (g.max_degree() < 3) continue;
    if (!is_connected(g)) continue;
    if (!girth(g).at_least(5)) continue;
    const int delta = g.max_degree();
    try {
      const ExactResult res = distinguishing_chromatic_number(g, opts);
      ++report.checked;
      const int gap = delta + 1 - res.value;
      if (report.checked == 1 || gap > report.max_gap) report.max_gap = gap;
      if (res.value > delta + 1)
        report.counterexamples.push_back({to_graph6(g), g.order(), delta, res.value});
    } catch (const BudgetExceeded& e) {
      report.skipped.push_back({to_graph6(g), e.what()});
    }
  }
  return report;
}

std::string scan_report_text(const ScanReport& report) {
  std::ostringstream out;
  out << "checked: " << report.checked << "\n";
  out << "max_gap: ";
  if (report.any_checked())
    out << report.max_gap;
  else
    out << "n/a";
  out << "\n";
  out << "counterexamples: " << report.counterexamples.size() << "\n";
  for (const auto& c : report.counterexamples)
    out << "counterexample: " << c.graph6 << " n=" << c.n << " delta=" << c.delta
        << " chi_d=" << c.chi_d << "\n";
  out << "skipped: " << report.skipped.size() << "\n";
  for (const auto& s : report.skipped) out << "skip: " << s.graph6 << " " << s.reason << "\n";
  return out.str();
}

std::string scan_report_json(const ScanReport& report) {
  nlohmann::ordered_json doc;
  doc["checked"] = report.checked;
  doc["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples) {
    nlohmann::ordered_json entry;
    entry["graph6"] = c.graph6;
    entry["n"] = c.n;
    entry["delta"] = c.delta;
    entry["chi_d"] = c.chi_d;
    doc["counterexamples"].push_back(entry);
  }
  doc["skipped"] = nlohmann::ordered_json::array();
  for (const auto& s : report.skipped) {
    nlohmann::ordered_json entry;
    entry["graph6"] = s.graph6;
    entry["reason"] = s.reason;
    doc["skipped"].push_back(entry);
  }
  return doc.dump();
}

}  // namespace distlabel
