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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "distlabel/autom.hpp"
#include "distlabel/errors.hpp"
#include "distlabel/graph.hpp"
#include "distlabel/labeling.hpp"

namespace distlabel {

/// Exact optimum plus a witness attaining it with labels_used == value.
/// The sweep below `value` is exhaustive, so minimality is certified, not
/// assumed.
struct ExactResult {
  int value = 0;
  Labeling witness;
};

struct ExactOptions {
  AutOptions aut;
  /// Node cap for the labeling enumeration, separate from the automorphism
  /// budget.
  std::uint64_t max_enum_nodes = 500'000'000;
  /// Aut(g) element lists larger than this are not expanded for per-labeling
  /// checks; the seeded automorphism search is used instead.
  std::uint64_t element_cap = 100'000;
};

/// Thrown when the labeling enumeration runs out of nodes; carries what was
/// proven so far rather than nothing.
class SolverBudgetExceeded : public BudgetExceeded {
 public:
  SolverBudgetExceeded(const std::string& what, int proven_lower_bound,
                       std::optional<ExactResult> best_upper)
      : BudgetExceeded(what),
        proven_lower_bound(proven_lower_bound),
        best_upper(std::move(best_upper)) {}

  /// All label counts below this are proven infeasible.
  int proven_lower_bound;
  /// Best labeling found before the budget ran out, if any.
  std::optional<ExactResult> best_upper;
};

/// Chromatic number by backtracking (vertices ascending, labels ascending,
/// first-fit greedy initializes the sweep bound).
ExactResult chromatic_number(const Graph& g);

/// Distinguishing number: least r admitting a (not necessarily proper)
/// r-labeling preserved only by the identity.
ExactResult distinguishing_number(const Graph& g, const ExactOptions& opts = {});

/// Distinguishing chromatic number: least r admitting a labeling that is
/// proper and distinguishing at once. Sweeps r upward from the chromatic
/// number; labelings are enumerated up to label renaming with the lowest-id
/// vertex of a maximum orbit pinned to the first label; the distinguishing
/// test runs on complete proper labelings only.
ExactResult distinguishing_chromatic_number(const Graph& g, const ExactOptions& opts = {});

struct ScanCounterexample {
  std::string graph6;
  int n = 0;
  int delta = 0;
  int chi_d = 0;
};

struct ScanSkipped {
  std::string graph6;
  std::string reason;
};

struct ScanReport {
  std::uint64_t checked = 0;
  std::vector<ScanCounterexample> counterexamples;
  std::vector<ScanSkipped> skipped;
  /// max over checked graphs of (Delta + 1 - chi_D); meaningful when
  /// checked > 0.
  int max_gap = 0;
  bool any_checked() const { return checked > 0; }
};

/// Pulls graphs from `source` (empty result ends the stream), keeps those
/// that are connected with girth >= 5 (acyclic counts), Delta >= 3 and
/// n <= max_n, and computes the exact distinguishing chromatic number of
/// each. Graphs whose solve exceeds the budget are listed as skipped, never
/// counted as checked. Results appear in input order.
ScanReport scan_conjecture(int max_n, const std::function<std::optional<Graph>()>& source,
                           const ExactOptions& opts = {});

std::string scan_report_text(const ScanReport& report);
/// {"checked": ..., "counterexamples": [...], "skipped": [...]} with that
/// field order.
std::string scan_report_json(const ScanReport& report);

}  // namespace distlabel
