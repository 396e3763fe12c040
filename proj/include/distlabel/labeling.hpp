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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distlabel/autom.hpp"
#include "distlabel/graph.hpp"

namespace distlabel {

/// Vertex labeling: labels[v] is a non-negative integer. The alphabet is
/// whatever values appear (label 0 is as good as any other); labels_used()
/// counts distinct values.
struct Labeling {
  std::vector<int> labels;

  int labels_used() const;

  bool operator==(const Labeling& other) const = default;
};

/// True iff no edge joins equal labels. Throws PreconditionError on size
/// mismatch.
bool is_proper(const Graph& g, const Labeling& f);

/// True iff the identity is the only automorphism preserving every label.
bool is_distinguishing(const Graph& g, const Labeling& f, const AutOptions& opts = {});

/// Conjunction report for a candidate labeling, with a witness for whichever
/// half fails: a violating edge when not proper, a non-identity
/// label-preserving automorphism when not distinguishing.
struct VerifyReport {
  bool proper = false;
  bool distinguishing = false;
  int labels_used = 0;
  std::optional<std::pair<int, int>> violating_edge;
  std::optional<Permutation> witness;

  bool ok() const { return proper && distinguishing; }
};

VerifyReport verify(const Graph& g, const Labeling& f, const AutOptions& opts = {});

/// JSON document {"n": ..., "labels": [...], "labels_used": ...} with that
/// exact field order.
std::string labeling_to_json(const Labeling& f);
Labeling labeling_from_json(const std::string& text);

}  // namespace distlabel
