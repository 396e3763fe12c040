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

#include "distlabel/labeling.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "distlabel/errors.hpp"

namespace distlabel {

namespace {

void require_sized(const Graph& g, const Labeling& f) {
  if (static_cast<int>(f.labels.size()) != g.order())
    throw PreconditionError("labeling has " + std::to_string(f.labels.size()) +
                            " entries for a graph on " + std::to_string(g.order()) +
                            " vertices");
  for (int l : f.labels)
    if (l < 0) throw PreconditionError("labels must be non-negative");
}

}  // namespace

int Labeling::labels_used() const {
  return static_cast<int>(std::set<int>(labels.begin(), labels.end()).size());
}

bool is_proper(const Graph& g, const Labeling& f) {
  require_sized(g, f);
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v && f.labels[u] == f.labels[v]) return false;
  return true;
}

bool is_distinguishing(const Graph& g, const Labeling& f, const AutOptions& opts) {
  require_sized(g, f);
  return !exists_color_preserving_nonidentity(g, f.labels, opts).has_value();
}

VerifyReport verify(const Graph& g, const Labeling& f, const AutOptions& opts) {
  require_sized(g, f);
  VerifyReport rep;
  rep.labels_used = f.labels_used();
  rep.proper = true;
  for (int u = 0; u < g.order() && rep.proper; ++u)
    for (int v : g.neighbors(u))
      if (u < v && f.labels[u] == f.labels[v]) {
        rep.proper = false;
        rep.violating_edge = {u, v};
        break;
      }
  rep.witness = exists_color_preserving_nonidentity(g, f.labels, opts);
  rep.distinguishing = !rep.witness.has_value();
  return rep;
}

std::string labeling_to_json(const Labeling& f) {
  nlohmann::ordered_json doc;
  doc["n"] = f.labels.size();
  doc["labels"] = f.labels;
  doc["labels_used"] = f.labels_used();
  return doc.dump();
}

Labeling labeling_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("labeling JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("labels") ||
      !doc["labels"].is_array())
    throw ParseError("labeling JSON: expected object with n and labels", 0);
  Labeling f;
  f.labels = doc["labels"].get<std::vector<int>>();
  if (doc["n"].get<std::size_t>() != f.labels.size())
    throw ParseError("labeling JSON: n does not match labels length", 0);
  for (int l : f.labels)
    if (l < 0) throw ParseError("labeling JSON: labels must be non-negative", 0);
  return f;
}

}  // namespace distlabel
