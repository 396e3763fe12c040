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

// Command-line surface. Exit codes are part of the interface:
//   0 pass, 1 semantic negative (not distinguishing / counterexample found),
//   2 usage or parse or precondition error, 3 budget exceeded,
//   4 internal construction defect.
// Parseable results go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "distlabel/constructive.hpp"
#include "distlabel/errors.hpp"
#include "distlabel/exact.hpp"
#include "distlabel/gen.hpp"
#include "distlabel/graph_io.hpp"
#include "distlabel/labeling.hpp"
#include "distlabel/structure.hpp"

namespace {

using namespace distlabel;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDefect = 4;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string detect_format(const std::string& path, const std::string& requested) {
  if (requested != "auto") return requested;
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".col") return "dimacs";
  if (path.size() >= 7 && path.substr(path.size() - 7) == ".dimacs") return "dimacs";
  return "graph6";
}

Graph read_graph(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  if (detect_format(path, format) == "dimacs") return parse_dimacs(text);
  // first non-empty line of a graph6 input
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return parse_graph6(line);
  }
  throw ParseError("no graph6 line in input", 0);
}

std::string permutation_text(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.image.size(); ++i)
    out += (i ? "," : "") + std::to_string(p.image[i]);
  return out + "]";
}

struct Options {
  std::string input = "-";
  std::string format = "auto";
  std::string output = "text";
  std::string method = "auto";
  std::string quantity;
  std::string labeling_path;
  std::string family;
  std::vector<int> params;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  int max_n = 10;

  AutOptions aut() const {
    AutOptions a;
    if (budget) a.max_nodes = *budget;
    return a;
  }
  ExactOptions exact() const {
    ExactOptions e;
    e.aut = aut();
    if (budget) e.max_enum_nodes = *budget;
    return e;
  }
};

int cmd_analyze(const Options& opt) {
  const Graph g = read_graph(opt.input, opt.format);
  const Girth gr = girth(g);
  const bool bip = bipartition(g).has_value();
  const bool conn = is_connected(g);

  std::optional<unsigned long long> aut_order;
  std::string budget_note;
  try {
    if (g.order() >= 1) aut_order = automorphism_group(g, opt.aut()).order;
    else aut_order = 1;
  } catch (const BudgetExceeded& e) {
    budget_note = e.what();
  }

  const std::string girth_text = gr.acyclic() ? "inf" : std::to_string(*gr.value);
  if (opt.output == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = g.order();
    doc["m"] = g.size();
    doc["delta"] = g.max_degree();
    if (gr.acyclic()) doc["girth"] = nullptr;
    else doc["girth"] = *gr.value;
    doc["bipartite"] = bip;
    doc["connected"] = conn;
    if (aut_order) doc["aut_order"] = *aut_order;
    else doc["aut_order"] = nullptr;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "n=" << g.order() << " m=" << g.size() << " delta=" << g.max_degree()
              << " girth=" << girth_text << " bipartite=" << (bip ? "yes" : "no")
              << " connected=" << (conn ? "yes" : "no") << " aut_order=";
    if (aut_order) std::cout << *aut_order;
    else std::cout << "unknown";
    std::cout << "\n";
  }
  if (!aut_order) {
    std::cerr << "automorphism budget exceeded: " << budget_note << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_label(const Options& opt) {
  const Graph g = read_graph(opt.input, opt.format);
  const int delta = g.max_degree();
  std::string method = opt.method;
  if (method == "auto") {
    if (delta >= 3 && is_connected(g) && bipartition(g).has_value() && girth(g).at_least(6))
      method = "theorem2";
    else if (delta >= 3 && is_connected(g) && g.size() <= g.order())
      method = "unicyclic";
    else
      throw PreconditionError(
          "no method applies: need (bipartite, girth >= 6, max degree >= 3) or "
          "(connected, m <= n, max degree >= 3)");
  }

  Labeling f;
  if (method == "theorem2") {
    f = label_bipartite_girth6(g, opt.aut());
  } else if (method == "unicyclic") {
    f = label_unicyclic(g, opt.aut());
  } else if (method == "tree") {
    if (g.size() != g.order() - 1 || !is_connected(g))
      throw PreconditionError("method tree: input is not a tree");
    f = label_unicyclic(g, opt.aut());
  } else {
    throw PreconditionError("unknown method: " + method);
  }
  std::cout << labeling_to_json(f) << "\n";
  return kExitOk;
}

int cmd_exact(const Options& opt) {
  const Graph g = read_graph(opt.input, opt.format);
  try {
    ExactResult res;
    if (opt.quantity == "chi") res = chromatic_number(g);
    else if (opt.quantity == "d") res = distinguishing_number(g, opt.exact());
    else if (opt.quantity == "chid") res = distinguishing_chromatic_number(g, opt.exact());
    else throw PreconditionError("unknown quantity: " + opt.quantity);

    if (opt.output == "json") {
      nlohmann::ordered_json doc;
      doc["quantity"] = opt.quantity;
      doc["value"] = res.value;
      doc["witness"] = nlohmann::ordered_json::parse(labeling_to_json(res.witness));
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << res.value << "\n";
    }
    return kExitOk;
  } catch (const SolverBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    std::cerr << "proven lower bound: " << e.proven_lower_bound << "\n";
    if (e.best_upper)
      std::cerr << "best upper bound: " << e.best_upper->value << " with witness "
                << labeling_to_json(e.best_upper->witness) << "\n";
    return kExitBudget;
  }
}

int cmd_verify(const Options& opt) {
  const Graph g = read_graph(opt.input, opt.format);
  const Labeling f = labeling_from_json(slurp(opt.labeling_path));
  const VerifyReport rep = verify(g, f, opt.aut());

  if (opt.output == "json") {
    nlohmann::ordered_json doc;
    doc["proper"] = rep.proper;
    doc["distinguishing"] = rep.distinguishing;
    doc["labels_used"] = rep.labels_used;
    if (rep.violating_edge)
      doc["violating_edge"] = {rep.violating_edge->first, rep.violating_edge->second};
    else
      doc["violating_edge"] = nullptr;
    if (rep.witness) doc["witness"] = rep.witness->image;
    else doc["witness"] = nullptr;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "proper=" << (rep.proper ? "yes" : "no")
              << " distinguishing=" << (rep.distinguishing ? "yes" : "no")
              << " labels_used=" << rep.labels_used << "\n";
    if (rep.violating_edge)
      std::cout << "violating_edge=(" << rep.violating_edge->first << ","
                << rep.violating_edge->second << ")\n";
    if (rep.witness) std::cout << "witness=" << permutation_text(*rep.witness) << "\n";
  }
  return rep.ok() ? kExitOk : kExitNegative;
}

int cmd_gen(const Options& opt) {
  const auto family = family_from_string(opt.family);
  if (!family) throw PreconditionError("unknown family: " + opt.family);
  FamilySpec spec{*family, opt.params, opt.seed};
  std::cout << to_graph6(generate(spec)) << "\n";
  return kExitOk;
}

int cmd_scan(const Options& opt) {
  const std::string text = slurp(opt.input);
  std::istringstream in(text);
  std::vector<Graph> graphs;
  for_each_graph6(in, [&](const Graph& g) { graphs.push_back(g); });

  std::size_t next = 0;
  const auto source = [&]() -> std::optional<Graph> {
    if (next >= graphs.size()) return std::nullopt;
    return graphs[next++];
  };
  const ScanReport report = scan_conjecture(opt.max_n, source, opt.exact());
  if (opt.output == "json") std::cout << scan_report_json(report) << "\n";
  else std::cout << scan_report_text(report);
  if (!report.counterexamples.empty()) return kExitNegative;
  if (!report.skipped.empty()) return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proper distinguishing labelings: constructive labelers, exact solvers, "
               "automorphism tools"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("DISTLABEL_BUDGET")) {
    try {
      opt.budget = std::stoull(env);
    } catch (...) {
      std::cerr << "DISTLABEL_BUDGET is not a number: " << env << "\n";
      return kExitUsage;
    }
  }

  const auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("input", opt.input, "input path, or - for stdin")->capture_default_str();
    sub->add_option("--format", opt.format, "graph6|dimacs (default: by file extension)")
        ->check(CLI::IsMember({"auto", "graph6", "dimacs"}))
        ->capture_default_str();
    sub->add_option("--output", opt.output, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--budget", opt.budget, "search node budget override");
  };

  auto* analyze = app.add_subcommand("analyze", "structural summary of a graph");
  add_common(analyze);

  auto* label = app.add_subcommand("label", "construct a proper distinguishing labeling");
  add_common(label);
  label->add_option("--method", opt.method, "theorem2|unicyclic|tree|auto")
      ->check(CLI::IsMember({"theorem2", "unicyclic", "tree", "auto"}))
      ->capture_default_str();

  auto* exact = app.add_subcommand("exact", "exact chi / d / chid with witness");
  exact->add_option("quantity", opt.quantity, "chi|d|chid")
      ->required()
      ->check(CLI::IsMember({"chi", "d", "chid"}));
  add_common(exact);

  auto* verify_cmd = app.add_subcommand("verify", "check a labeling against a graph");
  add_common(verify_cmd);
  verify_cmd->add_option("--labeling", opt.labeling_path, "labeling JSON file")->required();

  auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
  gen->add_option("family", opt.family, "family name")->required();
  gen->add_option("params", opt.params, "family parameters");
  gen->add_option("--seed", opt.seed, "seed for random families");

  auto* scan = app.add_subcommand("scan-conjecture",
                                  "exact chi_D over a girth>=5 graph6 stream");
  add_common(scan);
  scan->add_option("--max-n", opt.max_n, "largest order to check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opt);
    if (app.got_subcommand(label)) return cmd_label(opt);
    if (app.got_subcommand(exact)) return cmd_exact(opt);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(opt);
    if (app.got_subcommand(gen)) return cmd_gen(opt);
    if (app.got_subcommand(scan)) return cmd_scan(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GenerationInfeasible& e) {
    std::cerr << "generation infeasible: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConstructionDefect& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return kExitDefect;
  }
  return kExitUsage;
}
