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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "distlabel/errors.hpp"
#include "distlabel/exact.hpp"
#include "distlabel/gen.hpp"
#include "distlabel/graph_io.hpp"
#include "distlabel/labeling.hpp"
#include "distlabel/structure.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"

using namespace distlabel;

namespace {

Graph gen_family(Family f, std::vector<int> params = {}) {
  return generate({f, std::move(params), std::nullopt});
}

void check_witness(const Graph& g, const ExactResult& res, bool need_proper,
                   bool need_distinguishing) {
  CHECK(res.witness.labels_used() == res.value);
  const VerifyReport rep = verify(g, res.witness);
  if (need_proper) CHECK(rep.proper);
  if (need_distinguishing) CHECK(rep.distinguishing);
}

}  // namespace

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(gen_family(Family::cycle, {6})).value == 2);
  CHECK(chromatic_number(gen_family(Family::cycle, {5})).value == 3);
  CHECK(chromatic_number(gen_family(Family::complete_bipartite, {3, 3})).value == 2);
  CHECK(chromatic_number(gen_family(Family::complete, {7})).value == 7);
  CHECK(chromatic_number(gen_family(Family::petersen)).value == 3);
  CHECK(chromatic_number(Graph(1)).value == 1);

  const ExactResult res = chromatic_number(gen_family(Family::cycle, {7}));
  CHECK(res.value == 3);
  check_witness(gen_family(Family::cycle, {7}), res, true, false);
}

TEST_CASE("distinguishing number") {
  CHECK(distinguishing_number(gen_family(Family::cycle, {5})).value == 3);
  CHECK(distinguishing_number(gen_family(Family::complete, {4})).value == 4);

  const Graph rigid = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}});
  REQUIRE(automorphism_group(rigid).order == 1);
  CHECK(distinguishing_number(rigid).value == 1);

  // the witness is distinguishing but need not be proper
  const ExactResult res = distinguishing_number(gen_family(Family::cycle, {5}));
  check_witness(gen_family(Family::cycle, {5}), res, false, true);
}

TEST_CASE("distinguishing chromatic number golden values") {
  CHECK(distinguishing_chromatic_number(gen_family(Family::cycle, {6})).value == 4);
  CHECK(distinguishing_chromatic_number(gen_family(Family::complete_bipartite, {3, 3})).value ==
        6);
  CHECK(distinguishing_chromatic_number(gen_family(Family::complete_multipartite, {2, 2, 2}))
            .value == 6);
  CHECK(distinguishing_chromatic_number(gen_family(Family::complete_bipartite, {4, 4})).value ==
        8);
  CHECK(distinguishing_chromatic_number(gen_family(Family::cycle, {5})).value == 3);
  CHECK(distinguishing_chromatic_number(gen_family(Family::petersen)).value == 4);
  CHECK(distinguishing_chromatic_number(gen_family(Family::heawood)).value == 4);

  const ExactResult res = distinguishing_chromatic_number(gen_family(Family::cycle, {6}));
  check_witness(gen_family(Family::cycle, {6}), res, true, true);
}

TEST_CASE("cycle and path values, all solver-derived") {
  // cycles: chi_D is 3-4-3-4 for n = 3..6, then settles at 3
  const std::vector<int> chid_expect{3, 4, 3, 4, 3, 3, 3, 3};
  const std::vector<int> d_expect{3, 3, 3, 2, 2, 2, 2, 2};
  for (int n = 3; n <= 10; ++n) {
    const Graph c = gen_family(Family::cycle, {n});
    CHECK(distinguishing_chromatic_number(c).value == chid_expect[static_cast<std::size_t>(n - 3)]);
    CHECK(distinguishing_number(c).value == d_expect[static_cast<std::size_t>(n - 3)]);
  }
  // paths: P_2 and P_3 need every label; longer paths settle at 2/3
  CHECK(distinguishing_chromatic_number(gen_family(Family::path, {2})).value == 2);
  CHECK(distinguishing_chromatic_number(gen_family(Family::path, {3})).value == 3);
  CHECK(distinguishing_chromatic_number(gen_family(Family::path, {4})).value == 2);
  CHECK(distinguishing_chromatic_number(gen_family(Family::path, {5})).value == 3);
  CHECK(distinguishing_chromatic_number(gen_family(Family::path, {6})).value == 2);
}

TEST_CASE("scan confirms the girth-6 bound on the Heawood graph") {
  std::vector<Graph> stream{gen_family(Family::heawood)};
  std::size_t i = 0;
  const auto source = [&]() -> std::optional<Graph> {
    if (i >= stream.size()) return std::nullopt;
    return stream[i++];
  };
  const ScanReport rep = scan_conjecture(14, source);
  CHECK(rep.checked == 1);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.max_gap == 0);  // chi_D = 4 = Delta + 1 exactly
}

TEST_CASE("solver agrees with the naive oracle on every connected graph up to 5") {
  // the full n <= 6 sweep runs in the acceptance suite
  for (const Graph& g : testsupport::enumerate_connected(5)) {
    CHECK(distinguishing_chromatic_number(g).value ==
          testsupport::naive_distinguishing_chromatic_number(g));
    CHECK(distinguishing_number(g).value == testsupport::naive_distinguishing_number(g));
  }
}

TEST_CASE("order relations among the three quantities") {
  for (const Graph& g : testsupport::enumerate_connected(6)) {
    const int chi = chromatic_number(g).value;
    const int d = distinguishing_number(g).value;
    const int chid = distinguishing_chromatic_number(g).value;
    CHECK(chi <= chid);
    CHECK(d <= chid);
    CHECK(chid <= g.order());
    if (automorphism_group(g).order == 1) CHECK(chid == chi);
  }
}

TEST_CASE("witness minimality is certified by the sweep") {
  // re-check minimality with the naive oracle at value-1
  for (const Graph& g : testsupport::enumerate_connected(5)) {
    const ExactResult res = distinguishing_chromatic_number(g);
    check_witness(g, res, true, true);
    CHECK(testsupport::naive_distinguishing_chromatic_number(g) == res.value);
  }
}

TEST_CASE("budget exceeded carries partial bounds") {
  ExactOptions tight;
  tight.max_enum_nodes = 50;
  try {
    distinguishing_chromatic_number(gen_family(Family::complete_bipartite, {4, 4}), tight);
    FAIL("expected SolverBudgetExceeded");
  } catch (const SolverBudgetExceeded& e) {
    CHECK(e.proven_lower_bound >= 2);
    REQUIRE(e.best_upper.has_value());
    CHECK(e.best_upper->value == 8);  // the all-distinct fallback bound
  }
}

TEST_CASE("conjecture scan") {
  std::vector<Graph> stream{gen_family(Family::petersen), gen_family(Family::cycle, {4}),
                            gen_family(Family::complete, {5}),
                            gen_family(Family::star, {4}),
                            gen_family(Family::complete_bipartite, {3, 3})};
  std::size_t i = 0;
  const auto source = [&]() -> std::optional<Graph> {
    if (i >= stream.size()) return std::nullopt;
    return stream[i++];
  };
  const ScanReport rep = scan_conjecture(10, source);
  // Petersen (girth 5) and the star (acyclic) pass the filter; C_4 (girth 4),
  // K_5 (girth 3) and K_{3,3} (girth 4) do not
  CHECK(rep.checked == 2);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.skipped.empty());
  // Petersen: chi_D = 4 = delta + 1; star K_{1,4}: chi_D = 5 = delta + 1
  CHECK(rep.max_gap == 0);

  const std::string text = scan_report_text(rep);
  CHECK(text.find("checked: 2") != std::string::npos);
  CHECK(text.find("counterexamples: 0") != std::string::npos);
  const std::string json = scan_report_json(rep);
  CHECK(json == R"({"checked":2,"counterexamples":[],"skipped":[]})");
}

TEST_CASE("scan lists budget-exceeded graphs as skipped") {
  std::vector<Graph> stream{gen_family(Family::star, {9})};
  std::size_t i = 0;
  const auto source = [&]() -> std::optional<Graph> {
    if (i >= stream.size()) return std::nullopt;
    return stream[i++];
  };
  ExactOptions tight;
  tight.max_enum_nodes = 10;
  const ScanReport rep = scan_conjecture(10, source, tight);
  CHECK(rep.checked == 0);
  REQUIRE(rep.skipped.size() == 1);
  CHECK(rep.skipped[0].graph6 == to_graph6(gen_family(Family::star, {9})));

  const std::string text = scan_report_text(rep);
  CHECK(text.find("skipped: 1") != std::string::npos);
  CHECK(text.find("max_gap: n/a") != std::string::npos);
}

TEST_CASE("girth-4 stream filters to nothing") {
  std::vector<Graph> stream{gen_family(Family::cycle, {4}),
                            gen_family(Family::complete_bipartite, {2, 2}),
                            gen_family(Family::complete_bipartite, {3, 3})};
  std::size_t i = 0;
  const auto source = [&]() -> std::optional<Graph> {
    if (i >= stream.size()) return std::nullopt;
    return stream[i++];
  };
  const ScanReport rep = scan_conjecture(10, source);
  CHECK(rep.checked == 0);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.skipped.empty());
}
