// Copyright 2026 The imrf Authors
//
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

#include <doctest.h>

#include <numeric>

#include "imrf/diagram.hpp"
#include "imrf/fcmi.hpp"
#include "imrf/subfield.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace imrf;

namespace {

// Direct (B1)-(B3) bookkeeping from the types of both children.
Action action_by_types(const Graph& cur, int m, const Atom& a) {
  VertexSet u_out = a.complemented();
  u_out.insert(m);
  const bool in_type1 = type_of_atom(cur, Atom(m, a.complemented())) == AtomType::TypeI;
  const bool out_type1 = type_of_atom(cur, Atom(m, u_out)) == AtomType::TypeI;
  REQUIRE((in_type1 || out_type1));
  if (in_type1 && out_type1) return Action::Split;
  return in_type1 ? Action::Include : Action::Exclude;
}

Action action_of(const DiagramPlan& plan, int m, const char* atom) {
  const Atom a = parse_atom(atom);
  for (const Classification& c : plan.steps[static_cast<std::size_t>(m - 2)].atoms)
    if (c.atom == a) return c.action;
  FAIL("atom not classified");
  return Action::Split;
}

}  // namespace

TEST_CASE("elimination sequences") {
  const auto seq = elimination_sequence(Graph::path(6));
  for (int m = 1; m <= 6; ++m) CHECK(seq[static_cast<std::size_t>(m - 1)] == remove(Graph::path(6), VertexSet::range(m + 1, 6)));
  const auto star = elimination_sequence(test::fixture_graph("star4_hub4.json"));
  CHECK(star[2] == remove(Graph::complete(4), {4}));
  const Graph g19 = test::fixture_graph("elimination6.json");
  CHECK(elimination_sequence(g19)[3] == remove(Graph::path(6), {5, 6}));
  CHECK_THROWS_AS(elimination_sequence(remove(Graph::path(4), {4})), InvalidArgument);
}

TEST_CASE("elimination sequence matches G*(N_m)") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const auto seq = elimination_sequence(g);
    for (int m = 1; m <= n; ++m) CHECK(seq[static_cast<std::size_t>(m - 1)] == g_star_paths(g, VertexSet::all(m)));
  }
}

TEST_CASE("classification in the two three-vertex configurations") {
  const auto include_seq = elimination_sequence(test::fixture_graph("include3_path.json"));
  CHECK(classify_atom(include_seq, 3, parse_atom("1 2")) == Action::Include);
  const auto split_seq = elimination_sequence(test::fixture_graph("split3_triangle.json"));
  CHECK(classify_atom(split_seq, 3, parse_atom("1 2")) == Action::Split);
  // Type II input is rejected.
  const auto p4 = elimination_sequence(Graph::path(4));
  CHECK_THROWS_AS(classify_atom(p4, 4, parse_atom("1 2' 3")), InvalidArgument);
  CHECK_THROWS_AS(classify_atom(p4, 1, parse_atom("1")), InvalidArgument);
}

TEST_CASE("chain steps split atoms touching m-1 and exclude the rest") {
  const int n = 6;
  const auto seq = elimination_sequence(Graph::path(n));
  for (int m = 2; m <= n; ++m) {
    for (const Atom& a : type1_atoms(seq[static_cast<std::size_t>(m - 2)]).atoms()) {
      const Action expected = a.support().contains(m - 1) ? Action::Split : Action::Exclude;
      CHECK(classify_atom(seq, m, a) == expected);
    }
  }
}

TEST_CASE("chain plans keep exactly the interval atoms") {
  for (int n = 1; n <= 8; ++n) {
    const DiagramPlan plan = build_plan(Graph::path(n));
    CHECK(plan.final_type1.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    for (const Atom& a : plan.final_type1.atoms()) CHECK(a.support().max() - a.support().min() + 1 == a.support().size());
  }
}

TEST_CASE("star with hub 4") {
  const DiagramPlan plan = build_plan(test::fixture_graph("star4_hub4.json"));
  REQUIRE(plan.steps.size() == 3);
  CHECK(plan.steps[2].atoms.size() == 7);
  CHECK(plan.steps[2].gamma == VertexSet{1, 2, 3});
  for (const char* a : {"1 2' 3'", "1' 2 3'", "1' 2' 3"}) CHECK(action_of(plan, 4, a) == Action::Split);
  for (const char* a : {"1' 2 3", "1 2' 3", "1 2 3'", "1 2 3"}) CHECK(action_of(plan, 4, a) == Action::Include);
  const std::string text = export_plan(plan, PlanFormat::Text);
  const auto step4 = text.substr(text.find("step 4"));
  const auto block = step4.substr(0, step4.find("type I atoms"));
  CHECK(std::count(block.begin(), block.end(), '\n') == 8);
}

TEST_CASE("single vertex plan") {
  const DiagramPlan plan = build_plan(Graph(1));
  CHECK(plan.steps.empty());
  CHECK(plan.final_type1.size() == 1);
}

TEST_CASE("plans obey the step invariants on every connected graph up to n = 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : oracle::all_connected_graphs(n)) {
      const DiagramPlan plan = build_plan(g);
      for (int m = 2; m <= n; ++m) {
        const Graph& prev = plan.sequence[static_cast<std::size_t>(m - 2)];
        const Graph& cur = plan.sequence[static_cast<std::size_t>(m - 1)];
        for (const Classification& c : plan.steps[static_cast<std::size_t>(m - 2)].atoms)
          CHECK(c.action == action_by_types(cur, m, c.atom));
        // Type II atoms of G*(N_{m-1}) have two Type II children.
        for (const Atom& a : image_of_graph(prev).atoms()) {
          VertexSet u_out = a.complemented();
          u_out.insert(m);
          CHECK(type_of_atom(cur, Atom(m, a.complemented())) == AtomType::TypeII);
          CHECK(type_of_atom(cur, Atom(m, u_out)) == AtomType::TypeII);
        }
      }
      CHECK(plan.final_type1 == type1_atoms(g));
    }
  }
}

TEST_CASE("relabelling permutes the final atoms") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_connected_graph(rng, n, 0.45);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const DiagramPlan a = build_plan(g), b = build_plan(relabel(g, perm));
    AtomSet mapped(n);
    for (const Atom& atom : a.final_type1.atoms()) {
      VertexSet u;
      for (int v : atom.complemented()) u.insert(perm[static_cast<std::size_t>(v - 1)]);
      mapped.insert(Atom(n, u));
    }
    CHECK(mapped == b.final_type1);
  }
}

TEST_CASE("plan export") {
  const DiagramPlan plan = build_plan(Graph::path(3));
  CHECK(parse_plan_json(export_plan(plan, PlanFormat::Json)) == plan);
  const DiagramPlan star = build_plan(test::fixture_graph("star4_hub4.json"));
  CHECK(parse_plan_json(export_plan(star, PlanFormat::Json)) == star);

  // DOT: one undirected graph, balanced braces, statements terminated.
  const std::string dot = export_plan(star, PlanFormat::Dot);
  CHECK(dot.rfind("graph plan {", 0) == 0);
  int depth = 0;
  for (char c : dot) {
    depth += c == '{';
    depth -= c == '}';
    CHECK(depth >= 0);
  }
  CHECK(depth == 0);
  CHECK(dot.find("->") == std::string::npos);
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    const auto last = line.find_last_not_of(' ');
    if (last == std::string::npos) continue;
    const char end = line[last];
    CHECK((end == '{' || end == '}' || end == ';'));
  }

  CHECK_THROWS_AS(parse_plan_format("svg"), InvalidArgument);
  CHECK_THROWS_AS(parse_plan_json("{\"n\": 3}"), ParseError);
}
