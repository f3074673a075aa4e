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

#include <functional>
#include <string>

#include "imrf/imeasure.hpp"
#include "imrf/json_io.hpp"
#include "test_util.hpp"

using namespace imrf;
using io::Json;

namespace {

std::string parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph round trip") {
  const Graph g = test::fixture_graph("subfield_cliques9.json");
  CHECK(io::graph_from_json(io::to_json(g)) == g);
  CHECK_FALSE(io::to_json(g).contains("vertices"));
  Graph sub = remove(g, {3, 4, 7});
  const Json j = io::to_json(sub);
  CHECK(j.contains("vertices"));
  CHECK(io::graph_from_json(j) == sub);
}

TEST_CASE("graph parse errors name the field") {
  CHECK(parse_error_of([] { io::graph_from_json(io::parse(R"({"n": 3, "edges": [[1, "x"]]})")); })
            .find("graph.edges[0][1]") != std::string::npos);
  CHECK(parse_error_of([] { io::graph_from_json(io::parse(R"({"edges": []})")); }).find("graph.n") != std::string::npos);
  CHECK(parse_error_of([] { io::graph_from_json(io::parse(R"({"n": 3, "edges": [[1, 4]]})")); }).find("graph") !=
        std::string::npos);
  CHECK(parse_error_of([] { io::graph_from_json(io::parse(R"({"n": 3, "edges": [[1, 1]]})")); }) != "");
  CHECK_THROWS_AS(io::parse("{not json"), ParseError);
  CHECK_THROWS_AS(io::read_file(test::fixture_path("missing.json")), ParseError);
}

TEST_CASE("vertex sets and atoms") {
  CHECK(io::vertex_set_from_json(Json::parse("[3, 1]"), "s") == VertexSet{1, 3});
  CHECK(io::vertex_set_from_json(Json("1,2"), "s") == VertexSet{1, 2});
  CHECK_THROWS_AS(io::vertex_set_from_json(Json::parse("[0]"), "s"), ParseError);
  const Atom a = parse_atom("1 2' 3");
  CHECK(io::atom_from_json(io::to_json(a)) == a);
  CHECK(io::atom_from_json(Json("1 2' 3")) == a);
  CHECK_THROWS_AS(io::atom_from_json(Json("1 2 2")), ParseError);
}

TEST_CASE("atom sets, FCMIs and collections") {
  const AtomSet s = io::atom_set_from_json(test::fixture_json("two_atoms3.json"));
  CHECK(s.size() == 2);
  CHECK(io::atom_set_from_json(io::to_json(s)) == s);
  const Fcmi k = io::fcmi_from_json(test::fixture_json("single_cmi.json"));
  CHECK(k == Fcmi(3, {3}, {{1}, {2}}));
  CHECK(io::fcmi_from_json(io::to_json(k)) == k);
  CHECK(io::fcmi_list_from_json(test::fixture_json("collection_pi2.json")).size() == 2);
  CHECK(io::fcmi_list_from_json(test::fixture_json("single_cmi.json")).size() == 1);
  CHECK(parse_error_of([] { io::fcmi_from_json(io::parse(R"({"n": 3, "T": [], "Q": [[1], [1, 2]]})")); }) != "");
  CHECK(parse_error_of([] { io::atom_set_from_json(io::parse(R"({"n": 17, "atoms": []})")); }) != "");
}

TEST_CASE("distributions and vectors") {
  const Distribution p = test::fixture_dist("xor_star_dist.json");
  const Distribution q = io::distribution_from_json(io::to_json(p));
  CHECK(q.alphabet_sizes() == p.alphabet_sizes());
  CHECK(entropy_vector(q).values() == entropy_vector(p).values());

  const EntropyVector h = entropy_vector(p);
  const EntropyVector h2 = io::entropy_from_json(io::to_json(h));
  CHECK(h2.values() == h.values());
  const IMeasureVector mu = mu_from_entropy(h);
  const IMeasureVector mu2 = io::imeasure_from_json(io::to_json(mu));
  CHECK(mu2.values() == mu.values());

  Json partial = io::to_json(h);
  partial["h"].erase(partial["h"].begin());
  CHECK(parse_error_of([&] { io::entropy_from_json(partial); }).find("missing") != std::string::npos);
  CHECK(parse_error_of([] {
          io::distribution_from_json(io::parse(R"({"n": 1, "alphabets": [2], "probs": [{"x": [0], "p": 0.4}]})"));
        }) != "");
  CHECK(parse_error_of([] {
          io::distribution_from_json(io::parse(R"({"n": 1, "alphabets": [2], "probs": [{"x": [2], "p": 1.0}]})"));
        }) != "");
}

TEST_CASE("result objects") {
  const Graph g = test::fixture_graph("subfield_cliques9.json");
  const VertexSet vp{1, 2, 5, 6, 8, 9};
  const Json r = io::to_json(subfield(g, vp, Construction::ClosedForm), equals_induced(g, vp));
  CHECK(r["construction"] == "closed-form");
  CHECK(r["equals_induced"] == false);
  CHECK(io::graph_from_json(r["g_star"]) == g_star_paths(g, vp));
  CHECK(io::vertex_set_from_json(r["rho"], "rho") == vp);

  const Json s = io::to_json(smallest_graph(io::atom_set_from_json(test::fixture_json("two_atoms3.json"))));
  CHECK(s["exists"] == false);
  CHECK(s["witness_atoms"]["atoms"] == Json::array({"1 2 3"}));

  const Json t = io::to_json(subtree_condition(test::fixture_graph("tree12.json"), {1, 4, 7, 8, 9, 12}));
  CHECK(t["holds"] == false);
  CHECK(t["witness"]["u"] == 6);
  CHECK(t["witness"]["v"] == Json::array({4, 7, 8}));
}
