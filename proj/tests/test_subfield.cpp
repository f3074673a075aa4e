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

#include "imrf/fcmi.hpp"
#include "imrf/imeasure.hpp"
#include "imrf/subfield.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace imrf;
using doctest::Approx;

namespace {

Graph on(int n, VertexSet universe, std::initializer_list<Edge> edges) {
  Graph g(n, universe);
  for (const Edge& e : edges) g.add_edge(e.first, e.second);
  return g;
}

AtomSet atoms(int n, std::initializer_list<const char*> texts) {
  AtomSet out(n);
  for (const char* t : texts) out.insert(parse_atom(t));
  return out;
}

std::vector<int> shuffled(std::vector<int> v, std::mt19937_64& rng) {
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace

TEST_CASE("G* with two fill-in cliques") {
  const Graph g = test::fixture_graph("subfield_cliques9.json");
  const VertexSet vp{1, 2, 5, 6, 8, 9};
  Graph expected = on(9, vp, {{1, 2}, {5, 6}, {8, 9}});
  for (const Edge& e : clique_edges({1, 2, 5, 6})) expected.add_edge(e.first, e.second);
  for (const Edge& e : clique_edges({2, 5, 8, 9})) expected.add_edge(e.first, e.second);
  CHECK(g_star_paths(g, vp) == expected);
  CHECK(g_star_closed_form(g, vp) == expected);
  CHECK(g_star_elimination(g, vp) == expected);
  CHECK(g_star_elimination(g, vp, {3, 4, 7}) == expected);
  CHECK(g_star_elimination(g, vp, {7, 3, 4}) == expected);
  CHECK_FALSE(equals_induced(g, vp));
  CHECK(rho(g, vp) == vp);
  CHECK(cutset_lift(g, vp, {2, 5}));
  CHECK_THROWS_AS(g_star_elimination(g, vp, {3, 4}), InvalidArgument);
  CHECK_THROWS_AS(g_star_paths(g, {}), InvalidArgument);
}

TEST_CASE("G* that equals the induced subgraph") {
  const Graph g = test::fixture_graph("subfield_induced5.json");
  const VertexSet vp{2, 3, 4};
  CHECK(rho(g, vp) == vp);
  CHECK(equals_induced(g, vp));
  CHECK(g_star_paths(g, vp) == remove(g, VertexSet{1, 5}));
}

TEST_CASE("G* of the whole vertex set is the graph") {
  const Graph g = test::fixture_graph("reduction8.json");
  CHECK(g_star_paths(g, g.vertices()) == g);
  CHECK(g_star_elimination(g, g.vertices()) == g);
  CHECK(equals_induced(g, g.vertices()));
  CHECK(rho(g, g.vertices()).empty());
}

TEST_CASE("G* of a chain is a chain") {
  const Graph g = Graph::path(6);
  const Graph s = g_star_paths(g, {1, 3, 5, 6});
  CHECK(s == on(6, {1, 3, 5, 6}, {{1, 3}, {3, 5}, {5, 6}}));
  CHECK(subtree_condition(g, {1, 3, 5, 6}).holds);
}

TEST_CASE("single removed vertex") {
  // A pendant vertex n with sole neighbour n-1 drops out cleanly.
  Graph g = Graph::path(5);
  g.add_edge(1, 3);
  CHECK(g_star_closed_form(g, VertexSet::all(4)) == remove(g, {5}));
  // General single-vertex elimination: induced edges plus a clique on phi({n}).
  const Graph h = test::fixture_graph("reduction8.json");
  Graph expected = remove(h, {8});
  for (const Edge& e : clique_edges(neighbor_set(h, {8}))) expected.add_edge(e.first, e.second);
  CHECK(g_star_closed_form(h, VertexSet::all(7)) == expected);
}

TEST_CASE("three constructions agree with the path oracle and compose") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const VertexSet vp = VertexSet::from_mask(oracle::random_nonempty_mask(rng, n));
    const Graph a = g_star_paths(g, vp);
    CHECK(oracle::edge_set(a) == oracle::g_star_edges(g, vp.members()));
    CHECK(g_star_closed_form(g, vp) == a);
    CHECK(g_star_elimination(g, vp) == a);
    CHECK(g_star_elimination(g, vp, shuffled((g.vertices() - vp).members(), rng)) == a);
    CHECK(a.vertices() == vp);
    // Always contains the induced subgraph; equality exactly when the criterion says so.
    const Graph induced = remove(g, g.vertices() - vp);
    for (const Edge& e : induced.edges()) CHECK(a.has_edge(e.first, e.second));
    CHECK(equals_induced(g, vp) == (a == induced));
    // Composition through an intermediate V''.
    const VertexSet vpp = VertexSet::from_mask(vp.mask() & static_cast<VertexSet::mask_type>(rng())) | VertexSet{vp.min()};
    CHECK(g_star_paths(a, vpp) == g_star_paths(g, vpp));
  }
}

TEST_CASE("cutsets of G* lift to G") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const VertexSet vp = VertexSet::from_mask(oracle::random_nonempty_mask(rng, n));
    const auto m = vp.mask();
    for (VertexSet::mask_type t = m;; t = (t - 1) & m) {
      CHECK(cutset_lift(g, vp, VertexSet::from_mask(t)));
      if (t == 0) break;
    }
  }
  CHECK_THROWS_AS(cutset_lift(Graph::path(3), {1, 2}, {3}), InvalidArgument);
}

TEST_CASE("subtree condition on the worked tree") {
  const Graph t = test::fixture_graph("tree12.json");
  const SubtreeResult ok = subtree_condition(t, {1, 4, 8, 9, 12});
  CHECK(ok.holds);
  CHECK(is_tree(g_star_paths(t, {1, 4, 8, 9, 12})));
  const SubtreeResult bad = subtree_condition(t, {1, 4, 7, 8, 9, 12});
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->u == 6);
  CHECK(VertexSet{bad.witness->v1, bad.witness->v2, bad.witness->v3} == VertexSet{4, 7, 8});
  CHECK_FALSE(is_tree(g_star_paths(t, {1, 4, 7, 8, 9, 12})));
  CHECK_THROWS_AS(subtree_condition(Graph::cycle(4), {1, 2}), InvalidArgument);
}

TEST_CASE("subtree condition matches is_tree(G*) on random trees") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph t = oracle::random_tree(rng, n);
    REQUIRE(is_tree(t));
    const VertexSet vp = VertexSet::from_mask(oracle::random_nonempty_mask(rng, n));
    CHECK(subtree_condition(t, vp).holds == is_tree(g_star_paths(t, vp)));
    CHECK(subtree_condition(Graph::path(n), vp).holds);
  }
}

TEST_CASE("smallest representation") {
  const SmallestRepResult r = smallest_graph(atoms(3, {"1 2 3'", "1 2' 3"}));
  CHECK(r.g_hat == Graph(3, std::vector<Edge>{{2, 3}}));
  CHECK(image_of_graph(r.g_hat) == atoms(3, {"1 2 3'", "1 2' 3", "1 2 3"}));
  CHECK_FALSE(r.exists);
  CHECK(r.witness_atoms == atoms(3, {"1 2 3"}));

  const SmallestRepResult all = smallest_graph(AtomSet::full(4));
  CHECK(all.exists);
  CHECK(all.g_hat.edge_count() == 0);

  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const SmallestRepResult s = smallest_graph(image_of_graph(g));
    CHECK(s.exists);
    CHECK(s.g_hat == g);
  }
}

TEST_CASE("copied bit routes to the same negative verdict") {
  const IMeasureVector mu = mu_from_entropy(entropy_vector(test::fixture_dist("copies3_dist.json")));
  const SmallestRepResult r = smallest_graph(vanishing_atoms(mu));
  CHECK_FALSE(r.exists);
  CHECK(r.g_hat == Graph(3));
  CHECK(r.witness_atoms.contains(parse_atom("1 2 3")));
}

TEST_CASE("minimality witnesses") {
  const Graph p6 = Graph::path(6);
  const VertexSet vp{1, 3, 5, 6};
  CHECK(star_path_interior(p6, vp, 3, 5) == VertexSet{4});
  const Distribution w = minimality_witness(p6, vp, 3, 5);
  const IMeasureVector mu = mu_from_entropy(entropy_vector(w));
  CHECK(check_mrf(mu, p6).ok);
  CHECK(measure_of_expression(mu, {3, 5}, vp - VertexSet{3, 5}) == Approx(1.0));

  const Distribution direct = minimality_witness(p6, vp, 5, 6);
  const oracle::Dense d = oracle::dense(direct);
  CHECK(oracle::entropy(d, {5}) == Approx(1.0));
  CHECK(oracle::entropy(d, {5, 6}) == Approx(1.0));
  CHECK(oracle::entropy(d, {1, 2, 3, 4}) == Approx(0.0));

  const Graph g8 = test::fixture_graph("subfield_cliques9.json");
  const VertexSet vp8{1, 2, 5, 6, 8, 9};
  const VertexSet interior = star_path_interior(g8, vp8, 1, 6);
  CHECK(interior == VertexSet{3, 4});
  const IMeasureVector mu8 = mu_from_entropy(entropy_vector(minimality_witness(g8, vp8, 1, 6)));
  CHECK(check_mrf(mu8, g8).ok);
  CHECK(measure_of_expression(mu8, {1, 6}, vp8 - VertexSet{1, 6}) == Approx(1.0));

  CHECK_THROWS_AS(minimality_witness(p6, vp, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(minimality_witness(p6, vp, 2, 3), InvalidArgument);
}
