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

#include "imrf/imeasure.hpp"
#include "imrf/witnesses.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace imrf;
using doctest::Approx;

TEST_CASE("prime fields") {
  const FieldSpec f(5);
  CHECK(f.is_prime());
  CHECK(f.add(3, 4) == 2);
  CHECK(f.mul(3, 4) == 2);
  CHECK_THROWS_AS(FieldSpec(1), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec(6), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec(263), InvalidArgument);
  CHECK_THROWS_AS(f.add(5, 0), InvalidArgument);
}

TEST_CASE("prime power fields follow the build flag") {
  if (!FieldSpec::prime_powers_enabled()) {
    CHECK_THROWS_AS(FieldSpec(4), InvalidArgument);
    return;
  }
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    const FieldSpec f(q);
    CHECK_FALSE(f.is_prime());
    // Field axioms spot-checked exhaustively: every nonzero element has an inverse,
    // multiplication distributes over addition.
    for (std::uint32_t a = 1; a < q; ++a) {
      int inverses = 0;
      for (std::uint32_t b = 1; b < q; ++b) inverses += f.mul(a, b) == 1;
      CHECK(inverses == 1);
    }
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; c += 3) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
}

TEST_CASE("star XOR witness") {
  const Graph star = test::fixture_graph("star4_hub4.json");
  const Distribution p = star_xor_witness(star, 4, 1, 2, 3);
  const IMeasureVector mu = mu_from_entropy(entropy_vector(p));
  CHECK(check_mrf(mu, star).ok);
  CHECK(measure_of_expression(mu, {1, 2, 3, 4}, {}) == Approx(-1.0));
  CHECK(measure_of_expression(mu, {1, 2, 3}, {}) == Approx(-1.0));
  CHECK_THROWS_AS(star_xor_witness(Graph::path(4), 2, 1, 3, 4), InvalidArgument);
  CHECK_THROWS_AS(star_xor_witness(star, 4, 1, 1, 2), InvalidArgument);
}

TEST_CASE("star XOR witness embedded in a larger K1 graph keeps its negative atom") {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 10) {
    const Graph g = oracle::random_connected_graph(rng, 8, 0.35);
    int hub = 0;
    for (int v = 1; v <= 8 && hub == 0; ++v)
      if (g.degree(v) >= 3) hub = v;
    if (hub == 0) continue;
    const auto nb = g.neighbors(hub).members();
    const Distribution p = star_xor_witness(g, hub, nb[0], nb[1], nb[2]);
    const IMeasureVector mu = mu_from_entropy(entropy_vector(p));
    CHECK(check_mrf(mu, g).ok);
    const VertexSet core{hub, nb[0], nb[1], nb[2]};
    CHECK(mu[Atom::with_support(8, core)] == Approx(-1.0));
    CHECK(mu_of_atom(p, Atom::with_support(8, core)) == Approx(-1.0));
    ++checked;
  }
}

TEST_CASE("ring witnesses") {
  for (auto [n, q] : {std::pair{4, 3u}, std::pair{5, 5u}, std::pair{3, 2u}, std::pair{6, 7u}}) {
    std::vector<std::uint32_t> alphas;
    for (int i = 1; i <= n - 2; ++i) alphas.push_back(static_cast<std::uint32_t>(i));
    const Distribution p = ring_field_witness(n, FieldSpec(q), alphas);
    const double base = static_cast<double>(q);
    const EntropyVector h = entropy_vector(p, base);
    for (std::uint32_t m = 1; m < h.values().size(); ++m) {
      const int size = std::popcount(m);
      CHECK(h.values()[m] == Approx(size == 1 ? 1.0 : 2.0).epsilon(1e-12));
    }
    const IMeasureVector mu = mu_from_entropy(h);
    for (std::uint32_t i = 0; i < atom_count(n); ++i) {
      const int w = Atom::from_index(n, i).weight();
      const double expected = w <= n - 2 ? 0.0 : (w == n - 1 ? 1.0 : -(n - 2.0));
      CHECK(mu.at_index(i) == Approx(expected).epsilon(1e-9));
    }
    CHECK(check_mrf(mu, Graph::cycle(n)).ok);
  }
  CHECK_THROWS_AS(ring_field_witness(4, FieldSpec(3), {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(ring_field_witness(4, FieldSpec(3), {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(ring_field_witness(5, FieldSpec(3), {1, 2, 1}), InvalidArgument);
  CHECK_THROWS_AS(ring_field_witness(2, FieldSpec(3), {}), InvalidArgument);
}

TEST_CASE("ring witness: any two variables determine a third") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<std::uint32_t> alphas;
    for (int i = 1; i <= n - 2; ++i) alphas.push_back(static_cast<std::uint32_t>(i));
    const oracle::Dense d = oracle::dense(ring_field_witness(n, FieldSpec(5), alphas));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) continue;
          const double hk_given = oracle::entropy(d, oracle::join({i, j}, {k}), 5.0) - oracle::entropy(d, {i, j}, 5.0);
          CHECK(hk_given == Approx(0.0).epsilon(1e-12));
        }
  }
}

TEST_CASE("ring witness over a prime power field") {
  if (!FieldSpec::prime_powers_enabled()) return;
  const Distribution p = ring_field_witness(5, FieldSpec(4), {1, 2, 3});
  const IMeasureVector mu = mu_from_entropy(entropy_vector(p, 4.0));
  CHECK(mu[Atom(5, {})] == Approx(-3.0));
  CHECK(check_mrf(mu, Graph::cycle(5)).ok);
}

TEST_CASE("atom concentrator") {
  const IMeasureVector mu = mu_from_entropy(entropy_vector(atom_concentrator(3, {1, 2})));
  for (std::uint32_t i = 0; i < 7; ++i) {
    const Atom a = Atom::from_index(3, i);
    CHECK(mu.at_index(i) == Approx(a == parse_atom("1 2 3'") ? 1.0 : 0.0));
  }
  const IMeasureVector full = mu_from_entropy(entropy_vector(atom_concentrator(4, VertexSet::all(4))));
  CHECK(full[Atom(4, {})] == Approx(1.0));
  CHECK(nonnegativity_report(full).nonneg);
  CHECK(vanishing_atoms(full).size() == 14);
  const std::vector<double> z{0.2, 0.3, 0.5};
  const IMeasureVector single = mu_from_entropy(entropy_vector(atom_concentrator(3, {2}, z)));
  const double hz = -(0.2 * std::log2(0.2) + 0.3 * std::log2(0.3) + 0.5 * std::log2(0.5));
  CHECK(single[Atom::with_support(3, {2})] == Approx(hz));
  CHECK(vanishing_atoms(single).size() == 6);
  CHECK_THROWS_AS(atom_concentrator(3, {}), InvalidArgument);
}
