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

#include "imrf/imeasure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "imrf/fcmi.hpp"
#include "imrf/witnesses.hpp"

namespace imrf {

namespace {

void check_base(double base) {
  if (!(base > 1.0) || !std::isfinite(base)) throw InvalidArgument("log base must be > 1");
}

}  // namespace

EntropyVector::EntropyVector(int n, double base) : n_(n), base_(base) {
  check_atom_capacity(n);
  check_base(base);
  h_.assign(std::size_t{1} << n, 0.0);
}

EntropyVector::EntropyVector(int n, double base, std::vector<double> values) : EntropyVector(n, base) {
  if (values.size() != h_.size()) throw InvalidArgument("entropy vector needs 2^n slots");
  h_ = std::move(values);
  h_[0] = 0.0;
}

IMeasureVector::IMeasureVector(int n, double base) : n_(n), base_(base) {
  check_atom_capacity(n);
  check_base(base);
  values_.assign(atom_count(n), 0.0);
}

IMeasureVector::IMeasureVector(int n, double base, std::vector<double> values) : IMeasureVector(n, base) {
  if (values.size() != values_.size()) throw InvalidArgument("I-Measure vector needs 2^n - 1 slots");
  values_ = std::move(values);
}

double IMeasureVector::operator[](const Atom& a) const {
  if (a.n() != n_) throw InvalidArgument("atom over a different n");
  return values_[a.index()];
}

double& IMeasureVector::operator[](const Atom& a) {
  if (a.n() != n_) throw InvalidArgument("atom over a different n");
  return values_[a.index()];
}

double marginal_entropy(const Distribution& p, VertexSet b, double base) {
  check_base(base);
  if (b.empty()) return 0.0;
  if (!b.subset_of(VertexSet::all(p.n()))) throw InvalidArgument("marginal set not inside 1..n");

  // Mixed-radix key when the projected space fits in 64 bits.
  long double cells = 1.0L;
  for (int v : b) cells *= p.alphabet_sizes()[static_cast<std::size_t>(v - 1)];
  double nats = 0.0;
  if (cells < 1.8e19L) {
    std::unordered_map<std::uint64_t, double> mass;
    mass.reserve(p.support().size());
    for (const auto& o : p.support()) {
      std::uint64_t key = 0;
      for (int v : b) key = key * p.alphabet_sizes()[static_cast<std::size_t>(v - 1)] + o.x[static_cast<std::size_t>(v - 1)];
      mass[key] += o.p;
    }
    for (const auto& [key, q] : mass)
      if (q > 0.0) nats -= q * std::log(q);
  } else {
    std::map<Configuration, double> mass;
    for (const auto& o : p.support()) {
      Configuration y;
      for (int v : b) y.push_back(o.x[static_cast<std::size_t>(v - 1)]);
      mass[y] += o.p;
    }
    for (const auto& [key, q] : mass)
      if (q > 0.0) nats -= q * std::log(q);
  }
  // Rounding can leave -0 or a hair below zero for deterministic marginals.
  return std::max(0.0, nats / std::log(base));
}

EntropyVector entropy_vector(const Distribution& p, double base) {
  EntropyVector h(p.n(), base);
  const std::uint32_t full = atom_count(p.n());
  for (std::uint32_t m = 1; m <= full; ++m) h[VertexSet::from_mask(m)] = marginal_entropy(p, VertexSet::from_mask(m), base);
  return h;
}

IMeasureVector mu_from_entropy(const EntropyVector& h) {
  const int n = h.n();
  std::vector<double> g = h.values();
  // g(U) <- sum_{T >= U} (-1)^{|T - U|} h(T)
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t m = 0; m < g.size(); ++m)
      if (!(m & step)) g[m] -= g[m | step];
  }
  std::vector<double> mu(atom_count(n));
  for (std::size_t u = 0; u < mu.size(); ++u) mu[u] = -g[u];
  return IMeasureVector(n, h.base(), std::move(mu));
}

EntropyVector entropy_from_mu(const IMeasureVector& mu) {
  const int n = mu.n();
  std::vector<double> z(std::size_t{1} << n, 0.0);
  for (std::size_t u = 0; u + 1 < z.size(); ++u) z[u] = mu.at_index(static_cast<std::uint32_t>(u));
  // z(U) <- sum over atoms with U_A >= U, i.e. W_A inside V - U
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t m = 0; m < z.size(); ++m)
      if (!(m & step)) z[m] += z[m | step];
  }
  std::vector<double> h(z.size());
  for (std::size_t b = 1; b < z.size(); ++b) h[b] = z[0] - z[b];
  return EntropyVector(n, mu.base(), std::move(h));
}

namespace {

template <typename Entropy>
double alternating_sum(const Atom& a, Entropy&& entropy) {
  const auto w = a.support().mask();
  const VertexSet u = a.complemented();
  double total = 0.0;
  VertexSet::mask_type s = 0;
  do {
    const VertexSet subset = VertexSet::from_mask(s);
    const double term = entropy(subset | u);
    total += (subset.size() % 2 == 1) ? term : -term;
    s = (s - w) & w;
  } while (s != 0);
  return total;
}

}  // namespace

double mu_of_atom(const EntropyVector& h, const Atom& a) {
  if (a.n() != h.n()) throw InvalidArgument("atom and entropy vector over different n");
  return alternating_sum(a, [&](VertexSet b) { return h[b]; });
}

double mu_of_atom(const Distribution& p, const Atom& a, double base) {
  if (a.n() != p.n()) throw InvalidArgument("atom and distribution over different n");
  return alternating_sum(a, [&](VertexSet b) { return marginal_entropy(p, b, base); });
}

double measure_of_expression(const IMeasureVector& mu, VertexSet caps, VertexSet minus, VertexSet cups) {
  const VertexSet universe = VertexSet::all(mu.n());
  if (caps.empty() && cups.empty()) throw InvalidArgument("expression needs at least one set variable");
  if (!(caps | minus | cups).subset_of(universe)) throw InvalidArgument("expression indices outside 1..n");
  if (caps.intersects(minus)) throw InvalidArgument("caps and minus must be disjoint");

  const auto free = (universe - caps - minus).mask();
  double total = 0.0;
  VertexSet::mask_type s = 0;
  do {
    const VertexSet w = caps | VertexSet::from_mask(s);
    if (!w.empty() && (cups.empty() || w.intersects(cups))) total += mu.at_index((universe - w).mask());
    s = (s - free) & free;
  } while (s != 0);
  return total;
}

MrfCheck check_mrf(const IMeasureVector& mu, const Graph& g, double tol) {
  if (g.vertices() != VertexSet::all(mu.n())) throw InvalidArgument("graph and I-Measure over different vertex sets");
  MrfCheck out;
  for (const Atom& a : image_of_graph(g).atoms()) {
    if (std::abs(mu[a]) > tol) out.violators.push_back(a);
  }
  out.ok = out.violators.empty();
  return out;
}

AtomSet vanishing_atoms(const IMeasureVector& mu, double tol) {
  AtomSet out(mu.n());
  for (std::uint32_t i = 0; i < atom_count(mu.n()); ++i)
    if (std::abs(mu.at_index(i)) <= tol) out.insert_index(i);
  return out;
}

ReductionResult reduce_atom(const Graph& g, const Atom& a) {
  if (type_of_atom(g, a) != AtomType::TypeI) throw InvalidArgument("reduce_atom needs a Type I atom");
  const VertexSet u = a.complemented();
  if (u.size() > a.n() - 2) throw InvalidArgument("reduce_atom needs |U_A| <= n - 2");
  ReductionResult out;
  for (int k : a.support()) {
    VertexSet removed = u;
    removed.insert(k);
    if (component_count(g, removed) == 1) out.b.insert(k);
  }
  return out;
}

bool verify_reduction(const Graph& g, const Atom& a, const IMeasureVector& mu, double tol) {
  const ReductionResult r = reduce_atom(g, a);
  return std::abs(mu[a] - measure_of_expression(mu, r.b, a.complemented())) <= tol;
}

ChainInequalityVerdict chain_inequality_valid(const std::map<Atom, double>& coefficients) {
  ChainInequalityVerdict out;
  if (coefficients.empty()) return out;
  const int n = coefficients.begin()->first.n();
  const Graph chain = Graph::path(n);
  for (const auto& [atom, c] : coefficients) {
    if (atom.n() != n) throw InvalidArgument("coefficients over different n");
    if (type_of_atom(chain, atom) != AtomType::TypeI) {
      throw InvalidArgument("atom " + atom.to_string() + " is not a Type I atom of the chain");
    }
  }
  for (const auto& [atom, c] : coefficients) {
    if (c < 0.0) {
      out.valid = false;
      out.offending = atom;
      out.witness = atom_concentrator(n, atom.support());
      break;
    }
  }
  return out;
}

NonnegativityReport nonnegativity_report(const IMeasureVector& mu, double tol) {
  NonnegativityReport out;
  for (std::uint32_t i = 0; i < atom_count(mu.n()); ++i) {
    if (mu.at_index(i) < -tol) out.negative_atoms.emplace_back(Atom::from_index(mu.n(), i), mu.at_index(i));
  }
  out.nonneg = out.negative_atoms.empty();
  return out;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P u X with the most neighbours in P.
  int pivot = 0;
  int best = -1;
  for (int v : p | x) {
    const int d = (g.neighbors(v) & p).size();
    if (d > best) {
      best = d;
      pivot = v;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    VertexSet rv = r;
    rv.insert(v);
    bron_kerbosch(g, rv, p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.vertices().empty()) return out;
  bron_kerbosch(g, {}, g.vertices(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

Distribution generate_mrf(const Graph& g, std::uint64_t seed, std::uint32_t alphabet) {
  const int n = g.order();
  if (n < 1 || g.vertices() != VertexSet::all(n)) throw InvalidArgument("generate_mrf needs a graph on 1..n");
  if (alphabet < 2) throw InvalidArgument("alphabet must be at least 2");
  const double cells = std::pow(static_cast<double>(alphabet), n);
  if (cells > static_cast<double>(1u << 22)) {
    throw CapacityExceeded("joint space of " + std::to_string(alphabet) + "^" + std::to_string(n) + " too large");
  }

  std::mt19937_64 rng(seed);
  // Portable uniform draw in [0, 1).
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  struct Potential {
    std::vector<int> members;
    std::vector<double> table;
  };
  std::vector<Potential> potentials;
  for (VertexSet clique : maximal_cliques(g)) {
    Potential pot{clique.members(), {}};
    std::size_t size = 1;
    for (std::size_t i = 0; i < pot.members.size(); ++i) size *= alphabet;
    pot.table.resize(size);
    for (double& w : pot.table) w = 0.05 + uniform();
    potentials.push_back(std::move(pot));
  }

  const auto total_cells = static_cast<std::size_t>(cells);
  std::vector<Outcome> outcomes;
  outcomes.reserve(total_cells);
  Configuration x(static_cast<std::size_t>(n), 0);
  double z = 0.0;
  for (std::size_t c = 0; c < total_cells; ++c) {
    double w = 1.0;
    for (const auto& pot : potentials) {
      std::size_t idx = 0;
      for (int v : pot.members) idx = idx * alphabet + x[static_cast<std::size_t>(v - 1)];
      w *= pot.table[idx];
    }
    outcomes.push_back({x, w});
    z += w;
    for (std::size_t i = x.size(); i-- > 0;) {
      if (++x[i] < alphabet) break;
      x[i] = 0;
    }
  }
  for (auto& o : outcomes) o.p /= z;
  // Absorb the division's rounding so the sum check sees exactly 1.
  double sum = 0.0;
  for (const auto& o : outcomes) sum += o.p;
  outcomes.back().p += 1.0 - sum;
  return Distribution(std::vector<std::uint32_t>(static_cast<std::size_t>(n), alphabet), std::move(outcomes));
}

}  // namespace imrf
