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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "imrf/atom.hpp"
#include "imrf/distribution.hpp"
#include "imrf/graph.hpp"
#include "imrf/measures.hpp"

namespace imrf {

inline constexpr double kDefaultTolerance = 1e-9;
/// Tolerance for checks on generated clique-potential distributions.
inline constexpr double kGeneratorTolerance = 1e-7;

/// H(X_B) in the given log base; 0 log 0 = 0.
double marginal_entropy(const Distribution& p, VertexSet b, double base = 2.0);

/// H(X_B) for all nonempty B. Needs n <= kMaxAtomVertices.
EntropyVector entropy_vector(const Distribution& p, double base = 2.0);

/// mu*(A) = sum over S subset W_A of (-1)^{|S|+1} H(X_{S u U_A}), evaluated for
/// every atom at once by a superset Moebius transform.
IMeasureVector mu_from_entropy(const EntropyVector& h);

/// H(X_B) = sum of mu*(A) over atoms with W_A meeting B.
EntropyVector entropy_from_mu(const IMeasureVector& mu);

/// Single-atom alternating sum over an entropy vector.
double mu_of_atom(const EntropyVector& h, const Atom& a);

/// Single-atom query straight from a distribution; works up to
/// kMaxGraphVertices because only the 2^{w(A)} needed marginals are formed.
double mu_of_atom(const Distribution& p, const Atom& a, double base = 2.0);

/// mu* of (cup_{cups} X_i) cap (cap_{caps} X_i) - X_minus, summed over atoms.
/// An empty `cups` drops the union factor. caps and cups may not both be empty.
double measure_of_expression(const IMeasureVector& mu, VertexSet caps, VertexSet minus, VertexSet cups = {});

struct MrfCheck {
  bool ok = true;
  /// Type II atoms of the graph where |mu*| > tol, by index.
  std::vector<Atom> violators;
};

/// mu* vanishes on every Type II atom of g.
MrfCheck check_mrf(const IMeasureVector& mu, const Graph& g, double tol = kDefaultTolerance);

/// A_II: atoms with |mu*(A)| <= tol.
AtomSet vanishing_atoms(const IMeasureVector& mu, double tol = kDefaultTolerance);

struct ReductionResult {
  VertexSet b;
};

/// B = {k outside U_A : G \ (U_A u {k}) connected} for a Type I atom with
/// |U_A| <= n - 2.
ReductionResult reduce_atom(const Graph& g, const Atom& a);

/// |mu*(A) - mu*(cap_{k in B} X_k - X_{U_A})| <= tol.
bool verify_reduction(const Graph& g, const Atom& a, const IMeasureVector& mu, double tol = kDefaultTolerance);

struct ChainInequalityVerdict {
  bool valid = true;
  std::optional<Atom> offending;
  /// Markov chain whose mu* is H(Z) on the offending atom and 0 elsewhere,
  /// so the inequality evaluates to c_A H(Z) < 0.
  std::optional<Distribution> witness;
};

/// sum c_A mu*(A) >= 0 over Type I atoms of P_n holds for every Markov chain
/// iff every c_A >= 0. Keys must be Type I atoms of P_n.
ChainInequalityVerdict chain_inequality_valid(const std::map<Atom, double>& coefficients);

struct NonnegativityReport {
  bool nonneg = true;
  std::vector<std::pair<Atom, double>> negative_atoms;
};

NonnegativityReport nonnegativity_report(const IMeasureVector& mu, double tol = kDefaultTolerance);

/// Maximal cliques of g, each as a vertex set, in lexicographic mask order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Strictly positive p(x) proportional to a product of random positive
/// potentials, one per maximal clique. Deterministic in `seed`.
Distribution generate_mrf(const Graph& g, std::uint64_t seed, std::uint32_t alphabet = 2);

}  // namespace imrf
