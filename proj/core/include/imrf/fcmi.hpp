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

#include <vector>

#include "imrf/atom.hpp"
#include "imrf/graph.hpp"
#include "imrf/measures.hpp"

namespace imrf {

/// Conditional mutual independency (T; Q_1, ..., Q_k): X_{Q_1}, ..., X_{Q_k}
/// are mutually independent given X_T. Full when T and the Q_i cover 1..n.
class Fcmi {
 public:
  Fcmi() = default;
  /// Validates disjointness, k >= 2, nonempty parts. Parts are stored sorted
  /// by smallest member so equal independencies compare equal.
  Fcmi(int n, VertexSet t, std::vector<VertexSet> qs);

  int n() const { return n_; }
  VertexSet t() const { return t_; }
  const std::vector<VertexSet>& qs() const { return qs_; }
  int k() const { return static_cast<int>(qs_.size()); }
  /// T together with every Q_i.
  VertexSet scope() const;
  bool is_full() const { return scope() == VertexSet::all(n_); }

  /// "(3; 1 | 2)" style text.
  std::string to_string() const;

  bool operator==(const Fcmi&) const = default;

 private:
  int n_ = 0;
  VertexSet t_;
  std::vector<VertexSet> qs_;
};

/// Im(K) by enumerating the W_i subsets of each Q_i with at least two nonempty.
/// K must be full.
AtomSet image_of_fcmi(const Fcmi& k);

/// Im(K) by testing every atom for membership in the union of the pairwise
/// sets X_{Q_i} cap X_{Q_j} - X_T. Agrees with image_of_fcmi.
AtomSet image_of_fcmi_by_membership(const Fcmi& k);

/// For a CMI over V' strictly inside V: each prescribed set, expanded into
/// the atoms of F_V whose union it is. Falls back to the atoms of Im(K),
/// one singleton set each, when K is full.
std::vector<AtomSet> image_of_partial(const Fcmi& k);

/// Inverse of image_of_fcmi. Throws NotAnFcmiImage when no FCMI has this image.
Fcmi recover_fcmi(const AtomSet& image);

/// K holds iff mu* vanishes (within tol) on Im(K); for partial CMIs iff each
/// prescribed set sums to within tol of zero.
bool fcmi_holds(const Fcmi& k, const IMeasureVector& mu, double tol);

enum class AtomType { TypeI, TypeII };

/// TypeI iff G \ U_A is connected.
AtomType type_of_atom(const Graph& g, const Atom& a);

/// Im(G), the set of Type II atoms of G.
AtomSet image_of_graph(const Graph& g);

/// The Type I atoms of G (complement of Im(G)).
AtomSet type1_atoms(const Graph& g);

/// The FCMI [U] induced by cutset U: (U; components of G \ U).
Fcmi cutset_fcmi(const Graph& g, VertexSet u);

/// Start from K_n and drop {u,v} whenever the atom X_u cap X_v - X_{V-{u,v}}
/// is in the image.
Graph recover_graph(const AtomSet& image);

/// Im of a collection: union of member images.
AtomSet image_of_collection(int n, const std::vector<Fcmi>& collection);

/// Pi1 implies Pi2 iff Im(Pi1) contains Im(Pi2).
bool implies(const std::vector<Fcmi>& pi1, const std::vector<Fcmi>& pi2);

/// The atom X_u cap X_v - X_{V-{u,v}} that witnesses edge {u,v}.
Atom pair_atom(int n, int u, int v);

}  // namespace imrf
