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

#include <optional>
#include <string>
#include <vector>

#include "imrf/atom.hpp"
#include "imrf/distribution.hpp"
#include "imrf/graph.hpp"

namespace imrf {

enum class Construction { Paths, ClosedForm, Elimination };

std::string to_string(Construction c);

struct SubfieldResult {
  Graph g_star;
  Construction construction = Construction::Paths;
  /// Vertices of V' with a neighbour outside V'.
  VertexSet rho;
};

/// Edge {u,v} of G*(V') iff g has a u-v path whose inner vertices avoid V'.
/// The result keeps the labels of g and has universe V'.
Graph g_star_paths(const Graph& g, VertexSet vp);

/// Induced edges on V' plus a clique on the neighbourhood of every
/// component of G \ V'.
Graph g_star_closed_form(const Graph& g, VertexSet vp);

/// Removes the vertices of V - V' one at a time, joining the neighbours of
/// each removed vertex into a clique. `order` must list V - V' exactly once;
/// an empty order on a nonempty V - V' means descending label order.
Graph g_star_elimination(const Graph& g, VertexSet vp, const std::vector<int>& order = {});

SubfieldResult subfield(const Graph& g, VertexSet vp, Construction construction = Construction::Paths);

/// rho(V') = {v in V' : v has a neighbour in V - V'}.
VertexSet rho(const Graph& g, VertexSet vp);

/// G*(V') equals G \ (V - V') iff no two non-adjacent vertices of rho(V')
/// are joined by a path through V - V'.
bool equals_induced(const Graph& g, VertexSet vp);

/// is_cutset(G*(V'), t) implies is_cutset(g, t). t must lie in V'.
bool cutset_lift(const Graph& g, VertexSet vp, VertexSet t);

struct SubtreeViolation {
  int u = 0;
  int v1 = 0, v2 = 0, v3 = 0;
};

struct SubtreeResult {
  bool holds = true;
  std::optional<SubtreeViolation> witness;
};

/// For a tree g: G*(V') is a tree iff no u outside V' reaches three vertices
/// of V' along paths whose other vertices all lie outside V'. The witness is
/// the smallest such u with its three smallest targets.
SubtreeResult subtree_condition(const Graph& g, VertexSet vp);

struct SmallestRepResult {
  Graph g_hat;
  bool exists = false;
  /// Im(g_hat) minus A_II; empty when exists.
  AtomSet witness_atoms;
};

/// g_hat keeps {u,v} iff the pair atom of {u,v} is not in A_II. It is the
/// smallest representation iff Im(g_hat) lies inside A_II.
SmallestRepResult smallest_graph(const AtomSet& a2);

/// Shortest u-v path of g with inner vertices outside V', inner vertices only.
/// Throws when {u,v} is not an edge of G*(V').
VertexSet star_path_interior(const Graph& g, VertexSet vp, int u, int v);

/// X_i = Z (a fair bit) on the path S' u {u,v} and constant elsewhere. The
/// result is Markov with respect to g and I(X_u; X_v | X_{V'-{u,v}}) = 1 bit,
/// so {u,v} cannot be dropped from G*(V').
Distribution minimality_witness(const Graph& g, VertexSet vp, int u, int v);

}  // namespace imrf
