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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "imrf/vertex_set.hpp"

namespace imrf {

/// Unordered vertex pair stored with first < second.
struct Edge {
  int first = 0;
  int second = 0;

  Edge() = default;
  Edge(int u, int v) : first(u < v ? u : v), second(u < v ? v : u) {}

  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph. Labels range over 1..n; the vertex universe is a
/// subset of that range so that removing vertices never relabels the rest.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on {1..n}.
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);
  /// Edgeless graph on an arbitrary universe inside 1..n.
  Graph(int n, VertexSet vertices);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// Hub joined to every other vertex of {1..n}.
  static Graph star(int n, int hub);

  int n() const { return n_; }
  VertexSet vertices() const { return vertices_; }
  int order() const { return vertices_.size(); }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  VertexSet neighbors(int v) const;
  int degree(int v) const { return neighbors(v).size(); }
  std::size_t edge_count() const;
  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;  // indexed by label, slot 0 unused
};

/// Vertex sets of the components of G \ U, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet u);

/// s(U): number of components of G \ U.
int component_count(const Graph& g, VertexSet u);

/// True iff s(U) > 1.
bool is_cutset(const Graph& g, VertexSet u);

bool is_connected(const Graph& g);

/// G \ U, keeping the original labels.
Graph remove(const Graph& g, VertexSet u);

/// phi(U): vertices outside U adjacent to some vertex of U.
VertexSet neighbor_set(const Graph& g, VertexSet u);

/// kappa(U): all pairs inside U.
std::vector<Edge> clique_edges(VertexSet u);

enum class Shape { Path, Cycle, ForestOfPaths, Tree, K1 };

/// Every label that applies; a graph matching none is "Other".
std::vector<Shape> classify_shape(const Graph& g);
bool is_tree(const Graph& g);
std::string to_string(Shape s);

/// Relabels the universe onto 1..order() in increasing label order.
/// `labels[i]` is the original label of new vertex i+1.
struct CompactGraph {
  Graph graph;
  std::vector<int> labels;
};
CompactGraph compact(const Graph& g);

/// Relabels vertex v to perm[v-1]; perm must be a permutation of 1..n.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Graphviz DOT, undirected, integer vertex names.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace imrf
