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

#include "imrf/graph.hpp"

#include <algorithm>
#include <sstream>

namespace imrf {

std::string VertexSet::to_string() const {
  std::string out;
  for (int v : *this) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

VertexSet parse_vertex_set(const std::string& text) {
  VertexSet s;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not a vertex label: '" + token + "'");
    }
    if (used != token.size()) throw InvalidArgument("not a vertex label: '" + token + "'");
    s.insert(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '\t') {
      token += c;
    }
  }
  flush();
  return s;
}

Graph::Graph(int n) : Graph(n, VertexSet::all(n)) {}

Graph::Graph(int n, VertexSet vertices) : n_(n), vertices_(vertices) {
  if (n < 0 || n > kMaxGraphVertices) {
    throw CapacityExceeded("graph order " + std::to_string(n) + " outside 0.." +
                           std::to_string(kMaxGraphVertices));
  }
  if (!vertices.subset_of(VertexSet::all(n))) {
    throw InvalidArgument("vertex universe not inside 1..n");
  }
  adjacency_.assign(static_cast<std::size_t>(n) + 1, VertexSet{});
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.first, e.second);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(1, n);
  return g;
}

Graph Graph::star(int n, int hub) {
  Graph g(n);
  for (int v = 1; v <= n; ++v)
    if (v != hub) g.add_edge(hub, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (!vertices_.contains(v)) {
    throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
  }
}

bool Graph::has_edge(int u, int v) const {
  if (!vertices_.contains(u) || !vertices_.contains(v)) return false;
  return adjacency_[static_cast<std::size_t>(u)].contains(v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  adjacency_[static_cast<std::size_t>(u)].insert(v);
  adjacency_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adjacency_[static_cast<std::size_t>(u)].erase(v);
  adjacency_[static_cast<std::size_t>(v)].erase(u);
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v : vertices_) twice += static_cast<std::size_t>(adjacency_[static_cast<std::size_t>(v)].size());
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u : vertices_)
    for (int v : adjacency_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || vertices_ != other.vertices_) return false;
  for (int v : vertices_)
    if (adjacency_[static_cast<std::size_t>(v)] != other.adjacency_[static_cast<std::size_t>(v)]) return false;
  return true;
}

namespace {

// Grows `seed` to its component inside `allowed`.
VertexSet flood(const Graph& g, VertexSet seed, VertexSet allowed) {
  VertexSet reached = seed;
  VertexSet frontier = seed;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, VertexSet u) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - u;
  while (!rest.empty()) {
    VertexSet comp = flood(g, VertexSet{rest.min()}, rest);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

int component_count(const Graph& g, VertexSet u) {
  return static_cast<int>(components(g, u).size());
}

bool is_cutset(const Graph& g, VertexSet u) {
  VertexSet rest = g.vertices() - u;
  if (rest.empty()) return false;
  return flood(g, VertexSet{rest.min()}, rest) != rest;
}

bool is_connected(const Graph& g) { return component_count(g, {}) <= 1; }

Graph remove(const Graph& g, VertexSet u) {
  Graph out(g.n(), g.vertices() - u);
  for (const Edge& e : g.edges())
    if (!u.contains(e.first) && !u.contains(e.second)) out.add_edge(e.first, e.second);
  return out;
}

VertexSet neighbor_set(const Graph& g, VertexSet u) {
  VertexSet out;
  for (int v : u & g.vertices()) out |= g.neighbors(v);
  return out - u;
}

std::vector<Edge> clique_edges(VertexSet u) {
  std::vector<Edge> out;
  for (int a : u)
    for (int b : u)
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && g.edge_count() + 1 == static_cast<std::size_t>(g.order());
}

std::vector<Shape> classify_shape(const Graph& g) {
  std::vector<Shape> out;
  int max_degree = 0;
  bool has_leaf = false;
  bool all_two = g.order() > 0;
  for (int v : g.vertices()) {
    int d = g.degree(v);
    max_degree = std::max(max_degree, d);
    has_leaf = has_leaf || d == 1;
    all_two = all_two && d == 2;
  }
  const auto comps = components(g, {});
  const bool connected = comps.size() == 1;
  const bool acyclic = g.edge_count() + comps.size() == static_cast<std::size_t>(g.order());

  if (connected && max_degree <= 2 && (has_leaf || g.order() == 1)) out.push_back(Shape::Path);
  if (connected && all_two) out.push_back(Shape::Cycle);
  if (comps.size() >= 2 && max_degree <= 2 && acyclic) out.push_back(Shape::ForestOfPaths);
  if (connected && acyclic) out.push_back(Shape::Tree);
  if (max_degree >= 3) out.push_back(Shape::K1);
  return out;
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Path: return "Path";
    case Shape::Cycle: return "Cycle";
    case Shape::ForestOfPaths: return "ForestOfPaths";
    case Shape::Tree: return "Tree";
    case Shape::K1: return "K1";
  }
  return "Other";
}

CompactGraph compact(const Graph& g) {
  CompactGraph out{Graph(g.order()), g.vertices().members()};
  std::vector<int> index(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t i = 0; i < out.labels.size(); ++i) index[static_cast<std::size_t>(out.labels[i])] = static_cast<int>(i) + 1;
  for (const Edge& e : g.edges())
    out.graph.add_edge(index[static_cast<std::size_t>(e.first)], index[static_cast<std::size_t>(e.second)]);
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(g.n())) throw InvalidArgument("permutation size mismatch");
  VertexSet image;
  for (int p : perm) image.insert(p);
  if (image != VertexSet::all(g.n())) throw InvalidArgument("not a permutation of 1..n");
  VertexSet universe;
  for (int v : g.vertices()) universe.insert(perm[static_cast<std::size_t>(v - 1)]);
  Graph out(g.n(), universe);
  for (const Edge& e : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(e.first - 1)], perm[static_cast<std::size_t>(e.second - 1)]);
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v : g.vertices()) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.first << " -- " << e.second << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace imrf
