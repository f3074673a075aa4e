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

#include "imrf/subfield.hpp"

#include <algorithm>
#include <deque>

#include "imrf/fcmi.hpp"
#include "imrf/witnesses.hpp"

namespace imrf {

namespace {

void check_subset(const Graph& g, VertexSet vp) {
  if (vp.empty()) throw InvalidArgument("V' must be nonempty");
  if (!vp.subset_of(g.vertices())) throw InvalidArgument("V' is not inside the vertex set");
}

// Vertices of `region` reachable from the neighbours of `start` inside `region`.
VertexSet reach_within(const Graph& g, VertexSet start, VertexSet region) {
  VertexSet seen;
  VertexSet frontier = neighbor_set(g, start) & region;
  while (!frontier.empty()) {
    seen |= frontier;
    VertexSet next;
    for (int w : frontier) next |= g.neighbors(w);
    frontier = (next & region) - seen;
  }
  return seen;
}

Graph induced_on(const Graph& g, VertexSet vp) {
  Graph out(g.n(), vp);
  for (const Edge& e : g.edges())
    if (vp.contains(e.first) && vp.contains(e.second)) out.add_edge(e.first, e.second);
  return out;
}

void add_clique(Graph& g, VertexSet s) {
  for (const Edge& e : clique_edges(s)) g.add_edge(e.first, e.second);
}

}  // namespace

std::string to_string(Construction c) {
  switch (c) {
    case Construction::Paths: return "paths";
    case Construction::ClosedForm: return "closed-form";
    case Construction::Elimination: return "elimination";
  }
  return "?";
}

Graph g_star_paths(const Graph& g, VertexSet vp) {
  check_subset(g, vp);
  const VertexSet outside = g.vertices() - vp;
  Graph out(g.n(), vp);
  for (int u : vp) {
    const VertexSet via = reach_within(g, VertexSet{u}, outside);
    const VertexSet targets = (g.neighbors(u) | neighbor_set(g, via)) & vp;
    for (int v : targets)
      if (v > u) out.add_edge(u, v);
  }
  return out;
}

Graph g_star_closed_form(const Graph& g, VertexSet vp) {
  check_subset(g, vp);
  Graph out = induced_on(g, vp);
  const Graph rest = remove(g, vp);
  for (VertexSet part : components(rest, {})) add_clique(out, neighbor_set(g, part));
  return out;
}

Graph g_star_elimination(const Graph& g, VertexSet vp, const std::vector<int>& order) {
  check_subset(g, vp);
  const VertexSet outside = g.vertices() - vp;
  std::vector<int> seq = order;
  if (seq.empty()) {
    seq = outside.members();
    std::reverse(seq.begin(), seq.end());
  }
  if (VertexSet::of(seq) != outside || seq.size() != static_cast<std::size_t>(outside.size())) {
    throw InvalidArgument("elimination order must list V - V' exactly once");
  }
  Graph cur = g;
  for (int v : seq) {
    const VertexSet nb = cur.neighbors(v);
    Graph next = remove(cur, VertexSet{v});
    add_clique(next, nb);
    cur = std::move(next);
  }
  return cur;
}

SubfieldResult subfield(const Graph& g, VertexSet vp, Construction construction) {
  SubfieldResult out;
  out.construction = construction;
  out.rho = rho(g, vp);
  switch (construction) {
    case Construction::Paths: out.g_star = g_star_paths(g, vp); break;
    case Construction::ClosedForm: out.g_star = g_star_closed_form(g, vp); break;
    case Construction::Elimination: out.g_star = g_star_elimination(g, vp); break;
  }
  return out;
}

VertexSet rho(const Graph& g, VertexSet vp) {
  check_subset(g, vp);
  return neighbor_set(g, g.vertices() - vp) & vp;
}

bool equals_induced(const Graph& g, VertexSet vp) {
  const VertexSet boundary = rho(g, vp);
  const VertexSet outside = g.vertices() - vp;
  for (int v : boundary) {
    const VertexSet via = reach_within(g, VertexSet{v}, outside);
    const VertexSet joined = neighbor_set(g, via) & boundary;
    for (int w : joined)
      if (w != v && !g.has_edge(v, w)) return false;
  }
  return true;
}

bool cutset_lift(const Graph& g, VertexSet vp, VertexSet t) {
  if (!t.subset_of(vp)) throw InvalidArgument("t must lie inside V'");
  return !is_cutset(g_star_paths(g, vp), t) || is_cutset(g, t);
}

SubtreeResult subtree_condition(const Graph& g, VertexSet vp) {
  if (!is_tree(g)) throw InvalidArgument("subtree condition needs a tree");
  check_subset(g, vp);
  const VertexSet outside = g.vertices() - vp;
  SubtreeResult out;
  for (int u : outside) {
    VertexSet region = reach_within(g, VertexSet{u}, outside);
    region.insert(u);
    const auto hits = (neighbor_set(g, region) & vp).members();
    if (hits.size() >= 3) {
      out.holds = false;
      out.witness = SubtreeViolation{u, hits[0], hits[1], hits[2]};
      return out;
    }
  }
  return out;
}

SmallestRepResult smallest_graph(const AtomSet& a2) {
  const int n = a2.n();
  SmallestRepResult out;
  out.g_hat = Graph(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!a2.contains(pair_atom(n, u, v))) out.g_hat.add_edge(u, v);
  out.witness_atoms = image_of_graph(out.g_hat) - a2;
  out.exists = out.witness_atoms.empty();
  return out;
}

VertexSet star_path_interior(const Graph& g, VertexSet vp, int u, int v) {
  check_subset(g, vp);
  if (u == v || !vp.contains(u) || !vp.contains(v)) throw InvalidArgument("u and v must be distinct vertices of V'");
  if (g.has_edge(u, v)) return {};
  const VertexSet outside = g.vertices() - vp;
  std::vector<int> parent(static_cast<std::size_t>(g.n() + 1), 0);
  std::deque<int> queue;
  for (int w : g.neighbors(u) & outside) {
    parent[static_cast<std::size_t>(w)] = u;
    queue.push_back(w);
  }
  while (!queue.empty()) {
    const int w = queue.front();
    queue.pop_front();
    if (g.has_edge(w, v)) {
      VertexSet interior;
      for (int x = w; x != u; x = parent[static_cast<std::size_t>(x)]) interior.insert(x);
      return interior;
    }
    for (int x : g.neighbors(w) & outside) {
      if (parent[static_cast<std::size_t>(x)] != 0) continue;
      parent[static_cast<std::size_t>(x)] = w;
      queue.push_back(x);
    }
  }
  throw InvalidArgument("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of G*(V')");
}

Distribution minimality_witness(const Graph& g, VertexSet vp, int u, int v) {
  if (g.vertices() != VertexSet::all(g.n())) throw InvalidArgument("minimality witness needs a graph on 1..n");
  VertexSet support = star_path_interior(g, vp, u, v);
  support.insert(u);
  support.insert(v);
  return atom_concentrator(g.n(), support);
}

}  // namespace imrf
