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

#include "imrf/json_io.hpp"

#include <fstream>
#include <sstream>

namespace imrf::io {

namespace {

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key, "missing");
  return *it;
}

int int_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 31) || v > (1LL << 31)) throw ParseError(where, "integer out of range");
  return static_cast<int>(v);
}

double number_from(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where, "expected a number");
  return j.get<double>();
}

int n_from(const Json& j, const std::string& where, int cap = kMaxGraphVertices) {
  const int n = int_from(member(j, "n", where), where + ".n");
  if (n < 1) throw ParseError(where + ".n", "must be positive");
  if (n > cap) throw ParseError(where + ".n", "exceeds the cap of " + std::to_string(cap));
  return n;
}

// Re-raises library validation failures as parse errors on `where`.
template <typename F>
auto guarded(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(where, e.what());
  }
}

std::string index_path(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

}  // namespace

Json to_json(VertexSet s) { return Json(s.members()); }

VertexSet vertex_set_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return guarded(where, [&] { return parse_vertex_set(j.get<std::string>()); });
  if (!j.is_array()) throw ParseError(where, "expected an array of vertex labels");
  VertexSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int v = int_from(j[i], index_path(where, i));
    guarded(index_path(where, i), [&] {
      s.insert(v);
      return 0;
    });
  }
  return s;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  Json out{{"n", g.n()}, {"edges", edges}};
  if (g.vertices() != VertexSet::all(g.n())) out["vertices"] = to_json(g.vertices());
  return out;
}

Graph graph_from_json(const Json& j, const std::string& where) {
  const int n = n_from(j, where);
  const Json& edges = member(j, "edges", where);
  if (!edges.is_array()) throw ParseError(where + ".edges", "expected an array");
  Graph g(n);
  if (j.contains("vertices")) {
    const VertexSet universe = vertex_set_from_json(j["vertices"], where + ".vertices");
    if (!universe.subset_of(VertexSet::all(n))) throw ParseError(where + ".vertices", "labels outside 1..n");
    g = Graph(n, universe);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + ".edges" + "[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) throw ParseError(at, "expected a pair [u, v]");
    const int u = int_from(edges[i][0], at + "[0]");
    const int v = int_from(edges[i][1], at + "[1]");
    guarded(at, [&] {
      g.add_edge(u, v);
      return 0;
    });
  }
  return g;
}

Json to_json(const Atom& a) { return Json{{"n", a.n()}, {"complemented", to_json(a.complemented())}}; }

Atom atom_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return guarded(where, [&] { return parse_atom(j.get<std::string>()); });
  const int n = n_from(j, where);
  const VertexSet u = vertex_set_from_json(member(j, "complemented", where), where + ".complemented");
  return guarded(where, [&] { return Atom(n, u); });
}

Json to_json(const AtomSet& s) {
  Json atoms = Json::array();
  for (const Atom& a : s.atoms()) atoms.push_back(a.to_string());
  return Json{{"n", s.n()}, {"atoms", atoms}};
}

AtomSet atom_set_from_json(const Json& j, const std::string& where) {
  const int n = n_from(j, where, kMaxAtomVertices);
  const Json& atoms = member(j, "atoms", where);
  if (!atoms.is_array()) throw ParseError(where + ".atoms", "expected an array");
  AtomSet out(n);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string at = index_path(where + ".atoms", i);
    const Atom a = atom_from_json(atoms[i], at);
    if (a.n() != n) throw ParseError(at, "atom over n=" + std::to_string(a.n()) + ", expected " + std::to_string(n));
    out.insert(a);
  }
  return out;
}

Json to_json(const Fcmi& k) {
  Json qs = Json::array();
  for (VertexSet q : k.qs()) qs.push_back(to_json(q));
  return Json{{"n", k.n()}, {"T", to_json(k.t())}, {"Q", qs}};
}

Fcmi fcmi_from_json(const Json& j, const std::string& where) {
  const int n = n_from(j, where);
  const VertexSet t = j.contains("T") ? vertex_set_from_json(j["T"], where + ".T") : VertexSet{};
  const Json& q = member(j, "Q", where);
  if (!q.is_array()) throw ParseError(where + ".Q", "expected an array of vertex sets");
  std::vector<VertexSet> qs;
  for (std::size_t i = 0; i < q.size(); ++i) qs.push_back(vertex_set_from_json(q[i], index_path(where + ".Q", i)));
  return guarded(where, [&] { return Fcmi(n, t, qs); });
}

std::vector<Fcmi> fcmi_list_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) return {fcmi_from_json(j, where)};
  if (!j.is_array()) throw ParseError(where, "expected an FCMI object or an array of them");
  std::vector<Fcmi> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(fcmi_from_json(j[i], index_path(where, i)));
  return out;
}

Json to_json(const Distribution& p) {
  Json probs = Json::array();
  for (const Outcome& o : p.support()) probs.push_back(Json{{"x", o.x}, {"p", o.p}});
  return Json{{"n", p.n()}, {"alphabets", p.alphabet_sizes()}, {"probs", probs}};
}

Distribution distribution_from_json(const Json& j, const std::string& where) {
  const int n = n_from(j, where);
  const Json& alph = member(j, "alphabets", where);
  if (!alph.is_array() || alph.size() != static_cast<std::size_t>(n)) {
    throw ParseError(where + ".alphabets", "expected an array of n alphabet sizes");
  }
  std::vector<std::uint32_t> alphabets;
  for (std::size_t i = 0; i < alph.size(); ++i) {
    const int a = int_from(alph[i], index_path(where + ".alphabets", i));
    if (a < 1) throw ParseError(index_path(where + ".alphabets", i), "alphabet size must be positive");
    alphabets.push_back(static_cast<std::uint32_t>(a));
  }
  const Json& probs = member(j, "probs", where);
  if (!probs.is_array()) throw ParseError(where + ".probs", "expected an array");
  std::vector<Outcome> outcomes;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const std::string at = index_path(where + ".probs", i);
    const Json& x = member(probs[i], "x", at);
    if (!x.is_array()) throw ParseError(at + ".x", "expected an array");
    Outcome o;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const int s = int_from(x[k], index_path(at + ".x", k));
      if (s < 0) throw ParseError(index_path(at + ".x", k), "symbols are nonnegative");
      o.x.push_back(static_cast<std::uint32_t>(s));
    }
    o.p = number_from(member(probs[i], "p", at), at + ".p");
    outcomes.push_back(std::move(o));
  }
  return guarded(where + ".probs", [&] { return Distribution(alphabets, outcomes); });
}

Json to_json(const EntropyVector& h) {
  Json values = Json::object();
  for (std::uint32_t m = 1; m < h.values().size(); ++m) values[VertexSet::from_mask(m).to_string()] = h.values()[m];
  return Json{{"n", h.n()}, {"base", h.base()}, {"h", values}};
}

EntropyVector entropy_from_json(const Json& j, const std::string& where) {
  const int n = n_from(j, where, kMaxAtomVertices);
  const double base = j.contains("base") ? number_from(j["base"], where + ".base") : 2.0;
  const Json& values = member(j, "h", where);
  if (!values.is_object()) throw ParseError(where + ".h", "expected an object keyed by vertex sets");
  EntropyVector h = guarded(where + ".base", [&] { return EntropyVector(n, base); });
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::string at = where + ".h[\"" + it.key() + "\"]";
    const VertexSet b = guarded(at, [&] { return parse_vertex_set(it.key()); });
    if (b.empty() || !b.subset_of(VertexSet::all(n))) throw ParseError(at, "key must be a nonempty subset of 1..n");
    h[b] = number_from(it.value(), at);
    seen[b.mask()] = true;
  }
  for (std::size_t m = 1; m < seen.size(); ++m) {
    if (!seen[m]) throw ParseError(where + ".h", "missing entry for {" + VertexSet::from_mask(static_cast<VertexSet::mask_type>(m)).to_string() + "}");
  }
  return h;
}

Json to_json(const IMeasureVector& mu) {
  Json values = Json::object();
  for (std::uint32_t i = 0; i < mu.values().size(); ++i) values[Atom::from_index(mu.n(), i).to_string()] = mu.values()[i];
  return Json{{"n", mu.n()}, {"base", mu.base()}, {"mu", values}};
}

IMeasureVector imeasure_from_json(const Json& j, const std::string& where) {
  const int n = n_from(j, where, kMaxAtomVertices);
  const double base = j.contains("base") ? number_from(j["base"], where + ".base") : 2.0;
  const Json& values = member(j, "mu", where);
  if (!values.is_object()) throw ParseError(where + ".mu", "expected an object keyed by atoms");
  IMeasureVector mu = guarded(where + ".base", [&] { return IMeasureVector(n, base); });
  std::vector<bool> seen(atom_count(n), false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::string at = where + ".mu[\"" + it.key() + "\"]";
    const Atom a = guarded(at, [&] { return parse_atom(it.key()); });
    if (a.n() != n) throw ParseError(at, "atom over a different n");
    mu[a] = number_from(it.value(), at);
    seen[a.index()] = true;
  }
  for (std::uint32_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError(where + ".mu", "missing entry for atom " + Atom::from_index(n, i).to_string());
  return mu;
}

Json to_json(const SubfieldResult& r, bool equals_induced) {
  return Json{{"g_star", to_json(r.g_star)},
              {"equals_induced", equals_induced},
              {"rho", to_json(r.rho)},
              {"construction", to_string(r.construction)}};
}

Json to_json(const SmallestRepResult& r) {
  return Json{{"g_hat", to_json(r.g_hat)}, {"exists", r.exists}, {"witness_atoms", to_json(r.witness_atoms)}};
}

Json to_json(const SubtreeResult& r) {
  Json out{{"holds", r.holds}};
  if (r.witness) out["witness"] = Json{{"u", r.witness->u}, {"v", {r.witness->v1, r.witness->v2, r.witness->v3}}};
  return out;
}

Json parse(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where, std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

}  // namespace imrf::io
