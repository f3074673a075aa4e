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

#include "imrf/fcmi.hpp"

#include <algorithm>
#include <cmath>

namespace imrf {

Fcmi::Fcmi(int n, VertexSet t, std::vector<VertexSet> qs) : n_(n), t_(t), qs_(std::move(qs)) {
  if (n < 1 || n > kMaxGraphVertices) throw CapacityExceeded("FCMI over n=" + std::to_string(n));
  if (qs_.size() < 2) throw InvalidArgument("a CMI needs at least two parts Q_i");
  const VertexSet universe = VertexSet::all(n);
  if (!t_.subset_of(universe)) throw InvalidArgument("T not inside 1..n");
  VertexSet seen = t_;
  for (VertexSet q : qs_) {
    if (q.empty()) throw InvalidArgument("empty part Q_i");
    if (!q.subset_of(universe)) throw InvalidArgument("part Q_i not inside 1..n");
    if (q.intersects(seen)) throw InvalidArgument("T and the Q_i must be pairwise disjoint");
    seen |= q;
  }
  std::sort(qs_.begin(), qs_.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
}

VertexSet Fcmi::scope() const {
  VertexSet s = t_;
  for (VertexSet q : qs_) s |= q;
  return s;
}

std::string Fcmi::to_string() const {
  auto render = [](VertexSet s) {
    std::string out;
    for (int v : s) {
      if (!out.empty()) out += ' ';
      out += std::to_string(v);
    }
    return out.empty() ? std::string("{}") : out;
  };
  std::string out = "(" + render(t_) + ";";
  for (std::size_t i = 0; i < qs_.size(); ++i) out += (i == 0 ? " " : " | ") + render(qs_[i]);
  return out + ")";
}

namespace {

// Calls visit(W_1 u ... u W_k, U) for every choice of W_i subset Q_i with at
// least two W_i nonempty, where U = T u (Q_i - W_i) over all i.
template <typename Visit>
void for_each_prescribed_set(const Fcmi& k, Visit&& visit) {
  const auto& qs = k.qs();
  std::vector<VertexSet::mask_type> chosen(qs.size(), 0);
  // Odometer over the subset lattices of each Q_i.
  while (true) {
    int nonempty = 0;
    VertexSet w;
    VertexSet u = k.t();
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const VertexSet wi = VertexSet::from_mask(chosen[i]);
      if (!wi.empty()) ++nonempty;
      w |= wi;
      u |= qs[i] - wi;
    }
    if (nonempty >= 2) visit(w, u);

    std::size_t i = 0;
    for (; i < qs.size(); ++i) {
      // next submask of qs[i] in increasing order
      const auto q = qs[i].mask();
      chosen[i] = (chosen[i] - q) & q;
      if (chosen[i] != 0) break;
    }
    if (i == qs.size()) return;
  }
}

int atom_order(const Graph& g) {
  const int order = g.order();
  if (g.vertices() != VertexSet::all(order)) {
    throw InvalidArgument("atom classification needs a graph on 1..k; compact() it first");
  }
  return order;
}

}  // namespace

AtomSet image_of_fcmi(const Fcmi& k) {
  if (!k.is_full()) throw InvalidArgument("image_of_fcmi needs a full CMI; use image_of_partial");
  AtomSet out(k.n());
  for_each_prescribed_set(k, [&](VertexSet, VertexSet u) { out.insert(Atom(k.n(), u)); });
  return out;
}

AtomSet image_of_fcmi_by_membership(const Fcmi& k) {
  if (!k.is_full()) throw InvalidArgument("image_of_fcmi needs a full CMI; use image_of_partial");
  AtomSet out(k.n());
  for (std::uint32_t index = 0; index < atom_count(k.n()); ++index) {
    const Atom a = Atom::from_index(k.n(), index);
    const VertexSet w = a.support();
    if (w.intersects(k.t())) continue;
    int touched = 0;
    for (VertexSet q : k.qs())
      if (w.intersects(q)) ++touched;
    if (touched >= 2) out.insert_index(index);
  }
  return out;
}

std::vector<AtomSet> image_of_partial(const Fcmi& k) {
  std::vector<AtomSet> out;
  if (k.is_full()) {
    for (const Atom& a : image_of_fcmi(k).atoms()) out.emplace_back(k.n(), std::vector<Atom>{a});
    return out;
  }
  const VertexSet outside = VertexSet::all(k.n()) - k.scope();
  for_each_prescribed_set(k, [&](VertexSet, VertexSet u) {
    AtomSet expanded(k.n());
    // S ranges over subsets of V - V' that stay non-complemented.
    const auto m = outside.mask();
    VertexSet::mask_type s = 0;
    do {
      expanded.insert(Atom(k.n(), u | (outside - VertexSet::from_mask(s))));
      s = (s - m) & m;
    } while (s != 0);
    out.push_back(std::move(expanded));
  });
  return out;
}

Fcmi recover_fcmi(const AtomSet& image) {
  const int n = image.n();
  const auto atoms = image.atoms();
  if (atoms.empty()) throw NotAnFcmiImage("empty atom set");

  int best = 0;
  for (const Atom& a : atoms) best = std::max(best, a.weight());
  std::vector<Atom> heaviest;
  for (const Atom& a : atoms)
    if (a.weight() == best) heaviest.push_back(a);
  if (heaviest.size() != 1) throw NotAnFcmiImage("no unique atom of maximal weight");

  const VertexSet t = heaviest.front().complemented();
  const VertexSet rest = VertexSet::all(n) - t;

  // Relation q: l ~ l' iff the pair atom X_l cap X_l' - X_{V-{l,l'}} is absent.
  auto related = [&](int l, int lp) { return l == lp || !image.contains(pair_atom(n, l, lp)); };

  std::vector<VertexSet> classes;
  VertexSet assigned;
  for (int l : rest) {
    if (assigned.contains(l)) continue;
    VertexSet cls;
    for (int lp : rest)
      if (related(l, lp)) cls.insert(lp);
    // Transitivity: every member must see exactly the same class.
    for (int m : cls) {
      VertexSet other;
      for (int lp : rest)
        if (related(m, lp)) other.insert(lp);
      if (other != cls) throw NotAnFcmiImage("relation q is not transitive on this atom set");
    }
    if (cls.intersects(assigned)) throw NotAnFcmiImage("relation q is not an equivalence");
    assigned |= cls;
    classes.push_back(cls);
  }
  if (classes.size() < 2) throw NotAnFcmiImage("fewer than two independent parts");

  Fcmi k(n, t, classes);
  if (image_of_fcmi(k) != image) throw NotAnFcmiImage("atom set differs from the image of " + k.to_string());
  return k;
}

bool fcmi_holds(const Fcmi& k, const IMeasureVector& mu, double tol) {
  if (mu.n() != k.n()) throw InvalidArgument("I-Measure and CMI over different n");
  if (k.is_full()) {
    const AtomSet image = image_of_fcmi(k);
    for (const Atom& a : image.atoms())
      if (std::abs(mu[a]) > tol) return false;
    return true;
  }
  for (const AtomSet& set : image_of_partial(k)) {
    double sum = 0.0;
    for (const Atom& a : set.atoms()) sum += mu[a];
    if (std::abs(sum) > tol) return false;
  }
  return true;
}

AtomType type_of_atom(const Graph& g, const Atom& a) {
  if (atom_order(g) != a.n()) throw InvalidArgument("atom and graph over different n");
  return is_cutset(g, a.complemented()) ? AtomType::TypeII : AtomType::TypeI;
}

AtomSet image_of_graph(const Graph& g) {
  const int n = atom_order(g);
  AtomSet out(n);
  for (std::uint32_t index = 0; index < atom_count(n); ++index)
    if (is_cutset(g, VertexSet::from_mask(index))) out.insert_index(index);
  return out;
}

AtomSet type1_atoms(const Graph& g) { return image_of_graph(g).complement(); }

Fcmi cutset_fcmi(const Graph& g, VertexSet u) {
  const int n = atom_order(g);
  auto parts = components(g, u);
  if (parts.size() < 2) throw InvalidArgument("{" + u.to_string() + "} is not a cutset");
  return Fcmi(n, u, std::move(parts));
}

Atom pair_atom(int n, int u, int v) { return Atom::with_support(n, VertexSet{u, v}); }

Graph recover_graph(const AtomSet& image) {
  const int n = image.n();
  Graph g = Graph::complete(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (image.contains(pair_atom(n, u, v))) g.remove_edge(u, v);
  return g;
}

AtomSet image_of_collection(int n, const std::vector<Fcmi>& collection) {
  AtomSet out(n);
  for (const Fcmi& k : collection) {
    if (k.n() != n) throw InvalidArgument("FCMIs over different n");
    out |= image_of_fcmi(k);
  }
  return out;
}

bool implies(const std::vector<Fcmi>& pi1, const std::vector<Fcmi>& pi2) {
  int n = 0;
  for (const auto* pi : {&pi1, &pi2})
    for (const Fcmi& k : *pi) n = std::max(n, k.n());
  if (n == 0) return true;
  return image_of_collection(n, pi2).subset_of(image_of_collection(n, pi1));
}

}  // namespace imrf
