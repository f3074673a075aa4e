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

#include "imrf/diagram.hpp"

#include <sstream>

#include "imrf/fcmi.hpp"
#include "imrf/json_io.hpp"

namespace imrf {

std::string to_string(Action a) {
  switch (a) {
    case Action::Split: return "split";
    case Action::Include: return "include";
    case Action::Exclude: return "exclude";
  }
  return "?";
}

Action parse_action(const std::string& text) {
  if (text == "split") return Action::Split;
  if (text == "include") return Action::Include;
  if (text == "exclude") return Action::Exclude;
  throw InvalidArgument("unknown action '" + text + "'");
}

std::vector<Graph> elimination_sequence(const Graph& g) {
  const int n = g.order();
  if (n < 1 || g.vertices() != VertexSet::all(n) || g.n() != n) {
    throw InvalidArgument("elimination sequence needs a graph on 1..n");
  }
  std::vector<Graph> seq(static_cast<std::size_t>(n));
  seq[static_cast<std::size_t>(n - 1)] = g;
  for (int m = n - 1; m >= 1; --m) {
    const Graph& next = seq[static_cast<std::size_t>(m)];
    const int v = m + 1;
    Graph cur = remove(next, VertexSet{v});
    for (const Edge& e : clique_edges(next.neighbors(v))) cur.add_edge(e.first, e.second);
    seq[static_cast<std::size_t>(m - 1)] = std::move(cur);
  }
  return seq;
}

Action classify_atom(const std::vector<Graph>& seq, int m, const Atom& a) {
  if (m < 2 || m > static_cast<int>(seq.size())) throw InvalidArgument("step m out of range");
  if (a.n() != m - 1) throw InvalidArgument("atom must live over N_{m-1}");
  const Graph& prev = seq[static_cast<std::size_t>(m - 2)];
  const Graph& cur = seq[static_cast<std::size_t>(m - 1)];
  if (type_of_atom(prev, a) != AtomType::TypeI) throw InvalidArgument("atom " + a.to_string() + " is Type II");

  const VertexSet u = a.complemented();
  const int free_neighbours = (cur.neighbors(m) - u).size();
  if (free_neighbours == 0) return Action::Exclude;
  if (free_neighbours == 1) return Action::Split;
  VertexSet u_out = u;
  u_out.insert(m);
  return is_cutset(cur, u_out) ? Action::Include : Action::Split;
}

DiagramPlan build_plan(const Graph& g) {
  DiagramPlan plan;
  plan.sequence = elimination_sequence(g);
  plan.n = g.order();
  check_atom_capacity(plan.n);
  for (int m = 2; m <= plan.n; ++m) {
    PlanStep step;
    step.m = m;
    step.gamma = plan.sequence[static_cast<std::size_t>(m - 1)].neighbors(m);
    for (const Atom& a : type1_atoms(plan.sequence[static_cast<std::size_t>(m - 2)]).atoms()) {
      step.atoms.push_back({a, classify_atom(plan.sequence, m, a)});
    }
    plan.steps.push_back(std::move(step));
  }
  plan.final_type1 = unsuppressed_after(plan, plan.n);
  return plan;
}

AtomSet unsuppressed_after(const DiagramPlan& plan, int m) {
  if (m < 1 || m > plan.n) throw InvalidArgument("step m out of range");
  AtomSet kept(1, {Atom(1, {})});
  for (int k = 2; k <= m; ++k) {
    const PlanStep& step = plan.steps[static_cast<std::size_t>(k - 2)];
    AtomSet next(k);
    // The region of X_k outside every earlier curve is always kept.
    next.insert(Atom(k, VertexSet::all(k - 1)));
    for (const Classification& c : step.atoms) {
      if (!kept.contains(c.atom)) throw InvalidArgument("plan step classifies a suppressed atom");
      const VertexSet u = c.atom.complemented();
      VertexSet u_out = u;
      u_out.insert(k);
      if (c.action != Action::Exclude) next.insert(Atom(k, u));
      if (c.action != Action::Include) next.insert(Atom(k, u_out));
    }
    kept = std::move(next);
  }
  return kept;
}

PlanFormat parse_plan_format(const std::string& text) {
  if (text == "json") return PlanFormat::Json;
  if (text == "dot") return PlanFormat::Dot;
  if (text == "text") return PlanFormat::Text;
  throw InvalidArgument("unknown plan format '" + text + "'");
}

namespace {

std::string plan_json(const DiagramPlan& plan) {
  io::Json seq = io::Json::array();
  for (const Graph& g : plan.sequence) seq.push_back(io::to_json(g));
  io::Json steps = io::Json::array();
  for (const PlanStep& s : plan.steps) {
    io::Json atoms = io::Json::array();
    for (const Classification& c : s.atoms) atoms.push_back({{"atom", c.atom.to_string()}, {"action", to_string(c.action)}});
    steps.push_back({{"m", s.m}, {"gamma", io::to_json(s.gamma)}, {"atoms", atoms}});
  }
  io::Json out{{"n", plan.n}, {"sequence", seq}, {"steps", steps}, {"final_type1", io::to_json(plan.final_type1)}};
  return out.dump(2) + "\n";
}

std::string plan_dot(const DiagramPlan& plan) {
  std::ostringstream out;
  out << "graph plan {\n";
  for (std::size_t i = 0; i < plan.sequence.size(); ++i) {
    const int m = static_cast<int>(i) + 1;
    const Graph& g = plan.sequence[i];
    out << "  subgraph cluster_N" << m << " {\n";
    out << "    label=\"G*(N_" << m << ")\";\n";
    for (int v : g.vertices()) out << "    m" << m << "_" << v << " [label=\"" << v << "\"];\n";
    for (const Edge& e : g.edges()) out << "    m" << m << "_" << e.first << " -- m" << m << "_" << e.second << ";\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string plan_text(const DiagramPlan& plan) {
  std::ostringstream out;
  out << "n = " << plan.n << "\n";
  for (const PlanStep& s : plan.steps) {
    out << "step " << s.m << ": gamma = {" << s.gamma.to_string() << "}\n";
    for (const Classification& c : s.atoms) out << "  " << c.atom.to_bar_string() << "  " << to_string(c.action) << "\n";
  }
  out << "type I atoms of G (" << plan.final_type1.size() << "):\n";
  for (const Atom& a : plan.final_type1.atoms()) out << "  " << a.to_bar_string() << "\n";
  return out.str();
}

}  // namespace

std::string export_plan(const DiagramPlan& plan, PlanFormat format) {
  switch (format) {
    case PlanFormat::Json: return plan_json(plan);
    case PlanFormat::Dot: return plan_dot(plan);
    case PlanFormat::Text: return plan_text(plan);
  }
  throw InvalidArgument("unknown plan format");
}

DiagramPlan parse_plan_json(const std::string& text) {
  const io::Json j = io::parse(text, "plan");
  if (!j.is_object()) throw ParseError("plan", "expected an object");
  DiagramPlan plan;
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("plan.n", "expected an integer");
  plan.n = j["n"].get<int>();
  if (!j.contains("sequence") || !j["sequence"].is_array()) throw ParseError("plan.sequence", "expected an array");
  for (std::size_t i = 0; i < j["sequence"].size(); ++i) {
    plan.sequence.push_back(io::graph_from_json(j["sequence"][i], "plan.sequence[" + std::to_string(i) + "]"));
  }
  if (!j.contains("steps") || !j["steps"].is_array()) throw ParseError("plan.steps", "expected an array");
  for (std::size_t i = 0; i < j["steps"].size(); ++i) {
    const std::string where = "plan.steps[" + std::to_string(i) + "]";
    const io::Json& s = j["steps"][i];
    PlanStep step;
    if (!s.contains("m") || !s["m"].is_number_integer()) throw ParseError(where + ".m", "expected an integer");
    step.m = s["m"].get<int>();
    if (!s.contains("gamma")) throw ParseError(where + ".gamma", "missing");
    step.gamma = io::vertex_set_from_json(s["gamma"], where + ".gamma");
    if (!s.contains("atoms") || !s["atoms"].is_array()) throw ParseError(where + ".atoms", "expected an array");
    for (std::size_t k = 0; k < s["atoms"].size(); ++k) {
      const std::string at = where + ".atoms[" + std::to_string(k) + "]";
      const io::Json& c = s["atoms"][k];
      if (!c.is_object() || !c.contains("atom")) throw ParseError(at + ".atom", "missing");
      if (!c.contains("action") || !c["action"].is_string()) throw ParseError(at + ".action", "expected a string");
      Action action;
      try {
        action = parse_action(c["action"].get<std::string>());
      } catch (const InvalidArgument& e) {
        throw ParseError(at + ".action", e.what());
      }
      step.atoms.push_back({io::atom_from_json(c["atom"], at + ".atom"), action});
    }
    plan.steps.push_back(std::move(step));
  }
  if (!j.contains("final_type1")) throw ParseError("plan.final_type1", "missing");
  plan.final_type1 = io::atom_set_from_json(j["final_type1"], "plan.final_type1");
  return plan;
}

}  // namespace imrf
