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

#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

#include "imrf/diagram.hpp"
#include "imrf/fcmi.hpp"
#include "imrf/imeasure.hpp"
#include "imrf/json_io.hpp"
#include "imrf/subfield.hpp"
#include "imrf/witnesses.hpp"

namespace imrf::cli {

namespace {

using io::Json;

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const std::string& what) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (v < 0 || item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw ParseError(what, "'" + item + "' is not a nonnegative integer");
    }
  }
  return out;
}

VertexSet vertex_set_arg(const std::string& text, const std::string& what) {
  try {
    return parse_vertex_set(text);
  } catch (const InvalidArgument& e) {
    throw ParseError(what, e.what());
  }
}

struct Inputs {
  std::string dist, entropy, imeasure, graph, atoms, fcmi;
};

// Any of --dist / --entropy / --imeasure, reduced to the full I-Measure.
IMeasureVector measure_from(const Inputs& in, double base) {
  if (!in.imeasure.empty()) return io::imeasure_from_json(io::read_file(in.imeasure));
  if (!in.entropy.empty()) return mu_from_entropy(io::entropy_from_json(io::read_file(in.entropy)));
  if (!in.dist.empty()) {
    const Distribution p = io::distribution_from_json(io::read_file(in.dist));
    if (p.n() > kMaxAtomVertices) throw ParseError("distribution.n", "exceeds the cap of " + std::to_string(kMaxAtomVertices) + " for full I-Measure enumeration");
    return mu_from_entropy(entropy_vector(p, base));
  }
  throw ParseError("", "one of --dist, --entropy or --imeasure is required");
}

Graph graph_from(const std::string& path) { return io::graph_from_json(io::read_file(path)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"I-Measure and Markov random field toolkit", "imrf"};
  app.require_subcommand(1);

  double base = 2.0;
  double tol = kDefaultTolerance;
  Inputs in;
  std::string vp_text, atom_text, caps_text, minus_text, cups_text, format = "json";
  std::string construction_text = "paths", recover_as = "auto";
  std::string p1, p2;
  std::uint64_t seed = 0;
  std::uint32_t alphabet = 2;

  auto add_base = [&](CLI::App* s) {
    s->add_option("--base", base, "Log base (> 1)")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto add_tol = [&](CLI::App* s) {
    s->add_option("--tol", tol, "Vanishing tolerance (> 0)")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto add_measure_inputs = [&](CLI::App* s) {
    auto* d = s->add_option("--dist", in.dist, "Distribution JSON file");
    auto* e = s->add_option("--entropy", in.entropy, "EntropyVector JSON file");
    auto* m = s->add_option("--imeasure", in.imeasure, "IMeasureVector JSON file");
    d->excludes(e)->excludes(m);
    e->excludes(m);
  };

  auto* entropy_cmd = app.add_subcommand("entropy", "Distribution to entropy vector");
  entropy_cmd->add_option("--dist", in.dist, "Distribution JSON file")->required();
  add_base(entropy_cmd);

  auto* mu_cmd = app.add_subcommand("mu", "I-Measure of a distribution or entropy vector");
  mu_cmd->add_option("--dist", in.dist, "Distribution JSON file");
  mu_cmd->add_option("--entropy", in.entropy, "EntropyVector JSON file")->excludes("--dist");
  mu_cmd->add_option("--atom", atom_text, "Single atom, e.g. \"1 2' 3\"");
  mu_cmd->add_option("--caps", caps_text, "Evaluate the intersection over these indices")->excludes("--atom");
  mu_cmd->add_option("--minus", minus_text, "Indices subtracted from the expression")->needs("--caps");
  mu_cmd->add_option("--cups", cups_text, "Leading union over these indices")->needs("--caps");
  add_base(mu_cmd);

  auto* check_cmd = app.add_subcommand("check-mrf", "Does mu* vanish on every Type II atom of the graph?");
  add_measure_inputs(check_cmd);
  check_cmd->add_option("--graph", in.graph, "Graph JSON file")->required();
  add_base(check_cmd);
  add_tol(check_cmd);

  auto* image_cmd = app.add_subcommand("image", "Atom image of a graph or FCMI");
  auto* image_graph = image_cmd->add_option("--graph", in.graph, "Graph JSON file");
  image_cmd->add_option("--fcmi", in.fcmi, "FCMI JSON file (object or array)")->excludes(image_graph);

  auto* recover_cmd = app.add_subcommand("recover", "FCMI or graph from an atom image");
  recover_cmd->add_option("--atoms", in.atoms, "AtomSet JSON file")->required();
  recover_cmd->add_option("--as", recover_as, "fcmi, graph or auto")
      ->check(CLI::IsMember({"fcmi", "graph", "auto"}))
      ->capture_default_str();

  auto* subfield_cmd = app.add_subcommand("subfield", "Subfield graph G*(V')");
  subfield_cmd->add_option("--graph", in.graph, "Graph JSON file")->required();
  subfield_cmd->add_option("--vp", vp_text, "V' as comma-separated labels")->required();
  subfield_cmd->add_option("--construction", construction_text, "paths, closed-form or elimination")
      ->check(CLI::IsMember({"paths", "closed-form", "elimination"}))
      ->capture_default_str();

  auto* smallest_cmd = app.add_subcommand("smallest", "Smallest graph representation");
  auto* sm_atoms = smallest_cmd->add_option("--atoms", in.atoms, "Vanishing atom set JSON file");
  smallest_cmd->add_option("--dist", in.dist, "Distribution JSON file")->excludes(sm_atoms);
  add_base(smallest_cmd);
  add_tol(smallest_cmd);

  auto* subtree_cmd = app.add_subcommand("subtree", "Subtree condition on a tree");
  subtree_cmd->add_option("--graph", in.graph, "Tree JSON file")->required();
  subtree_cmd->add_option("--vp", vp_text, "V' as comma-separated labels")->required();

  auto* diagram_cmd = app.add_subcommand("diagram", "Information diagram construction");
  diagram_cmd->require_subcommand(1);
  auto* plan_cmd = diagram_cmd->add_subcommand("plan", "Recursive construction plan");
  plan_cmd->add_option("--graph", in.graph, "Graph JSON file")->required();
  plan_cmd->add_option("--format", format, "json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();

  auto* witness_cmd = app.add_subcommand("witness", "Witness distributions");
  witness_cmd->require_subcommand(1);
  int hub = 0, n = 0;
  std::uint32_t q = 0;
  std::string leaves_text, alphas_text, support_text, z_text;
  auto* star_cmd = witness_cmd->add_subcommand("star", "XOR witness at a vertex of degree >= 3");
  star_cmd->add_option("--graph", in.graph, "Graph JSON file")->required();
  star_cmd->add_option("--hub", hub, "Hub vertex")->required();
  star_cmd->add_option("--leaves", leaves_text, "Three neighbours of the hub, comma-separated");
  auto* ring_cmd = witness_cmd->add_subcommand("ring", "Finite-field ring witness");
  ring_cmd->add_option("--n", n, "Number of variables (>= 3)")->required();
  ring_cmd->add_option("--q", q, "Field order")->required();
  ring_cmd->add_option("--alphas", alphas_text, "n-2 distinct nonzero field elements; default 1..n-2");
  auto* atom_cmd = witness_cmd->add_subcommand("atom", "Concentrate mu* on one atom");
  atom_cmd->add_option("--n", n, "Number of variables")->required();
  atom_cmd->add_option("--support", support_text, "Non-complemented indices W_A")->required();
  atom_cmd->add_option("--z", z_text, "pmf of Z, comma-separated; default a fair bit");

  auto* implies_cmd = app.add_subcommand("implies", "Does collection P1 imply collection P2?");
  implies_cmd->add_option("--p1", p1, "FCMI JSON file (object or array)")->required();
  implies_cmd->add_option("--p2", p2, "FCMI JSON file (object or array)")->required();

  auto* generate_cmd = app.add_subcommand("generate", "Random strictly positive MRF for a graph");
  generate_cmd->add_option("--graph", in.graph, "Graph JSON file")->required();
  generate_cmd->add_option("--seed", seed, "RNG seed")->required();
  generate_cmd->add_option("--alphabet", alphabet, "Alphabet size per variable")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (entropy_cmd->parsed()) {
      const Distribution p = io::distribution_from_json(io::read_file(in.dist));
      if (p.n() > kMaxAtomVertices) throw ParseError("distribution.n", "exceeds the cap of " + std::to_string(kMaxAtomVertices));
      emit(out, io::to_json(entropy_vector(p, base)));
      return kExitOk;
    }

    if (mu_cmd->parsed()) {
      if (in.dist.empty() && in.entropy.empty()) throw ParseError("", "one of --dist or --entropy is required");
      if (!atom_text.empty()) {
        Atom a;
        try {
          a = parse_atom(atom_text);
        } catch (const InvalidArgument& e) {
          throw ParseError("--atom", e.what());
        }
        double value = 0.0;
        if (!in.dist.empty()) {
          value = mu_of_atom(io::distribution_from_json(io::read_file(in.dist)), a, base);
        } else {
          value = mu_of_atom(io::entropy_from_json(io::read_file(in.entropy)), a);
        }
        emit(out, Json{{"atom", a.to_string()}, {"value", value}});
        return kExitOk;
      }
      const IMeasureVector mu = measure_from(in, base);
      if (!caps_text.empty()) {
        const VertexSet caps = vertex_set_arg(caps_text, "--caps");
        const VertexSet minus = vertex_set_arg(minus_text, "--minus");
        const VertexSet cups = vertex_set_arg(cups_text, "--cups");
        const double value = measure_of_expression(mu, caps, minus, cups);
        Json j{{"caps", io::to_json(caps)}, {"minus", io::to_json(minus)}, {"value", value}};
        if (!cups.empty()) j["cups"] = io::to_json(cups);
        emit(out, j);
        return kExitOk;
      }
      emit(out, io::to_json(mu));
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      const IMeasureVector mu = measure_from(in, base);
      const MrfCheck r = check_mrf(mu, graph_from(in.graph), tol);
      Json violators = Json::array();
      for (const Atom& a : r.violators) violators.push_back({{"atom", a.to_string()}, {"value", mu[a]}});
      emit(out, Json{{"ok", r.ok}, {"violators", violators}});
      return r.ok ? kExitOk : kExitFalse;
    }

    if (image_cmd->parsed()) {
      if (!in.graph.empty()) {
        emit(out, io::to_json(image_of_graph(graph_from(in.graph))));
      } else if (!in.fcmi.empty()) {
        const auto ks = io::fcmi_list_from_json(io::read_file(in.fcmi));
        if (ks.empty()) throw ParseError("fcmis", "empty collection");
        if (ks.size() == 1 && !ks.front().is_full()) {
          Json sets = Json::array();
          for (const AtomSet& s : image_of_partial(ks.front())) sets.push_back(io::to_json(s));
          emit(out, Json{{"partial", true}, {"sets", sets}});
        } else {
          for (const Fcmi& k : ks)
            if (!k.is_full()) throw ParseError("fcmis", "collections must contain full FCMIs only");
          emit(out, io::to_json(image_of_collection(ks.front().n(), ks)));
        }
      } else {
        throw ParseError("", "one of --graph or --fcmi is required");
      }
      return kExitOk;
    }

    if (recover_cmd->parsed()) {
      const AtomSet image = io::atom_set_from_json(io::read_file(in.atoms));
      if (recover_as == "graph") {
        emit(out, io::to_json(recover_graph(image)));
        return kExitOk;
      }
      try {
        emit(out, io::to_json(recover_fcmi(image)));
        return kExitOk;
      } catch (const NotAnFcmiImage& e) {
        if (recover_as == "fcmi") {
          err << "imrf: not the image of an FCMI: " << e.what() << "\n";
          return kExitFalse;
        }
      }
      emit(out, io::to_json(recover_graph(image)));
      return kExitOk;
    }

    if (subfield_cmd->parsed()) {
      const Graph g = graph_from(in.graph);
      const VertexSet vp = vertex_set_arg(vp_text, "--vp");
      const Construction c = construction_text == "closed-form" ? Construction::ClosedForm
                             : construction_text == "elimination" ? Construction::Elimination
                                                                  : Construction::Paths;
      emit(out, io::to_json(subfield(g, vp, c), equals_induced(g, vp)));
      return kExitOk;
    }

    if (smallest_cmd->parsed()) {
      AtomSet a2;
      if (!in.atoms.empty()) {
        a2 = io::atom_set_from_json(io::read_file(in.atoms));
      } else if (!in.dist.empty()) {
        a2 = vanishing_atoms(measure_from(in, base), tol);
      } else {
        throw ParseError("", "one of --atoms or --dist is required");
      }
      const SmallestRepResult r = smallest_graph(a2);
      emit(out, io::to_json(r));
      return r.exists ? kExitOk : kExitFalse;
    }

    if (subtree_cmd->parsed()) {
      const SubtreeResult r = subtree_condition(graph_from(in.graph), vertex_set_arg(vp_text, "--vp"));
      emit(out, io::to_json(r));
      return r.holds ? kExitOk : kExitFalse;
    }

    if (plan_cmd->parsed()) {
      out << export_plan(build_plan(graph_from(in.graph)), parse_plan_format(format));
      return kExitOk;
    }

    if (star_cmd->parsed()) {
      const Graph g = graph_from(in.graph);
      std::vector<int> leaves;
      if (leaves_text.empty()) {
        if (!g.vertices().contains(hub)) throw ParseError("--hub", "not a vertex of the graph");
        leaves = g.neighbors(hub).members();
        if (leaves.size() < 3) throw ParseError("--hub", "degree below 3");
        leaves.resize(3);
      } else {
        leaves = vertex_set_arg(leaves_text, "--leaves").members();
        if (leaves.size() != 3) throw ParseError("--leaves", "expected exactly three vertices");
      }
      emit(out, io::to_json(star_xor_witness(g, hub, leaves[0], leaves[1], leaves[2])));
      return kExitOk;
    }

    if (ring_cmd->parsed()) {
      std::vector<std::uint32_t> alphas;
      if (alphas_text.empty()) {
        for (int i = 1; i <= n - 2; ++i) alphas.push_back(static_cast<std::uint32_t>(i));
      } else {
        alphas = parse_uint_list(alphas_text, "--alphas");
      }
      emit(out, io::to_json(ring_field_witness(n, FieldSpec(q), alphas)));
      return kExitOk;
    }

    if (atom_cmd->parsed()) {
      std::vector<double> z{0.5, 0.5};
      if (!z_text.empty()) {
        z.clear();
        std::stringstream s(z_text);
        std::string item;
        while (std::getline(s, item, ',')) {
          try {
            z.push_back(std::stod(item));
          } catch (const std::logic_error&) {
            throw ParseError("--z", "'" + item + "' is not a number");
          }
        }
      }
      emit(out, io::to_json(atom_concentrator(n, vertex_set_arg(support_text, "--support"), z)));
      return kExitOk;
    }

    if (implies_cmd->parsed()) {
      const auto pi1 = io::fcmi_list_from_json(io::read_file(p1), "p1");
      const auto pi2 = io::fcmi_list_from_json(io::read_file(p2), "p2");
      const bool holds = implies(pi1, pi2);
      emit(out, Json{{"implies", holds}});
      return holds ? kExitOk : kExitFalse;
    }

    if (generate_cmd->parsed()) {
      emit(out, io::to_json(generate_mrf(graph_from(in.graph), seed, alphabet)));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "imrf: input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidArgument& e) {
    err << "imrf: invalid input: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "imrf: error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "imrf: no subcommand\n";
  return kExitInputError;
}

}  // namespace imrf::cli
