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

#include <string>
#include <vector>

#include "imrf/atom.hpp"
#include "imrf/graph.hpp"

namespace imrf {

/// What the curve of a new variable X_m does to a Type I atom A of the
/// previous diagram.
enum class Action {
  Split,    // A cap X_m and A cap X_m^c both kept
  Include,  // A cap X_m kept, A cap X_m^c suppressed
  Exclude,  // A cap X_m suppressed, A cap X_m^c kept
};

std::string to_string(Action a);
Action parse_action(const std::string& text);

/// result[m-1] = G*(N_m), N_m = {1..m}; result[n-1] = g. g must be on 1..n.
std::vector<Graph> elimination_sequence(const Graph& g);

/// Action for a Type I atom `a` of G*(N_{m-1}) (so a.n() == m-1) when X_m
/// is added. Throws for Type II atoms.
Action classify_atom(const std::vector<Graph>& seq, int m, const Atom& a);

struct Classification {
  Atom atom;
  Action action = Action::Split;
  bool operator==(const Classification&) const = default;
};

struct PlanStep {
  int m = 0;
  /// Neighbours of m in G*(N_m).
  VertexSet gamma;
  /// One entry per Type I atom of G*(N_{m-1}), by atom index.
  std::vector<Classification> atoms;
  bool operator==(const PlanStep&) const = default;
};

struct DiagramPlan {
  int n = 0;
  std::vector<Graph> sequence;
  /// Steps for m = 2..n.
  std::vector<PlanStep> steps;
  /// Atoms left unsuppressed after the last step.
  AtomSet final_type1;
  bool operator==(const DiagramPlan&) const = default;
};

DiagramPlan build_plan(const Graph& g);

/// Unsuppressed atoms of D_m (atoms over N_m) implied by the plan.
AtomSet unsuppressed_after(const DiagramPlan& plan, int m);

enum class PlanFormat { Json, Dot, Text };

PlanFormat parse_plan_format(const std::string& text);
std::string export_plan(const DiagramPlan& plan, PlanFormat format);
/// Inverse of the JSON export.
DiagramPlan parse_plan_json(const std::string& text);

}  // namespace imrf
