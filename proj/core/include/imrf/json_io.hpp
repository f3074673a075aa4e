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

#include <nlohmann/json.hpp>

#include "imrf/atom.hpp"
#include "imrf/distribution.hpp"
#include "imrf/fcmi.hpp"
#include "imrf/graph.hpp"
#include "imrf/measures.hpp"
#include "imrf/subfield.hpp"

namespace imrf::io {

using Json = nlohmann::json;

// Every reader throws ParseError naming the offending member; `where` is the
// path prefix used in that name.

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j, const std::string& where = "graph");

Json to_json(VertexSet s);
VertexSet vertex_set_from_json(const Json& j, const std::string& where);

/// {"n": int, "complemented": [ints]}
Json to_json(const Atom& a);
/// Accepts the object form or the text form "1 2' 3".
Atom atom_from_json(const Json& j, const std::string& where = "atom");

/// {"n": int, "atoms": ["1 2' 3", ...]}
Json to_json(const AtomSet& s);
AtomSet atom_set_from_json(const Json& j, const std::string& where = "atoms");

/// {"n": int, "T": [...], "Q": [[...], ...]}
Json to_json(const Fcmi& k);
Fcmi fcmi_from_json(const Json& j, const std::string& where = "fcmi");
/// A single FCMI object or an array of them.
std::vector<Fcmi> fcmi_list_from_json(const Json& j, const std::string& where = "fcmis");

/// {"n": int, "alphabets": [ints], "probs": [{"x": [ints], "p": real}, ...]}
Json to_json(const Distribution& p);
Distribution distribution_from_json(const Json& j, const std::string& where = "distribution");

/// {"n": int, "base": real, "h": {"1,2": real, ...}}
Json to_json(const EntropyVector& h);
EntropyVector entropy_from_json(const Json& j, const std::string& where = "entropy");

/// {"n": int, "base": real, "mu": {"1 2' 3": real, ...}}
Json to_json(const IMeasureVector& mu);
IMeasureVector imeasure_from_json(const Json& j, const std::string& where = "imeasure");

/// {"g_star": Graph, "equals_induced": bool, "rho": [ints], "construction": str}
Json to_json(const SubfieldResult& r, bool equals_induced);
Json to_json(const SmallestRepResult& r);
Json to_json(const SubtreeResult& r);

/// Reads and parses a JSON file; I/O and syntax failures become ParseError.
Json read_file(const std::string& path);
Json parse(const std::string& text, const std::string& where = "input");

}  // namespace imrf::io
