// Copyright 2026 The ghostpulse Authors.
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

// Graph export to DOT and to/from JSON of the form
// {"alphabet": 2, "vertices": [names], "edges": [{"from", "to", "label"}]}.

#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ghostpulse/error.hpp"
#include "ghostpulse/graph.hpp"

namespace ghostpulse {

inline std::string to_dot(const LabeledGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << g.name(v) << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    const char* lab = g.alphabet_size() == 3 ? (e.label > 0 ? "+" : e.label < 0 ? "-" : "0") : (e.label ? "1" : "0");
    os << "  " << e.from << " -> " << e.to << " [label=\"" << lab << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline nlohmann::json to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["alphabet"] = g.alphabet_size();
  j["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.name(v));
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", static_cast<int>(e.label)}});
  }
  return j;
}

inline LabeledGraph graph_from_json(const nlohmann::json& j) {
  try {
    LabeledGraph g(j.value("alphabet", 2));
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
      g.add_edge(e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                 static_cast<Symbol>(e.at("label").get<int>()));
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed graph JSON: ") + ex.what());
  } catch (const DomainError& ex) {
    throw ParseError(std::string("invalid graph JSON: ") + ex.what());
  }
}

inline LabeledGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed graph JSON: ") + ex.what());
  }
  return graph_from_json(j);
}

}  // namespace ghostpulse
