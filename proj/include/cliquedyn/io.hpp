#pragma once

// JSON serialisation for graphs, lattice specs, group actions and walks.
// Requires nlohmann/json (vendored as json.hpp).

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquedyn/graph.hpp"
#include "cliquedyn/group_action.hpp"
#include "cliquedyn/hexgeo.hpp"

namespace cliquedyn {

using Json = nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

/// {"vertices": N, "edges": [[u, v], ...], "labels": {"id": [..], ...}}
inline Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) {
    Json labels = Json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) labels[std::to_string(v)] = g.label(v);
    j["labels"] = std::move(labels);
  }
  return j;
}

/// Accepts labels as an id-keyed object (every vertex present) or an array.
inline Graph graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw IoError("graph JSON needs \"vertices\" and \"edges\"");
    const auto n = j.at("vertices").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw IoError("each edge must be a pair");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    std::vector<Label> labels;
    if (j.contains("labels") && !j.at("labels").is_null()) {
      const Json& l = j.at("labels");
      labels.resize(n);
      if (l.is_array()) {
        if (l.size() != n) throw IoError("labels array must have one entry per vertex");
        for (std::size_t v = 0; v < n; ++v) labels[v] = l[v].get<Label>();
      } else if (l.is_object()) {
        if (l.size() != n) throw IoError("labels object must have one entry per vertex");
        for (auto it = l.begin(); it != l.end(); ++it) {
          std::size_t v = std::stoul(it.key());
          if (v >= n) throw IoError("label key " + it.key() + " out of range");
          labels[v] = it.value().get<Label>();
        }
      } else {
        throw IoError("labels must be an object or an array");
      }
    }
    return Graph::from_edges(n, edges, std::move(labels));
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed graph JSON: ") + e.what());
  }
}

inline Json torus_spec_to_json(const TorusSpec& s) { return {{"basis", {{s.a.q, s.a.r}, {s.b.q, s.b.r}}}}; }

inline TorusSpec torus_spec_from_json(const Json& j) {
  try {
    const Json& b = j.at("basis");
    if (!b.is_array() || b.size() != 2 || b[0].size() != 2 || b[1].size() != 2)
      throw IoError("basis must be two axial pairs");
    return {{b[0][0].get<std::int64_t>(), b[0][1].get<std::int64_t>()},
            {b[1][0].get<std::int64_t>(), b[1][1].get<std::int64_t>()}};
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed torus JSON: ") + e.what());
  }
}

inline Json window_spec_to_json(const WindowSpec& w) {
  return {{"center", {w.center[0], w.center[1], w.center[2]}}, {"radius", w.radius}};
}

inline WindowSpec window_spec_from_json(const Json& j) {
  try {
    auto c = j.at("center").get<std::vector<std::int64_t>>();
    if (c.size() != 3) throw IoError("center must have three coordinates");
    return {{c[0], c[1], c[2]}, j.at("radius").get<std::uint32_t>()};
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed window JSON: ") + e.what());
  }
}

/// {"vertices": N, "generators": [[p(0), p(1), ...], ...]}
inline Json action_to_json(const GroupAction& a) {
  return {{"vertices", a.vertex_count()}, {"generators", a.generators()}};
}

/// Also accepts a bare list of permutations.
inline GroupAction action_from_json(const Json& j) {
  try {
    std::vector<Permutation> gens;
    if (j.is_array()) gens = j.get<std::vector<Permutation>>();
    else gens = j.at("generators").get<std::vector<Permutation>>();
    std::size_t n = j.is_object() && j.contains("vertices") ? j.at("vertices").get<std::size_t>()
                                                            : (gens.empty() ? 0 : gens.front().size());
    return GroupAction(n, std::move(gens));
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed action JSON: ") + e.what());
  }
}

/// {"walk": [v0, v1, ...]} or a bare array.
inline std::vector<VertexId> walk_from_json(const Json& j) {
  try {
    if (j.is_array()) return j.get<std::vector<VertexId>>();
    return j.at("walk").get<std::vector<VertexId>>();
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed walk JSON: ") + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cliquedyn
