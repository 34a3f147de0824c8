#pragma once

// Lattice-translation quotient of a window's geometric clique graph, and the
// comparison k^n T against that quotient for a torus T.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/graph.hpp"
#include "cliquedyn/hexgeo.hpp"
#include "cliquedyn/isomorphism.hpp"
#include "cliquedyn/trishapes.hpp"

namespace cliquedyn {

/// A shape up to lattice translation: its side and its coordinates moved so
/// that the least coordinate sits on its torus representative.
struct OrbitKey {
  std::uint32_t side = 0;
  std::vector<HexCoord> coords;
  friend auto operator<=>(const OrbitKey&, const OrbitKey&) = default;
};

inline OrbitKey orbit_key(const Graph& host, const TriShape& s, const Torus& torus) {
  OrbitKey k;
  k.side = s.side;
  for (VertexId v : s.vertices) k.coords.push_back(HexCoord::from_label(host.label(v)));
  std::sort(k.coords.begin(), k.coords.end());
  HexCoord rep = torus.representative(torus.vertex_of(k.coords.front())).hex();
  HexCoord shift = rep - k.coords.front();
  for (auto& c : k.coords) c = c + shift;
  return k;
}

struct WindowQuotient {
  Graph graph;
  std::vector<VertexId> representative;         // per orbit: a safe window shape
  std::vector<std::optional<VertexId>> orbit_of;  // per window shape
  std::size_t dropped_loops = 0;
};

/// Orbits are read off safe shapes; every neighbour of a safe shape must
/// belong to one of them, otherwise the window is too small.
inline WindowQuotient window_shape_quotient(const GeoCliqueGraph& gcg, const Torus& torus,
                                            std::uint32_t margin = kClassifyMargin) {
  WindowQuotient q;
  std::map<OrbitKey, VertexId> ids;
  std::vector<OrbitKey> keys;
  keys.reserve(gcg.shapes.size());
  for (const auto& s : gcg.shapes) keys.push_back(orbit_key(gcg.host, s, torus));
  q.orbit_of.assign(gcg.shapes.size(), std::nullopt);
  for (VertexId s = 0; s < gcg.shapes.size(); ++s)
    if (gcg.classifiable(s, margin)) ids.emplace(keys[s], 0);
  VertexId next = 0;
  for (auto& [k, id] : ids) id = next++;
  q.representative.assign(ids.size(), kUnreachable);
  for (VertexId s = 0; s < gcg.shapes.size(); ++s) {
    auto it = ids.find(keys[s]);
    if (it == ids.end()) continue;
    q.orbit_of[s] = it->second;
    if (gcg.classifiable(s, margin) && q.representative[it->second] == kUnreachable) q.representative[it->second] = s;
  }
  std::vector<Edge> edges;
  for (VertexId s = 0; s < gcg.shapes.size(); ++s) {
    if (!gcg.classifiable(s, margin)) continue;
    for (VertexId t : gcg.graph.neighbours(s)) {
      if (!q.orbit_of[t]) throw ShapeError("window too small: a neighbour of a safe shape has no safe translate");
      VertexId a = *q.orbit_of[s], b = *q.orbit_of[t];
      if (a == b) ++q.dropped_loops;
      else edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  q.graph = Graph::from_edges(ids.size(), edges);
  return q;
}

/// Largest BFS eccentricity of the torus graph.
inline std::uint32_t torus_diameter(const Torus& t) {
  VertexId src = 0;
  auto d = bfs_distances(t.graph, std::span<const VertexId>(&src, 1));
  return *std::max_element(d.begin(), d.end());  // vertex-transitive: one source suffices
}

/// Smallest window radius that gives every orbit a safe representative.
inline std::uint32_t structure_window_radius(const Torus& t, std::uint32_t n) { return torus_diameter(t) + n + 10; }

struct StructureReport {
  std::uint32_t level = 0;
  std::uint32_t window_radius = 0;
  std::size_t iterate_vertices = 0, iterate_edges = 0;
  std::size_t quotient_vertices = 0, quotient_edges = 0;
  bool budget_hit = false;
  std::optional<IsoWitness> witness;  // k^n T -> window quotient
  bool pass() const { return witness.has_value(); }
};

/// Builds k^n T by iteration and the shape quotient from a covering window,
/// then searches for an isomorphism between them.
inline StructureReport verify_structure(const Torus& torus, std::uint32_t n,
                                        std::size_t vertex_budget = kDefaultVertexBudget) {
  if (n == 0) throw ShapeError("verify_structure needs level >= 1");
  StructureReport r;
  r.level = n;
  auto iter = iterate_clique_graph(torus.graph, n, vertex_budget);
  r.budget_hit = iter.budget_hit;
  if (iter.budget_hit) return r;
  const Graph& kn = iter.levels[n - 1].graph;
  r.iterate_vertices = kn.vertex_count();
  r.iterate_edges = kn.edge_count();
  r.window_radius = structure_window_radius(torus, n);
  Graph window = hex_window({{0, 0, 0}, r.window_radius});
  auto gcg = geo_clique_graph(window, n, {false});
  auto q = window_shape_quotient(gcg, torus);
  r.quotient_vertices = q.graph.vertex_count();
  r.quotient_edges = q.graph.edge_count();
  r.witness = are_isomorphic(kn, q.graph);
  return r;
}

}  // namespace cliquedyn
