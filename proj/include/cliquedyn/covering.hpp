#pragma once

// Triangular covering maps: local isomorphisms on closed neighbourhoods, with
// unique walk and triangle lifting.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/graph.hpp"
#include "cliquedyn/group_action.hpp"

namespace cliquedyn {

using Walk = std::vector<VertexId>;

class CoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex map between graphs. When `domain` is set, the local-isomorphism
/// condition is only claimed (and checked) at those source vertices; windows
/// and developed balls use it to exclude rim vertices.
struct CoveringMap {
  Graph source;
  Graph target;
  std::vector<VertexId> vertex_map;
  std::optional<VertexSet> domain;

  VertexId operator()(VertexId v) const { return vertex_map.at(v); }

  bool in_domain(VertexId v) const {
    return !domain || std::binary_search(domain->begin(), domain->end(), v);
  }
};

struct CoverReport {
  bool ok = false;
  bool restricted = false;      // checked on `domain` only
  std::size_t checked = 0;      // number of source vertices examined
  std::optional<VertexId> witness;
  std::string reason;
};

/// Checks homomorphy on every edge touching the domain, then at each (domain) vertex that the
/// closed neighbourhood maps bijectively onto the image's closed neighbourhood
/// with adjacency preserved both ways.
inline CoverReport is_covering_map(const CoveringMap& p) {
  CoverReport r;
  r.restricted = p.domain.has_value();
  const Graph& s = p.source;
  const Graph& t = p.target;
  if (p.vertex_map.size() != s.vertex_count()) {
    r.reason = "vertex map is not total on the source";
    return r;
  }
  for (VertexId v = 0; v < s.vertex_count(); ++v)
    if (p.vertex_map[v] >= t.vertex_count()) {
      r.witness = v;
      r.reason = "image out of range";
      return r;
    }
  for (const auto& [u, v] : s.edges())
    if ((p.in_domain(u) || p.in_domain(v)) && !t.adjacent(p.vertex_map[u], p.vertex_map[v])) {
      r.witness = u;
      r.reason = "edge not mapped to an edge";
      return r;
    }
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    if (!p.in_domain(v)) continue;
    ++r.checked;
    VertexId pv = p.vertex_map[v];
    auto src = neighbourhood(s, v, true);
    auto dst = neighbourhood(t, pv, true);
    if (src.size() != dst.size()) {
      r.witness = v;
      r.reason = "closed neighbourhood sizes differ";
      return r;
    }
    std::vector<VertexId> image;
    image.reserve(src.size());
    for (VertexId w : src) image.push_back(p.vertex_map[w]);
    std::sort(image.begin(), image.end());
    if (image != dst) {
      r.witness = v;
      r.reason = "closed neighbourhood not mapped bijectively";
      return r;
    }
    for (std::size_t i = 0; i < src.size(); ++i)
      for (std::size_t j = i + 1; j < src.size(); ++j)
        if (s.adjacent(src[i], src[j]) != t.adjacent(p.vertex_map[src[i]], p.vertex_map[src[j]])) {
          r.witness = v;
          r.reason = "adjacency inside the closed neighbourhood not preserved";
          return r;
        }
  }
  r.ok = true;
  return r;
}

/// The unique neighbour of `from` lying over `target_vertex`.
inline VertexId lift_step(const CoveringMap& p, VertexId from, VertexId target_vertex) {
  std::optional<VertexId> found;
  for (VertexId w : p.source.neighbours(from))
    if (p.vertex_map[w] == target_vertex) {
      if (found) throw CoverError("edge lift is not unique at source vertex " + std::to_string(from));
      found = w;
    }
  if (!found)
    throw CoverError("no edge lift at source vertex " + std::to_string(from) +
                     " (outside the validated region?)");
  return *found;
}

inline Walk lift_walk(const CoveringMap& p, const Walk& w, VertexId start) {
  if (w.empty()) throw CoverError("cannot lift an empty walk");
  require_vertex(p.source, start);
  if (p.vertex_map[start] != w.front())
    throw CoverError("start vertex does not lie over the walk's first vertex");
  Walk out{start};
  out.reserve(w.size());
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!p.target.adjacent(w[i - 1], w[i]))
      throw CoverError("input is not a walk at step " + std::to_string(i));
    out.push_back(lift_step(p, out.back(), w[i]));
  }
  return out;
}

/// The source triangle through `u_tilde` mapping bijectively onto `tri`.
inline Triangle lift_triangle(const CoveringMap& p, const Triangle& tri, VertexId u_tilde) {
  const Graph& t = p.target;
  if (!(t.adjacent(tri[0], tri[1]) && t.adjacent(tri[1], tri[2]) && t.adjacent(tri[0], tri[2])))
    throw CoverError("input is not a triangle of the target");
  require_vertex(p.source, u_tilde);
  VertexId base = p.vertex_map[u_tilde];
  auto pos = std::find(tri.begin(), tri.end(), base);
  if (pos == tri.end()) throw CoverError("source vertex does not lie over the triangle");
  std::vector<VertexId> others;
  for (VertexId x : tri)
    if (x != base) others.push_back(x);
  VertexId a = lift_step(p, u_tilde, others[0]);
  VertexId b = lift_step(p, u_tilde, others[1]);
  if (!p.source.adjacent(a, b)) throw CoverError("triangle does not lift (not a covering map here)");
  Triangle out{u_tilde, a, b};
  std::sort(out.begin(), out.end());
  return out;
}

struct GaloisReport {
  bool ok = false;
  bool deck_property = false;  // p o gamma == p for every generator
  std::size_t fibre_count = 0;
  std::size_t orbit_count = 0;
  std::optional<VertexId> witness;  // target vertex with a split or mixed fibre
  std::string reason;
};

/// Galois with the action iff every fibre of p is exactly one orbit.
inline GaloisReport is_galois(const CoveringMap& p, const GroupAction& action) {
  GaloisReport r;
  if (action.vertex_count() != p.source.vertex_count()) {
    r.reason = "action does not act on the cover's vertices";
    return r;
  }
  r.deck_property = true;
  for (const auto& g : action.generators())
    for (VertexId v = 0; v < p.source.vertex_count(); ++v)
      if (p.vertex_map[g[v]] != p.vertex_map[v]) {
        r.deck_property = false;
        break;
      }
  auto orbit = action.orbit_ids();
  std::vector<VertexId> orbit_of_fibre(p.target.vertex_count(), kUnreachable);
  std::vector<VertexId> fibre_of_orbit(p.source.vertex_count(), kUnreachable);
  for (VertexId v = 0; v < p.source.vertex_count(); ++v) {
    VertexId x = p.vertex_map[v];
    VertexId o = orbit[v];
    r.orbit_count = std::max<std::size_t>(r.orbit_count, o + 1);
    if (orbit_of_fibre[x] == kUnreachable) orbit_of_fibre[x] = o;
    if (fibre_of_orbit[o] == kUnreachable) fibre_of_orbit[o] = x;
    if (orbit_of_fibre[x] != o || fibre_of_orbit[o] != x) {
      if (!r.witness) r.witness = x;
    }
  }
  for (VertexId x = 0; x < p.target.vertex_count(); ++x)
    if (orbit_of_fibre[x] != kUnreachable) ++r.fibre_count;
  if (!r.deck_property) r.reason = "some generator is not a deck transformation";
  else if (r.witness) r.reason = "a fibre is not a single orbit";
  r.ok = r.deck_property && !r.witness;
  return r;
}

inline CoveringMap identity_cover(const Graph& g) {
  return CoveringMap{g, g, identity_permutation(g.vertex_count()), std::nullopt};
}

inline CoveringMap compose(const CoveringMap& outer, const CoveringMap& inner) {
  if (inner.target.vertex_count() != outer.source.vertex_count())
    throw CoverError("covers do not compose");
  CoveringMap out{inner.source, outer.target, {}, std::nullopt};
  out.vertex_map.reserve(inner.vertex_map.size());
  for (VertexId x : inner.vertex_map) out.vertex_map.push_back(outer.vertex_map[x]);
  return out;
}

}  // namespace cliquedyn
