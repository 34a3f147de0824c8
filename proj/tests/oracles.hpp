#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Graph container and the coordinate templates used as patterns.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cliquedyn/graph.hpp"
#include "cliquedyn/hexgeo.hpp"

namespace oracle {

using cliquedyn::Graph;
using cliquedyn::VertexId;
using cliquedyn::VertexSet;

inline bool complete(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool maximal(const Graph& g, const VertexSet& s) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    bool all = true;
    for (VertexId u : s) all = all && g.adjacent(u, v);
    if (all) return false;
  }
  return true;
}

/// Every complete vertex subset, grown in increasing id order, filtered to the
/// inclusion-maximal ones. Sorted lexicographically.
inline std::vector<VertexSet> max_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet cur;
  std::function<void(VertexId)> grow = [&](VertexId from) {
    if (!cur.empty() && maximal(g, cur)) out.push_back(cur);
    for (VertexId v = from; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (VertexId u : cur) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      cur.push_back(v);
      grow(v + 1);
      cur.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<cliquedyn::Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Vertex sets of induced subgraphs isomorphic to the pattern, by plain
/// backtracking over host vertices in pattern BFS order.
inline std::set<VertexSet> induced_copies(const Graph& host, const Graph& pattern) {
  const std::size_t k = pattern.vertex_count();
  std::vector<VertexId> order;
  {
    std::vector<char> seen(k, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (VertexId w : pattern.neighbours(order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  std::set<VertexSet> found;
  std::vector<VertexId> img(k, 0);
  std::vector<char> used(host.vertex_count(), 0);
  std::function<void(std::size_t)> place = [&](std::size_t depth) {
    if (depth == k) {
      VertexSet s(img.begin(), img.end());
      std::sort(s.begin(), s.end());
      found.insert(s);
      return;
    }
    const VertexId p = order[depth];
    for (VertexId x = 0; x < host.vertex_count(); ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (std::size_t d = 0; ok && d < depth; ++d) {
        VertexId q = order[d];
        ok = pattern.adjacent(p, q) == host.adjacent(x, img[q]);
      }
      if (!ok) continue;
      img[p] = x;
      used[x] = 1;
      place(depth + 1);
      used[x] = 0;
    }
  };
  if (k > 0) place(0);
  return found;
}

inline std::set<VertexSet> delta_copies(const Graph& host, std::uint32_t m) {
  return induced_copies(host, cliquedyn::delta_graph(m).graph);
}

inline VertexSet closed_nbhd(const Graph& g, const VertexSet& s) {
  std::set<VertexId> out(s.begin(), s.end());
  for (VertexId v : s)
    for (VertexId w : g.neighbours(v)) out.insert(w);
  return {out.begin(), out.end()};
}

/// Boundary read off the induced subgraph: vertices of degree < 6 there.
inline VertexSet induced_boundary(const Graph& g, const VertexSet& s) {
  if (s.size() == 1) return s;
  VertexSet out;
  for (VertexId v : s) {
    std::size_t d = 0;
    for (VertexId w : s) d += g.adjacent(v, w);
    if (d < 6) out.push_back(v);
  }
  return out;
}

inline bool subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// The four adjacency rules evaluated on plain vertex sets.
inline std::optional<int> adjacency(const Graph& g, std::uint32_t m1, const VertexSet& s1, std::uint32_t m2,
                                    const VertexSet& s2) {
  if (m1 == m2 && s1 == s2) return std::nullopt;
  const bool flip = m1 > m2;
  const VertexSet& a = flip ? s2 : s1;  // smaller
  const VertexSet& b = flip ? s1 : s2;  // larger
  const int gap = static_cast<int>(flip ? m1 - m2 : m2 - m1);
  bool hit = false;
  if (gap == 0) hit = subset(a, closed_nbhd(g, b)) || subset(b, closed_nbhd(g, a));
  else if (gap == 2) hit = subset(a, b);
  else if (gap == 4) hit = subset(a, minus(b, induced_boundary(g, b)));
  else if (gap == 6) hit = a == minus(b, closed_nbhd(g, induced_boundary(g, b)));
  if (!hit) return std::nullopt;
  return flip ? -gap : gap;
}

}  // namespace oracle
