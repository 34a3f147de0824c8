#pragma once

// Finite simple graphs in compressed sparse row form, plus the traversal and
// local-structure predicates the rest of the library is built on.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquedyn {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;
using VertexSet = std::vector<VertexId>;  // always sorted ascending
using Triangle = std::array<VertexId, 3>;
/// Opaque per-vertex annotation; hex coordinates and clique provenance both fit.
using Label = std::vector<std::int64_t>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph on `count` vertices. Duplicate edges collapse; out-of-range
  /// ids and self-loops are rejected with the offending pair in the message.
  static Graph from_edges(std::size_t count, std::span<const Edge> edges,
                          std::vector<Label> labels = {}) {
    std::vector<Edge> arcs;
    arcs.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
      if (u >= count || v >= count) {
        std::ostringstream msg;
        msg << "edge (" << u << "," << v << ") references a vertex >= " << count;
        throw GraphError(msg.str());
      }
      if (u == v) {
        std::ostringstream msg;
        msg << "self-loop (" << u << "," << v << ")";
        throw GraphError(msg.str());
      }
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    if (!labels.empty() && labels.size() != count)
      throw GraphError("label count does not match vertex count");

    Graph g;
    g.offsets_.assign(count + 1, 0);
    for (const auto& a : arcs) ++g.offsets_[a.first + 1];
    for (std::size_t i = 0; i < count; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adjacency_.reserve(arcs.size());
    for (const auto& a : arcs) g.adjacency_.push_back(a.second);
    g.labels_ = std::move(labels);
    return g;
  }

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbours(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(VertexId u, VertexId v) const {
    auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }
  bool valid(VertexId v) const { return v < vertex_count(); }

  bool has_labels() const { return !labels_.empty(); }
  const Label& label(VertexId v) const { return labels_.at(v); }
  const std::vector<Label>& labels() const { return labels_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u)
      for (VertexId v : neighbours(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (VertexId v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
    return best;
  }
  std::size_t min_degree() const {
    if (vertex_count() == 0) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (VertexId v = 0; v < vertex_count(); ++v) best = std::min(best, degree(v));
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<Label> labels_;
};

inline Graph build_graph(std::size_t count, std::span<const Edge> edges) {
  return Graph::from_edges(count, edges);
}

inline void require_vertex(const Graph& g, VertexId v) {
  if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

inline VertexSet neighbourhood(const Graph& g, VertexId v, bool closed) {
  require_vertex(g, v);
  auto nb = g.neighbours(v);
  VertexSet out(nb.begin(), nb.end());
  if (closed) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

/// Closed neighbourhood of a vertex set: the set plus everything adjacent to it.
inline VertexSet closed_neighbourhood(const Graph& g, std::span<const VertexId> set) {
  VertexSet out(set.begin(), set.end());
  for (VertexId v : set)
    for (VertexId w : g.neighbours(v)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Multi-source BFS. Unreached vertices get kUnreachable.
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, std::span<const VertexId> sources) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::queue<VertexId> queue;
  for (VertexId s : sources) {
    require_vertex(g, s);
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push(s);
    }
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (VertexId w : g.neighbours(u))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
  }
  return dist;
}

/// Distance from `source` to the nearest vertex of `targets`; nullopt means
/// infinity (no target reachable, or no targets at all).
inline std::optional<std::uint32_t> distance(const Graph& g, VertexId source,
                                             std::span<const VertexId> targets) {
  require_vertex(g, source);
  if (targets.empty()) return std::nullopt;
  std::vector<char> is_target(g.vertex_count(), 0);
  for (VertexId t : targets) {
    require_vertex(g, t);
    is_target[t] = 1;
  }
  if (is_target[source]) return 0;
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (VertexId w : g.neighbours(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      if (is_target[w]) return dist[w];
      queue.push(w);
    }
  }
  return std::nullopt;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  VertexId start = 0;
  auto dist = bfs_distances(g, std::span<const VertexId>(&start, 1));
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_host;  // subgraph id -> host id
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  VertexSet keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<VertexId> local(g.vertex_count(), kUnreachable);
  for (VertexId i = 0; i < keep.size(); ++i) {
    require_vertex(g, keep[i]);
    local[keep[i]] = i;
  }
  std::vector<Edge> edges;
  std::vector<Label> labels;
  for (VertexId i = 0; i < keep.size(); ++i) {
    for (VertexId w : g.neighbours(keep[i]))
      if (local[w] != kUnreachable && local[w] > i) edges.emplace_back(i, local[w]);
    if (g.has_labels()) labels.push_back(g.label(keep[i]));
  }
  return {Graph::from_edges(keep.size(), edges, std::move(labels)), std::move(keep)};
}

/// The link of v as a cyclic vertex order, if N(v) induces exactly one cycle
/// of length >= 3. The cycle starts at the smallest neighbour and continues
/// towards the smaller of its two link neighbours.
inline std::optional<std::vector<VertexId>> link_cycle(const Graph& g, VertexId v) {
  auto nb = g.neighbours(v);
  if (nb.size() < 3) return std::nullopt;
  // Each link vertex needs exactly two neighbours inside the link.
  std::vector<std::array<VertexId, 2>> inner(nb.size());
  for (std::size_t i = 0; i < nb.size(); ++i) {
    std::size_t found = 0;
    for (VertexId w : g.neighbours(nb[i])) {
      if (w == v || !std::binary_search(nb.begin(), nb.end(), w)) continue;
      if (found == 2) return std::nullopt;
      inner[i][found++] = w;
    }
    if (found != 2) return std::nullopt;
  }
  auto index_of = [&](VertexId w) {
    return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };
  std::vector<VertexId> cycle{nb[0]};
  cycle.reserve(nb.size());
  VertexId prev = nb[0];
  VertexId cur = std::min(inner[0][0], inner[0][1]);
  while (cur != nb[0]) {
    if (cycle.size() == nb.size()) return std::nullopt;
    cycle.push_back(cur);
    const auto& pair = inner[index_of(cur)];
    VertexId next = pair[0] == prev ? pair[1] : pair[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != nb.size()) return std::nullopt;  // link splits into several cycles
  return cycle;
}

struct LocalCyclicityReport {
  bool ok = false;
  std::size_t min_degree = 0;
  std::optional<VertexId> witness;  // first vertex whose link is not a cycle
};

inline LocalCyclicityReport is_locally_cyclic(const Graph& g) {
  LocalCyclicityReport report;
  report.min_degree = g.min_degree();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!link_cycle(g, v)) {
      report.witness = v;
      return report;
    }
  report.ok = g.vertex_count() > 0;
  return report;
}

/// All triangles as sorted id triples, in lexicographic order.
inline std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbours(u);
    for (auto it = std::upper_bound(nu.begin(), nu.end(), u); it != nu.end(); ++it) {
      VertexId v = *it;
      auto nv = g.neighbours(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else {
          out.push_back({u, v, *a});
          ++a;
          ++b;
        }
      }
    }
  }
  return out;
}

inline VertexSet common_neighbours(const Graph& g, VertexId u, VertexId v) {
  auto a = g.neighbours(u);
  auto b = g.neighbours(v);
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Closed-surface condition: every edge lies in exactly two triangles.
inline bool every_edge_in_two_triangles(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    if (common_neighbours(g, u, v).size() != 2) return false;
  return true;
}

inline std::int64_t euler_characteristic(const Graph& g) {
  if (!is_locally_cyclic(g).ok)
    throw GraphError("euler_characteristic requires a locally cyclic graph");
  return static_cast<std::int64_t>(g.vertex_count()) - static_cast<std::int64_t>(g.edge_count()) +
         static_cast<std::int64_t>(triangles(g).size());
}

/// Vertices whose link is not a cycle; on a window these form its rim.
inline VertexSet rim_vertices(const Graph& g) {
  VertexSet rim;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!link_cycle(g, v)) rim.push_back(v);
  return rim;
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) edges.emplace_back(u, static_cast<VertexId>((u + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph octahedron() {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = u + 1; v < 6; ++v)
      if (v != u + 3) edges.emplace_back(u, v);
  return Graph::from_edges(6, edges);
}

inline Graph icosahedron() {
  // Two poles (0, 11) and two staggered pentagons (1..5 upper, 6..10 lower).
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    VertexId up = 1 + i, up_next = 1 + (i + 1) % 5;
    VertexId lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    edges.insert(edges.end(), {{0, up}, {up, up_next}, {11, lo}, {lo, lo_next}, {up, lo}, {up_next, lo}});
  }
  return Graph::from_edges(12, edges);
}

}  // namespace cliquedyn
