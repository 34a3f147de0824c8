#pragma once

// Bounded development of the universal triangular cover of a locally cyclic
// graph, and the surface shortcut for triangular simple connectivity.

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/covering.hpp"
#include "cliquedyn/graph.hpp"

namespace cliquedyn {

struct DevelopedCover {
  Graph ball;
  CoveringMap projection;          // domain = completed vertices
  std::vector<std::uint32_t> depth;  // BFS distance from the base lift
  VertexId base_lift = 0;
  bool closed = false;             // every developed vertex got its full link
  std::optional<std::string> conflict;
};

namespace detail {

class Developer {
 public:
  Developer(const Graph& g, std::size_t vertex_cap) : g_(g), cap_(vertex_cap) {
    links_.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto c = link_cycle(g, v);
      if (!c) throw CoverError("development needs a locally cyclic graph; vertex " + std::to_string(v) +
                               " has no cyclic link");
      links_[v] = std::move(*c);
    }
  }

  VertexId create(VertexId over, std::uint32_t depth) {
    if (proj_.size() >= cap_) throw CoverError("development exceeded vertex cap");
    proj_.push_back(over);
    depth_.push_back(depth);
    adj_.emplace_back();
    done_.push_back(0);
    return static_cast<VertexId>(proj_.size() - 1);
  }

  std::optional<VertexId> neighbour_over(VertexId x, VertexId target) const {
    for (VertexId y : adj_[x])
      if (proj_[y] == target) return y;
    return std::nullopt;
  }

  void connect(VertexId a, VertexId b) {
    if (a == b) fail("development tried to glue a vertex to itself");
    if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) return;
    if (!g_.adjacent(proj_[a], proj_[b])) fail("glued vertices do not project to an edge");
    auto ea = neighbour_over(a, proj_[b]);
    auto eb = neighbour_over(b, proj_[a]);
    if (ea || eb)
      fail("two developed neighbours of vertex " + std::to_string(ea ? a : b) +
           " project to the same host vertex");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  /// Gives x a neighbour over every vertex of its link and closes the fan.
  void complete(VertexId x) {
    const auto& link = links_[proj_[x]];
    const std::size_t d = link.size();
    std::vector<std::optional<VertexId>> slot(d);
    for (VertexId y : adj_[x]) {
      auto it = std::find(link.begin(), link.end(), proj_[y]);
      if (it == link.end()) fail("developed neighbour outside the host link");
      slot[static_cast<std::size_t>(it - link.begin())] = y;
    }
    if (std::none_of(slot.begin(), slot.end(), [](auto& s) { return s.has_value(); })) {
      slot[0] = create(link[0], depth_[x] + 1);
      connect(x, *slot[0]);
    }
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t j = 0; j < d; ++j) {
        if (slot[j]) continue;
        const auto& prev = slot[(j + d - 1) % d];
        const auto& next = slot[(j + 1) % d];
        if (!prev && !next) continue;
        std::optional<VertexId> a, b;
        if (prev) a = neighbour_over(*prev, link[j]);
        if (next) b = neighbour_over(*next, link[j]);
        if (a && b && *a != *b) fail("fan around a developed vertex closes inconsistently");
        VertexId z = a ? *a : b ? *b : create(link[j], depth_[x] + 1);
        if (z == x) fail("development folds onto itself");
        connect(x, z);
        slot[j] = z;
        progress = true;
      }
    }
    for (std::size_t j = 0; j < d; ++j) connect(*slot[j], *slot[(j + 1) % d]);
    done_[x] = 1;
  }

  [[noreturn]] void fail(const std::string& why) { throw CoverError(why); }

  const Graph& g_;
  std::size_t cap_;
  std::vector<std::vector<VertexId>> links_;
  std::vector<VertexId> proj_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<char> done_;
};

}  // namespace detail

/// Develops the ball of the given radius around a lift of `base` in the
/// universal triangular cover, completing links in breadth-first order.
/// Vertices closer than `radius` carry full neighbourhoods and form the domain
/// of the returned projection. A conflict is reported, not thrown.
inline DevelopedCover develop_universal_cover(const Graph& g, std::uint32_t radius, VertexId base,
                                              std::size_t vertex_cap = 2'000'000) {
  require_vertex(g, base);
  auto lc = is_locally_cyclic(g);
  if (!lc.ok)
    throw CoverError("develop_universal_cover requires a locally cyclic graph (vertex " +
                     std::to_string(lc.witness.value_or(0)) + " fails)");
  if (lc.min_degree < 4) throw CoverError("develop_universal_cover requires minimum degree >= 4");

  detail::Developer dev(g, vertex_cap);
  DevelopedCover out;
  out.base_lift = dev.create(base, 0);
  try {
    for (VertexId x = 0; x < dev.proj_.size(); ++x)
      if (dev.depth_[x] < radius) dev.complete(x);
  } catch (const CoverError& e) {
    out.conflict = e.what();
  }

  std::vector<Edge> edges;
  for (VertexId a = 0; a < dev.adj_.size(); ++a)
    for (VertexId b : dev.adj_[a])
      if (a < b) edges.emplace_back(a, b);
  out.ball = Graph::from_edges(dev.proj_.size(), edges);
  out.closed = !out.conflict && std::all_of(dev.done_.begin(), dev.done_.end(), [](char c) { return c != 0; });
  VertexSet domain;
  for (VertexId x = 0; x < dev.done_.size(); ++x)
    if (dev.done_[x]) domain.push_back(x);
  out.projection = CoveringMap{out.ball, g, dev.proj_, std::move(domain)};
  VertexId src = out.base_lift;
  out.depth = bfs_distances(out.ball, std::span<const VertexId>(&src, 1));
  return out;
}

struct TscReport {
  bool tsc = false;
  std::int64_t chi = 0;
};

/// For a connected closed surface triangulation: simply connected iff it is
/// a sphere, i.e. the Euler characteristic is 2.
inline TscReport is_tsc_locally_cyclic(const Graph& g) {
  if (!is_locally_cyclic(g).ok) throw GraphError("is_tsc_locally_cyclic: graph is not locally cyclic");
  if (!is_connected(g)) throw GraphError("is_tsc_locally_cyclic: graph is not connected");
  if (!every_edge_in_two_triangles(g)) throw GraphError("is_tsc_locally_cyclic: some edge is not in two triangles");
  TscReport r;
  r.chi = euler_characteristic(g);
  r.tsc = r.chi == 2;
  return r;
}

}  // namespace cliquedyn
