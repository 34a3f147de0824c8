#pragma once

// Triangular-shaped subgraphs of a host graph, the geometric clique graph G_n
// built from them, its degree-26 census and the distance invariant D.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/graph.hpp"
#include "cliquedyn/hexgeo.hpp"
#include "cliquedyn/parallel.hpp"

namespace cliquedyn {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A triangular-shaped subgraph together with one of its charts. The chart
/// lists host vertices in pattern order (see delta_index); `vertices` is the
/// sorted image and identifies the shape.
struct TriShape {
  std::uint32_t side = 0;
  std::vector<VertexId> chart;
  VertexSet vertices;
  int orientation = 1;  // +1 up, -1 down on coordinate-labelled hosts

  VertexId at(std::size_t row, std::size_t col) const { return chart[delta_index(row, col)]; }
  /// Corner k has coordinate side * e_k.
  VertexId corner(int k) const {
    if (k == 0) return chart[0];
    if (k == 1) return at(side, 0);
    return at(side, side);
  }
  bool contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
  /// Template coordinate of pattern index i.
  HexCoord coord(std::size_t i) const { return delta_coord(side, i); }

  friend bool operator<(const TriShape& a, const TriShape& b) {
    if (a.side != b.side) return a.side < b.side;
    return a.vertices < b.vertices;
  }
};

/// Host vertices of the sub-chart {a : a_k >= t for all k} (erosion by t).
inline VertexSet shape_core(const TriShape& s, std::int64_t t) {
  VertexSet out;
  for (std::size_t i = 0; i < s.chart.size(); ++i) {
    HexCoord a = s.coord(i);
    if (a[0] >= t && a[1] >= t && a[2] >= t) out.push_back(s.chart[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Host vertices of the boundary (zero coordinate; the vertex itself for side 0).
inline VertexSet shape_boundary(const TriShape& s) {
  if (s.side == 0) return s.vertices;
  VertexSet out;
  for (std::size_t i = 0; i < s.chart.size(); ++i) {
    HexCoord a = s.coord(i);
    if (a[0] == 0 || a[1] == 0 || a[2] == 0) out.push_back(s.chart[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The sub-shape with chart a -> mu(a + shift) of the given side.
inline TriShape sub_shape(const TriShape& s, std::uint32_t side, HexCoord shift) {
  TriShape t;
  t.side = side;
  t.chart.reserve(delta_size(side));
  for (std::size_t i = 0; i < delta_size(side); ++i)
    t.chart.push_back(s.chart[delta_index_of(delta_coord(side, i) + shift)]);
  t.vertices = t.chart;
  std::sort(t.vertices.begin(), t.vertices.end());
  t.orientation = s.orientation;
  return t;
}

namespace detail {

/// True when every host edge joins labels differing by a grid direction.
inline bool has_hex_labels(const Graph& g) {
  if (!g.has_labels()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.label(v).size() != 3) return false;
  for (const auto& [u, v] : g.edges())
    if (!hex_adjacent(HexCoord::from_label(g.label(u)), HexCoord::from_label(g.label(v)))) return false;
  return true;
}

inline int hex_orientation(const Graph& g, const TriShape& s) {
  if (s.side == 0) return 1;
  std::array<std::int64_t, 3> x0{};
  for (int k = 0; k < 3; ++k) x0[k] = g.label(s.corner(k))[0];
  std::int64_t mx = *std::max_element(x0.begin(), x0.end());
  return std::count(x0.begin(), x0.end(), mx) == 1 ? 1 : -1;
}

struct PlanStep {
  std::uint32_t pattern;  // pattern index placed at this step
  std::uint32_t anchor_a, anchor_b;
  std::uint32_t expected;  // placed pattern neighbours at placement time
};

inline bool pattern_adjacent(std::size_t r1, std::size_t j1, std::size_t r2, std::size_t j2) {
  if (r1 == r2) return j1 + 1 == j2 || j2 + 1 == j1;
  if (r2 == r1 + 1) return j2 == j1 || j2 == j1 + 1;
  if (r1 == r2 + 1) return j1 == j2 || j1 == j2 + 1;
  return false;
}

class ShapeGrower {
 public:
  ShapeGrower(const Graph& g, std::uint32_t max_side, std::uint32_t parity, bool hex_labels)
      : g_(g), max_side_(max_side), parity_(parity), hex_labels_(hex_labels), used_(g.vertex_count(), 0) {
    build_plan();
    chart_.assign(delta_size(std::max<std::uint32_t>(max_side, 1)), 0);
  }

  std::vector<TriShape>& out() { return out_; }

  void grow_from(VertexId a, VertexId b, VertexId c) {
    chart_[0] = a;
    chart_[1] = b;
    chart_[2] = c;
    used_[a] = 1;
    used_[b] = 2;
    used_[c] = 3;
    if (max_side_ >= 1) extend(0);
    used_[a] = used_[b] = used_[c] = 0;
  }

 private:
  void build_plan() {
    std::size_t total = delta_size(std::max<std::uint32_t>(max_side_, 1));
    row_of_.assign(total, 0);
    col_of_.assign(total, 0);
    for (std::uint32_t r = 0; r <= std::max<std::uint32_t>(max_side_, 1); ++r)
      for (std::uint32_t j = 0; j <= r; ++j) {
        row_of_[delta_index(r, j)] = r;
        col_of_[delta_index(r, j)] = j;
      }
    std::vector<char> placed(total, 0);
    placed[0] = placed[1] = placed[2] = 1;
    auto add = [&](std::uint32_t r, std::uint32_t j, std::size_t a, std::size_t b) {
      std::uint32_t p = static_cast<std::uint32_t>(delta_index(r, j));
      std::uint32_t expected = 0;
      // Only rows r-1 and r can hold placed neighbours.
      for (std::uint32_t rr = r - 1; rr <= r; ++rr)
        for (std::uint32_t jj = 0; jj <= rr; ++jj) {
          std::size_t q = delta_index(rr, jj);
          if (placed[q] && pattern_adjacent(r, j, rr, jj)) ++expected;
        }
      plan_.push_back({p, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), expected});
      placed[p] = 1;
    };
    for (std::uint32_t r = 2; r <= max_side_; ++r) {
      for (std::uint32_t j = 1; j < r; ++j) add(r, j, delta_index(r - 1, j - 1), delta_index(r - 1, j));
      add(r, 0, delta_index(r - 1, 0), delta_index(r, 1));
      add(r, r, delta_index(r - 1, r - 1), delta_index(r, r - 1));
    }
  }

  /// `step` counts plan entries already placed; rows complete at delta_size(r) - 3.
  void extend(std::size_t step) {
    std::size_t placed = step + 3;
    std::uint32_t row = row_of_[placed - 1];
    if (placed == delta_size(row)) {
      if (row % 2 == parity_ % 2) record(row);
      if (row == max_side_) return;
    }
    const PlanStep& ps = plan_[step];
    VertexId a = chart_[ps.anchor_a];
    VertexId b = chart_[ps.anchor_b];
    const std::uint32_t pr = row_of_[ps.pattern], pj = col_of_[ps.pattern];
    for (VertexId x : g_.neighbours(a)) {
      if (used_[x] || !g_.adjacent(x, b)) continue;
      std::uint32_t count = 0;
      bool ok = true;
      for (VertexId y : g_.neighbours(x)) {
        std::uint32_t q = used_[y];
        if (!q) continue;
        --q;
        if (!pattern_adjacent(pr, pj, row_of_[q], col_of_[q])) {
          ok = false;
          break;
        }
        ++count;
      }
      if (!ok || count != ps.expected) continue;
      chart_[ps.pattern] = x;
      used_[x] = ps.pattern + 1;
      extend(step + 1);
      used_[x] = 0;
    }
  }

  bool canonical(std::uint32_t r) const {
    auto P = [&](std::size_t row, std::size_t col) { return chart_[delta_index(row, col)]; };
    std::array<VertexId, 3> seed{P(0, 0), P(1, 0), P(1, 1)};
    std::array<std::array<VertexId, 3>, 4> others{{
        {P(r, 0), P(r - 1, 0), P(r, 1)},
        {P(r, 0), P(r, 1), P(r - 1, 0)},
        {P(r, r), P(r - 1, r - 1), P(r, r - 1)},
        {P(r, r), P(r, r - 1), P(r - 1, r - 1)},
    }};
    for (const auto& o : others)
      if (o < seed) return false;
    return true;
  }

  void record(std::uint32_t r) {
    if (!canonical(r)) return;
    TriShape s;
    s.side = r;
    s.chart.assign(chart_.begin(), chart_.begin() + static_cast<std::ptrdiff_t>(delta_size(r)));
    s.vertices = s.chart;
    std::sort(s.vertices.begin(), s.vertices.end());
    if (hex_labels_) s.orientation = hex_orientation(g_, s);
    out_.push_back(std::move(s));
  }

  const Graph& g_;
  std::uint32_t max_side_, parity_;
  bool hex_labels_;
  std::vector<std::uint32_t> used_;  // pattern index + 1, or 0
  std::vector<VertexId> chart_;
  std::vector<PlanStep> plan_;
  std::vector<std::uint32_t> row_of_, col_of_;
  std::vector<TriShape> out_;
};

}  // namespace detail

/// All triangular-shaped subgraphs of side m <= max_side with m = parity
/// (mod 2), sorted by (side, vertex set). A shape is an induced copy of
/// Delta_m; each is reported once with a canonical chart.
inline std::vector<TriShape> enumerate_trishapes(const Graph& g, std::uint32_t max_side, std::uint32_t parity) {
  const bool hex = detail::has_hex_labels(g);
  std::vector<TriShape> shapes;
  if (parity % 2 == 0)
    for (VertexId v = 0; v < g.vertex_count(); ++v) shapes.push_back({0, {v}, {v}, 1});
  if (max_side >= 1) {
    auto tris = triangles(g);
    std::vector<std::vector<TriShape>> parts(chunk_count(tris.size()));
    parallel_chunks(tris.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      detail::ShapeGrower grower(g, max_side, parity, hex);
      for (std::size_t i = begin; i < end; ++i) {
        auto [a, b, c] = tris[i];
        // Canonical charts have chart[1] < chart[2]; the corner may be any vertex.
        grower.grow_from(a, b, c);
        grower.grow_from(b, a, c);
        grower.grow_from(c, a, b);
      }
      parts[chunk] = std::move(grower.out());
    });
    for (auto& part : parts)
      for (auto& s : part) shapes.push_back(std::move(s));
  }
  std::sort(shapes.begin(), shapes.end());
  shapes.erase(std::unique(shapes.begin(), shapes.end(),
                           [](const TriShape& a, const TriShape& b) { return a.side == b.side && a.vertices == b.vertices; }),
               shapes.end());
  return shapes;
}

/// The adjacency rule between two distinct shapes of one host. Returns the
/// type side(S2) - side(S1) when adjacent.
inline std::optional<int> adjacency_test(const TriShape& s1, const TriShape& s2, const Graph& g) {
  for (VertexId v : s1.vertices) require_vertex(g, v);
  for (VertexId v : s2.vertices) require_vertex(g, v);
  if (s1.side == s2.side && s1.vertices == s2.vertices) return std::nullopt;
  const bool flip = s1.side > s2.side;
  const TriShape& small = flip ? s2 : s1;
  const TriShape& large = flip ? s1 : s2;
  const int s = static_cast<int>(large.side) - static_cast<int>(small.side);
  auto result = [&](bool hit) -> std::optional<int> {
    if (!hit) return std::nullopt;
    return flip ? -s : s;
  };
  auto subset = [](const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
  switch (s) {
    case 0:
      return result(subset(small.vertices, closed_neighbourhood(g, large.vertices)) ||
                    subset(large.vertices, closed_neighbourhood(g, small.vertices)));
    case 2:
      return result(subset(small.vertices, large.vertices));
    case 4:
      return result(subset(small.vertices, shape_core(large, 1)));
    case 6: {
      VertexSet near = closed_neighbourhood(g, shape_boundary(large));
      VertexSet rest;
      std::set_difference(large.vertices.begin(), large.vertices.end(), near.begin(), near.end(),
                          std::back_inserter(rest));
      return result(rest == small.vertices);
    }
    default:
      return std::nullopt;
  }
}

/// Shapes at host distance >= margin from the rim (vertices whose link is not
/// a cycle) are classifiable; without a rim every shape is.
inline constexpr std::uint32_t kClassifyMargin = 10;  // largest side gap (6) plus 4

/// Every potential G_n neighbour of a shape lies within host distance 2 of it,
/// so shapes this far from the rim already have their exact degree.
inline constexpr std::uint32_t kExactMargin = 2;

struct GeoCliqueGraph {
  std::uint32_t level = 0;
  Graph host;
  std::vector<TriShape> shapes;            // sorted by (side, vertices)
  Graph graph;                             // vertex i is shapes[i]
  std::vector<std::uint32_t> side_begin;   // shapes of side m: [side_begin[m], side_begin[m+1])
  std::vector<std::uint32_t> rim_distance; // per shape, kUnreachable when the host has no rim

  int edge_type(VertexId from, VertexId to) const {
    return static_cast<int>(shapes[to].side) - static_cast<int>(shapes[from].side);
  }
  std::size_t count_of_side(std::uint32_t m) const {
    if (m + 1 >= side_begin.size()) return 0;
    return side_begin[m + 1] - side_begin[m];
  }
  bool classifiable(VertexId s, std::uint32_t margin = kClassifyMargin) const {
    return rim_distance[s] == kUnreachable || rim_distance[s] >= margin;
  }
  /// Shape id by side and vertex set.
  std::optional<VertexId> find(std::uint32_t side, const VertexSet& vertices) const {
    if (side + 1 >= side_begin.size()) return std::nullopt;
    auto first = shapes.begin() + side_begin[side];
    auto last = shapes.begin() + side_begin[side + 1];
    TriShape key;
    key.side = side;
    key.vertices = vertices;
    auto it = std::lower_bound(first, last, key);
    if (it == last || it->vertices != vertices) return std::nullopt;
    return static_cast<VertexId>(it - shapes.begin());
  }
};

namespace detail {

/// Sorted shape ids per host vertex, built from a filter on shapes.
inline std::vector<std::vector<VertexId>> vertex_to_shapes(const Graph& g, const std::vector<TriShape>& shapes,
                                                           bool corner_only) {
  std::vector<std::vector<VertexId>> out(g.vertex_count());
  for (VertexId i = 0; i < shapes.size(); ++i) {
    if (corner_only) out[shapes[i].chart[0]].push_back(i);
    else
      for (VertexId v : shapes[i].vertices) out[v].push_back(i);
  }
  return out;
}

inline std::span<const VertexId> id_range(const std::vector<VertexId>& list, std::uint32_t lo, std::uint32_t hi) {
  auto a = std::lower_bound(list.begin(), list.end(), lo);
  auto b = std::lower_bound(a, list.end(), hi);
  return {list.data() + (a - list.begin()), static_cast<std::size_t>(b - a)};
}

}  // namespace detail

struct GeoCliqueOptions {
  bool warn = true;  // report hosts outside the locally cyclic, degree >= 6 setting on stderr
};

/// The n-th geometric clique graph of a host. Candidate pairs are generated
/// locally: same-side partners through the closed neighbourhood, larger
/// partners through shapes containing all corners of the smaller one.
inline GeoCliqueGraph geo_clique_graph(const Graph& g, std::uint32_t n, GeoCliqueOptions opts = {}) {
  if (opts.warn) {
    auto lc = is_locally_cyclic(g);
    if (!lc.ok || lc.min_degree < 6)
      std::cerr << "warning: geo_clique_graph host is not locally cyclic with minimum degree >= 6"
                << " (rim vertices present); results are exact only away from the rim\n";
  }
  GeoCliqueGraph out;
  out.level = n;
  out.host = g;
  out.shapes = enumerate_trishapes(g, n, n % 2);
  const auto& shapes = out.shapes;
  out.side_begin.assign(n + 2, 0);
  for (const auto& s : shapes) ++out.side_begin[s.side + 1];
  for (std::uint32_t m = 0; m <= n; ++m) out.side_begin[m + 1] += out.side_begin[m];

  VertexSet rim = rim_vertices(g);
  out.rim_distance.assign(shapes.size(), kUnreachable);
  if (!rim.empty()) {
    auto dist = bfs_distances(g, rim);
    for (VertexId i = 0; i < shapes.size(); ++i) {
      std::uint32_t d = kUnreachable;
      for (VertexId v : shapes[i].vertices) d = std::min(d, dist[v]);
      out.rim_distance[i] = d;
    }
  }

  auto containing = detail::vertex_to_shapes(g, shapes, false);
  auto by_corner = detail::vertex_to_shapes(g, shapes, true);

  std::vector<std::vector<Edge>> parts(chunk_count(shapes.size()));
  parallel_chunks(shapes.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> mark(g.vertex_count(), 0);
    std::uint32_t stamp = 0;
    auto& edges = parts[chunk];
    std::vector<VertexId> cand, tmp, nbhd;
    for (VertexId i = static_cast<VertexId>(begin); i < end; ++i) {
      const TriShape& s = shapes[i];
      const std::uint32_t m = s.side;

      // Type 0: T subset of N[S].
      ++stamp;
      nbhd.clear();
      auto take = [&](VertexId u) {
        if (mark[u] != stamp) {
          mark[u] = stamp;
          nbhd.push_back(u);
        }
      };
      for (VertexId v : s.vertices) {
        take(v);
        for (VertexId w : g.neighbours(v)) take(w);
      }
      const std::uint32_t lo = out.side_begin[m], hi = out.side_begin[m + 1];
      for (VertexId u : nbhd)
        for (VertexId t : detail::id_range(by_corner[u], lo, hi)) {
          if (t == i) continue;
          const TriShape& ts = shapes[t];
          bool inside = mark[ts.corner(1)] == stamp && mark[ts.corner(2)] == stamp;
          for (std::size_t k = 0; inside && k < ts.vertices.size(); ++k) inside = mark[ts.vertices[k]] == stamp;
          if (inside) edges.emplace_back(std::min(i, t), std::max(i, t));
        }

      // Types +2, +4, +6: T contains all corners of S.
      for (std::uint32_t gap : {2u, 4u, 6u}) {
        if (m + gap > n) break;
        const std::uint32_t tlo = out.side_begin[m + gap], thi = out.side_begin[m + gap + 1];
        auto first = detail::id_range(containing[s.corner(0)], tlo, thi);
        cand.assign(first.begin(), first.end());
        if (m > 0)
          for (int k = 1; k < 3; ++k) {
            auto other = detail::id_range(containing[s.corner(k)], tlo, thi);
            tmp.clear();
            std::set_intersection(cand.begin(), cand.end(), other.begin(), other.end(), std::back_inserter(tmp));
            cand.swap(tmp);
          }
        for (VertexId t : cand) {
          const TriShape& ts = shapes[t];
          bool hit = false;
          if (gap == 2) {
            hit = std::includes(ts.vertices.begin(), ts.vertices.end(), s.vertices.begin(), s.vertices.end());
          } else if (gap == 4) {
            ++stamp;
            for (std::size_t k = 0; k < ts.chart.size(); ++k) {
              HexCoord a = ts.coord(k);
              if (a[0] >= 1 && a[1] >= 1 && a[2] >= 1) mark[ts.chart[k]] = stamp;
            }
            hit = std::all_of(s.vertices.begin(), s.vertices.end(), [&](VertexId v) { return mark[v] == stamp; });
          } else {
            // S == T minus N[boundary T]; only chart coordinates >= 2 can survive.
            ++stamp;
            for (std::size_t k = 0; k < ts.chart.size(); ++k) {
              HexCoord a = ts.coord(k);
              if (a[0] == 0 || a[1] == 0 || a[2] == 0) mark[ts.chart[k]] = stamp;
            }
            hit = true;
            std::size_t survivors = 0;
            for (std::size_t k = 0; hit && k < ts.chart.size(); ++k) {
              HexCoord a = ts.coord(k);
              if (a[0] < 2 || a[1] < 2 || a[2] < 2) continue;
              VertexId x = ts.chart[k];
              bool near = false;
              for (VertexId w : g.neighbours(x))
                if (mark[w] == stamp) {
                  near = true;
                  break;
                }
              if (near) continue;
              ++survivors;
              if (!s.contains(x)) hit = false;
            }
            hit = hit && survivors == s.vertices.size();
          }
          if (hit) edges.emplace_back(i, t);
        }
      }
    }
  });
  std::vector<Edge> edges;
  for (auto& p : parts) edges.insert(edges.end(), p.begin(), p.end());
  out.graph = Graph::from_edges(shapes.size(), edges);
  return out;
}

/// Neighbour counts of shape s keyed by type.
inline std::map<int, std::size_t> neighbour_type_profile(const GeoCliqueGraph& gcg, VertexId s) {
  if (s >= gcg.shapes.size()) throw ShapeError("unknown shape id " + std::to_string(s));
  std::map<int, std::size_t> profile;
  for (VertexId t : gcg.graph.neighbours(s)) ++profile[gcg.edge_type(s, t)];
  return profile;
}

inline bool has_neighbour_of_type(const GeoCliqueGraph& gcg, VertexId s, int type) {
  for (VertexId t : gcg.graph.neighbours(s))
    if (gcg.edge_type(s, t) == type) return true;
  return false;
}

struct Deg26Census {
  VertexSet deg26;
  VertexSet not26;
  VertexSet excluded;  // too close to the rim to classify
  std::uint32_t boundary_margin = kClassifyMargin;
};

inline Deg26Census deg26_census(const GeoCliqueGraph& gcg, std::uint32_t margin = kClassifyMargin) {
  Deg26Census c;
  c.boundary_margin = margin;
  for (VertexId s = 0; s < gcg.shapes.size(); ++s) {
    if (!gcg.classifiable(s, margin)) c.excluded.push_back(s);
    else if (gcg.graph.degree(s) == 26) c.deg26.push_back(s);
    else c.not26.push_back(s);
  }
  return c;
}

/// Build the census with kExactMargin for both bounds to be sound: then a
/// walk in the window is a walk in the unbounded host, and leaving the window
/// requires passing an excluded shape.
struct ProbeDistance {
  VertexId probe;
  /// Distance to the classified not-26 set: an upper bound for the true value.
  std::optional<std::uint32_t> upper;
  /// Distance to not-26 or unclassifiable shapes: a lower bound for the true value.
  std::optional<std::uint32_t> lower;
};

struct DReport {
  std::vector<ProbeDistance> probes;
  std::optional<std::uint32_t> max_upper;  // nullopt: some probe cannot reach a not-26 shape
  std::optional<std::uint32_t> max_lower;
  bool infinite = false;  // no not-26 shape at all while probes exist
};

inline DReport invariant_D(const GeoCliqueGraph& gcg, const Deg26Census& census, const VertexSet& probes) {
  DReport r;
  auto to_opt = [](std::uint32_t d) -> std::optional<std::uint32_t> {
    if (d == kUnreachable) return std::nullopt;
    return d;
  };
  VertexSet weak = census.not26;
  weak.insert(weak.end(), census.excluded.begin(), census.excluded.end());
  std::sort(weak.begin(), weak.end());
  auto up = bfs_distances(gcg.graph, census.not26);
  auto lo = bfs_distances(gcg.graph, weak);
  r.infinite = census.not26.empty() && !probes.empty();
  bool all_up = true, all_lo = true;
  std::uint32_t mu = 0, ml = 0;
  for (VertexId p : probes) {
    if (p >= gcg.shapes.size()) throw ShapeError("unknown probe shape " + std::to_string(p));
    ProbeDistance pd{p, to_opt(up[p]), to_opt(lo[p])};
    if (pd.upper) mu = std::max(mu, *pd.upper);
    else all_up = false;
    if (pd.lower) ml = std::max(ml, *pd.lower);
    else all_lo = false;
    r.probes.push_back(pd);
  }
  if (all_up && !probes.empty()) r.max_upper = mu;
  if (all_lo && !probes.empty()) r.max_lower = ml;
  return r;
}

/// Shapes at each G_n distance from `source`, up to `depth` layers.
inline std::vector<VertexSet> bfs_layers(const Graph& g, VertexId source, std::uint32_t depth) {
  auto dist = bfs_distances(g, std::span<const VertexId>(&source, 1));
  std::vector<VertexSet> layers(depth + 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (dist[v] <= depth) layers[dist[v]].push_back(v);
  return layers;
}

struct LemmaViolation {
  VertexId shape;
  std::string what;
};

/// Degree bound for classifiable shapes of side >= min_side: degree <= 26,
/// with equality exactly when a +6 neighbour exists.
inline std::vector<LemmaViolation> check_degree_bound(const GeoCliqueGraph& gcg, std::uint32_t min_side,
                                                      std::uint32_t max_side, std::uint32_t margin = kClassifyMargin) {
  std::vector<LemmaViolation> bad;
  for (VertexId s = 0; s < gcg.shapes.size(); ++s) {
    std::uint32_t m = gcg.shapes[s].side;
    if (m < min_side || m > max_side || !gcg.classifiable(s, margin)) continue;
    std::size_t d = gcg.graph.degree(s);
    bool plus6 = has_neighbour_of_type(gcg, s, 6);
    if (d > 26) bad.push_back({s, "degree " + std::to_string(d) + " exceeds 26"});
    else if ((d == 26) != plus6)
      bad.push_back({s, "degree " + std::to_string(d) + (plus6 ? " with" : " without") + " a +6 neighbour"});
  }
  return bad;
}

/// Classifiable side-0 shapes without a +6 neighbour must not have degree 26.
inline std::vector<LemmaViolation> check_vertex_degrees(const GeoCliqueGraph& gcg, std::uint32_t margin = kClassifyMargin) {
  std::vector<LemmaViolation> bad;
  if (gcg.count_of_side(0) == 0) return bad;
  for (VertexId s = gcg.side_begin[0]; s < gcg.side_begin[1]; ++s) {
    if (!gcg.classifiable(s, margin)) continue;
    if (!has_neighbour_of_type(gcg, s, 6) && gcg.graph.degree(s) == 26)
      bad.push_back({s, "degree 26 without a +6 neighbour"});
  }
  return bad;
}

/// Image of a shape under a host automorphism, as a shape id of the same graph.
inline std::optional<VertexId> shape_image(const GeoCliqueGraph& gcg, VertexId s, const Permutation& gamma) {
  const TriShape& t = gcg.shapes[s];
  VertexSet img;
  img.reserve(t.vertices.size());
  for (VertexId v : t.vertices) img.push_back(gamma.at(v));
  std::sort(img.begin(), img.end());
  return gcg.find(t.side, img);
}

/// The action of host automorphisms on shapes.
inline GroupAction induced_shape_action(const GeoCliqueGraph& gcg, const GroupAction& host_action) {
  std::vector<Permutation> gens;
  for (const auto& gamma : host_action.generators()) {
    Permutation p(gcg.shapes.size());
    for (VertexId s = 0; s < p.size(); ++s) {
      auto img = shape_image(gcg, s, gamma);
      if (!img) throw ActionError("host automorphism maps a shape to a non-shape");
      p[s] = *img;
    }
    gens.push_back(std::move(p));
  }
  return GroupAction(gcg.shapes.size(), std::move(gens));
}

}  // namespace cliquedyn
