#pragma once

// Hexagonal grid coordinates: triangular-shaped templates, their boundaries,
// erosions, inclusion maps and symmetries, and generators for finite hosts
// (lattice windows, 6-regular tori, cone lattices).

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquedyn/covering.hpp"
#include "cliquedyn/graph.hpp"
#include "cliquedyn/group_action.hpp"

namespace cliquedyn {

class HexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HexCoord {
  std::array<std::int64_t, 3> x{0, 0, 0};

  constexpr HexCoord() = default;
  constexpr HexCoord(std::int64_t a, std::int64_t b, std::int64_t c) : x{a, b, c} {}

  constexpr std::int64_t height() const { return x[0] + x[1] + x[2]; }
  constexpr std::int64_t operator[](std::size_t i) const { return x[i]; }
  constexpr HexCoord operator+(const HexCoord& o) const { return {x[0] + o.x[0], x[1] + o.x[1], x[2] + o.x[2]}; }
  constexpr HexCoord operator-(const HexCoord& o) const { return {x[0] - o.x[0], x[1] - o.x[1], x[2] - o.x[2]}; }
  constexpr HexCoord operator*(std::int64_t k) const { return {x[0] * k, x[1] * k, x[2] * k}; }
  friend constexpr auto operator<=>(const HexCoord&, const HexCoord&) = default;

  Label label() const { return {x[0], x[1], x[2]}; }
  static HexCoord from_label(const Label& l) {
    if (l.size() != 3) throw HexError("hex label must have three entries");
    return {l[0], l[1], l[2]};
  }
};

/// The six difference vectors of the grid, in the order they are listed in
/// the coordinate definition.
inline constexpr std::array<HexCoord, 6> kDirections{{
    {1, -1, 0}, {1, 0, -1}, {-1, 1, 0}, {0, 1, -1}, {-1, 0, 1}, {0, -1, 1}}};

inline constexpr std::array<HexCoord, 3> kUnitVectors{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

inline bool hex_adjacent(const HexCoord& a, const HexCoord& b) {
  HexCoord d = a - b;
  return std::find(kDirections.begin(), kDirections.end(), d) != kDirections.end();
}

/// Graph distance inside one grid (both points of equal height).
inline std::int64_t hex_distance(const HexCoord& a, const HexCoord& b) {
  HexCoord d = a - b;
  return (std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2])) / 2;
}

/// Graph on a finite coordinate list (one height), edges from kDirections.
inline Graph coordinate_graph(const std::vector<HexCoord>& coords) {
  std::map<HexCoord, VertexId> index;
  for (VertexId i = 0; i < coords.size(); ++i) index.emplace(coords[i], i);
  std::vector<Edge> edges;
  std::vector<Label> labels;
  labels.reserve(coords.size());
  for (VertexId i = 0; i < coords.size(); ++i) {
    labels.push_back(coords[i].label());
    for (const auto& d : kDirections) {
      auto it = index.find(coords[i] + d);
      if (it != index.end() && it->second > i) edges.emplace_back(i, it->second);
    }
  }
  return Graph::from_edges(coords.size(), edges, std::move(labels));
}

// ---------------------------------------------------------------------------
// Triangular-shaped templates

/// Pattern index of the Delta_m coordinate (m - r, r - j, j), row r, column j.
inline constexpr std::size_t delta_index(std::size_t r, std::size_t j) { return r * (r + 1) / 2 + j; }
inline constexpr std::size_t delta_size(std::size_t m) { return (m + 1) * (m + 2) / 2; }

/// Delta_m coordinate of a pattern index.
inline HexCoord delta_coord(std::size_t m, std::size_t index) {
  std::size_t r = 0;
  while (delta_index(r + 1, 0) <= index) ++r;
  std::size_t j = index - delta_index(r, 0);
  return {static_cast<std::int64_t>(m - r), static_cast<std::int64_t>(r - j), static_cast<std::int64_t>(j)};
}

inline std::size_t delta_index_of(const HexCoord& a) {
  std::size_t r = static_cast<std::size_t>(a[1] + a[2]);
  return delta_index(r, static_cast<std::size_t>(a[2]));
}

/// Delta_m placed at `offset`: vertex i has coordinate delta_coord(m, i) + offset.
struct DeltaTemplate {
  std::uint32_t side = 0;
  HexCoord offset{0, 0, 0};
  std::vector<HexCoord> coords;  // pattern order
  Graph graph;                   // labelled with coords

  std::size_t vertex_count() const { return coords.size(); }
  /// Whether pattern vertex i has a zero coordinate relative to the template.
  bool on_boundary(std::size_t i) const {
    if (side == 0) return true;
    HexCoord a = coords[i] - offset;
    return a[0] == 0 || a[1] == 0 || a[2] == 0;
  }
};

inline DeltaTemplate delta_graph(std::uint32_t m, HexCoord offset = {0, 0, 0}) {
  DeltaTemplate t;
  t.side = m;
  t.offset = offset;
  t.coords.reserve(delta_size(m));
  for (std::size_t i = 0; i < delta_size(m); ++i) t.coords.push_back(delta_coord(m, i) + offset);
  t.graph = coordinate_graph(t.coords);
  return t;
}

struct BoundarySubgraph {
  VertexSet vertices;        // template vertex ids
  std::vector<Edge> edges;   // sorted pairs
};

/// Vertices with a zero coordinate and the edges lying in a single triangle.
/// For side 0 the boundary is the single vertex.
inline BoundarySubgraph boundary(const DeltaTemplate& t) {
  BoundarySubgraph b;
  for (VertexId i = 0; i < t.vertex_count(); ++i)
    if (t.on_boundary(i)) b.vertices.push_back(i);
  for (const auto& [u, v] : t.graph.edges())
    if (common_neighbours(t.graph, u, v).size() == 1) b.edges.emplace_back(u, v);
  return b;
}

enum class ErodeMode { boundary, closed_nbhd };

/// boundary: Delta_{m-3} at offset + (1,1,1); closed_nbhd: Delta_{m-6} at
/// offset + (2,2,2).
inline DeltaTemplate erode(const DeltaTemplate& t, ErodeMode mode) {
  std::uint32_t cut = mode == ErodeMode::boundary ? 3 : 6;
  if (t.side < cut)
    throw HexError("erode: side " + std::to_string(t.side) + " is too small (needs >= " + std::to_string(cut) + ")");
  std::int64_t k = cut / 3;
  return delta_graph(t.side - cut, t.offset + HexCoord{k, k, k});
}

/// (a1,a2,a3) -> (a1+t1, a2+t2, a3+t3).
struct TriangleInclusion {
  std::uint32_t side = 0;
  HexCoord shift{0, 0, 0};

  HexCoord operator()(const HexCoord& a) const { return a + shift; }
  std::int64_t target_height() const { return static_cast<std::int64_t>(side) + shift.height(); }
};

inline TriangleInclusion triangle_inclusion(std::uint32_t m, HexCoord t) { return {m, t}; }

/// inner first, then outer.
inline TriangleInclusion compose(const TriangleInclusion& outer, const TriangleInclusion& inner) {
  return {inner.side, inner.shift + outer.shift};
}

/// y_i = x_{perm[i]}. Odd permutations are the reflections.
struct CoordPermutation {
  std::array<int, 3> perm{0, 1, 2};

  HexCoord operator()(const HexCoord& a) const { return {a[perm[0]], a[perm[1]], a[perm[2]]}; }
  int sign() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }
  bool is_reflection() const { return sign() < 0; }
  friend bool operator==(const CoordPermutation&, const CoordPermutation&) = default;
};

/// The six coordinate permutations, identity first.
inline std::vector<CoordPermutation> symmetries() {
  std::vector<CoordPermutation> out;
  std::array<int, 3> p{0, 1, 2};
  do out.push_back({p});
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// A symmetry as a vertex permutation of the template Delta_m (offset 0).
inline Permutation symmetry_permutation(std::uint32_t m, const CoordPermutation& s) {
  Permutation p(delta_size(m));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<VertexId>(delta_index_of(s(delta_coord(m, i))));
  return p;
}

// ---------------------------------------------------------------------------
// Lattice windows

struct WindowSpec {
  HexCoord center{0, 0, 0};
  std::uint32_t radius = 0;
};

/// Ball of the grid around `center`, vertices in lexicographic coordinate order.
inline Graph hex_window(const WindowSpec& spec) {
  std::vector<HexCoord> coords;
  const std::int64_t r = spec.radius;
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = std::max(-r, -a - r); b <= std::min(r, -a + r); ++b)
      coords.push_back(spec.center + HexCoord{a, b, -a - b});
  std::sort(coords.begin(), coords.end());
  return coordinate_graph(coords);
}

/// The triangular region Delta_m placed at `offset`, as a labelled host.
inline Graph delta_host(std::uint32_t m, HexCoord offset = {0, 0, 0}) { return delta_graph(m, offset).graph; }

// ---------------------------------------------------------------------------
// Tori

/// Axial lattice vector (q, r), i.e. the grid point (q, r, -q-r).
struct Axial {
  std::int64_t q = 0, r = 0;
  friend constexpr auto operator<=>(const Axial&, const Axial&) = default;
  HexCoord hex() const { return {q, r, -q - r}; }
  static Axial from_hex(const HexCoord& c) { return {c[0], c[1]}; }
};

inline std::int64_t axial_norm(const Axial& a) { return hex_distance(a.hex(), HexCoord{0, 0, 0}); }

/// Hermite normal form of the lattice spanned by two axial vectors:
/// generators (A, 0) and (B, C) with A, C > 0 and 0 <= B < A.
class LatticeReducer {
 public:
  LatticeReducer() = default;
  LatticeReducer(Axial a, Axial b) {
    if (a.q * b.r - a.r * b.q == 0) throw HexError("torus basis is linearly dependent");
    Axial u = a, v = b;
    while (v.r != 0) {
      std::int64_t t = u.r / v.r;
      u.q -= t * v.q;
      u.r -= t * v.r;
      std::swap(u, v);
    }
    // v.r == 0 now; u.r = +-gcd of second coordinates.
    if (u.r < 0) u = {-u.q, -u.r};
    A_ = std::abs(v.q);
    C_ = u.r;
    B_ = ((u.q % A_) + A_) % A_;
  }

  std::int64_t index() const { return A_ * C_; }

  Axial reduce(Axial p) const {
    std::int64_t k = floor_div(p.r, C_);
    p.q -= k * B_;
    p.r -= k * C_;
    p.q = ((p.q % A_) + A_) % A_;
    return p;
  }

  bool contains(Axial p) const { return reduce(p) == Axial{0, 0}; }

  /// Representative id: r * A + q for a reduced point.
  VertexId id_of(Axial p) const {
    Axial x = reduce(p);
    return static_cast<VertexId>(x.r * A_ + x.q);
  }
  Axial representative(VertexId id) const {
    return {static_cast<std::int64_t>(id) % A_, static_cast<std::int64_t>(id) / A_};
  }

 private:
  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  std::int64_t A_ = 1, B_ = 0, C_ = 1;
};

struct TorusSpec {
  Axial a{5, 0};
  Axial b{0, 5};
};

inline constexpr std::int64_t kMinTorusNorm = 4;

/// Smallest hex norm of a nonzero lattice vector, scanning up to `limit`.
inline std::int64_t torus_min_norm(const TorusSpec& spec, std::int64_t limit = kMinTorusNorm) {
  LatticeReducer red(spec.a, spec.b);
  for (std::int64_t d = 1; d < limit; ++d)
    for (std::int64_t q = -d; q <= d; ++q)
      for (std::int64_t r = -d; r <= d; ++r) {
        Axial p{q, r};
        if (axial_norm(p) == d && red.contains(p)) return d;
      }
  return limit;
}

struct Torus {
  TorusSpec spec;
  LatticeReducer lattice;
  Graph graph;  // labelled with the representative grid point

  VertexId vertex_of(const HexCoord& c) const { return lattice.id_of(Axial::from_hex(c)); }
  Axial representative(VertexId v) const { return lattice.representative(v); }

  /// Translation by an axial vector as an automorphism of the torus.
  Permutation translation(Axial t) const {
    Permutation p(graph.vertex_count());
    for (VertexId v = 0; v < p.size(); ++v) {
      Axial x = representative(v);
      p[v] = lattice.id_of({x.q + t.q, x.r + t.r});
    }
    return p;
  }
};

inline Torus torus_graph(const TorusSpec& spec) {
  Torus t;
  t.spec = spec;
  t.lattice = LatticeReducer(spec.a, spec.b);
  std::int64_t norm = torus_min_norm(spec);
  if (norm < kMinTorusNorm)
    throw HexError("torus basis has a lattice vector of norm " + std::to_string(norm) + " < " +
                   std::to_string(kMinTorusNorm));
  std::size_t n = static_cast<std::size_t>(t.lattice.index());
  std::vector<Edge> edges;
  std::vector<Label> labels;
  for (VertexId v = 0; v < n; ++v) {
    Axial x = t.lattice.representative(v);
    labels.push_back(x.hex().label());
    for (const auto& d : kDirections) {
      VertexId w = t.lattice.id_of({x.q + d[0], x.r + d[1]});
      if (v < w) edges.emplace_back(v, w);
    }
  }
  t.graph = Graph::from_edges(n, edges, std::move(labels));
  return t;
}

/// Projection of a labelled lattice host (window, Delta region) to the torus.
/// The domain is every host vertex whose link is a full cycle.
inline CoveringMap torus_projection(const Graph& host, const Torus& torus) {
  if (!host.has_labels()) throw HexError("torus_projection needs a coordinate-labelled host");
  CoveringMap p{host, torus.graph, {}, VertexSet{}};
  p.vertex_map.reserve(host.vertex_count());
  for (VertexId v = 0; v < host.vertex_count(); ++v) {
    HexCoord c = HexCoord::from_label(host.label(v));
    if (c.height() != 0) throw HexError("torus_projection expects height-0 coordinates");
    p.vertex_map.push_back(torus.vertex_of(c));
    if (link_cycle(host, v)) p.domain->push_back(v);
  }
  return p;
}

struct TorusCover {
  CoveringMap map;     // big torus -> small torus
  GroupAction deck;    // translations by the small torus basis
};

/// A torus whose lattice lies inside another's covers it; the deck group is
/// generated by the small lattice's basis translations.
inline TorusCover torus_covering(const Torus& big, const Torus& small) {
  if (!small.lattice.contains(big.spec.a) || !small.lattice.contains(big.spec.b))
    throw HexError("torus_covering: the big lattice is not a sublattice of the small one");
  CoveringMap p{big.graph, small.graph, {}, std::nullopt};
  for (VertexId v = 0; v < big.graph.vertex_count(); ++v)
    p.vertex_map.push_back(small.vertex_of(big.representative(v).hex()));
  GroupAction deck(big.graph.vertex_count(), {big.translation(small.spec.a), big.translation(small.spec.b)});
  return {std::move(p), std::move(deck)};
}

// ---------------------------------------------------------------------------
// Cone lattices

/// d wedges {(a, b) : a, b >= 0, a + b <= r} glued cyclically: point (0, b) of
/// wedge k is point (b, 0) of wedge k+1. Vertex 0 is the apex; labels are
/// (wedge, a, b) with the apex as (0, 0, 0).
inline Graph cone_lattice(std::uint32_t apex_degree, std::uint32_t radius) {
  if (apex_degree < 6) throw HexError("cone_lattice: apex degree must be >= 6");
  if (radius < 1) throw HexError("cone_lattice: radius must be >= 1");
  const std::int64_t d = apex_degree, r = radius;
  const std::int64_t per_wedge = r * (r + 1) / 2;
  // Canonical id of wedge point (k, a, b); points with a == 0 belong to wedge k-1.
  auto id = [&](std::int64_t k, std::int64_t a, std::int64_t b) -> VertexId {
    if (a == 0 && b == 0) return 0;
    if (a == 0) {
      k = (k + d - 1) % d;
      a = b;
      b = 0;
    }
    // a >= 1: rows a = 1..r, each with b = 0..r-a.
    std::int64_t before = 0;
    for (std::int64_t i = 1; i < a; ++i) before += r - i + 1;
    return static_cast<VertexId>(1 + k * per_wedge + before + b);
  };
  const std::size_t n = static_cast<std::size_t>(1 + d * per_wedge);
  std::vector<Label> labels(n);
  labels[0] = {0, 0, 0};
  std::vector<Edge> edges;
  const std::array<std::array<std::int64_t, 2>, 3> steps{{{1, 0}, {0, 1}, {-1, 1}}};
  for (std::int64_t k = 0; k < d; ++k)
    for (std::int64_t a = 0; a <= r; ++a)
      for (std::int64_t b = 0; a + b <= r; ++b) {
        VertexId u = id(k, a, b);
        if (a >= 1) labels[u] = {k, a, b};
        for (const auto& s : steps) {
          std::int64_t a2 = a + s[0], b2 = b + s[1];
          if (a2 < 0 || b2 < 0 || a2 + b2 > r) continue;
          VertexId w = id(k, a2, b2);
          if (u != w) edges.emplace_back(std::min(u, w), std::max(u, w));
        }
      }
  return Graph::from_edges(n, edges, std::move(labels));
}

}  // namespace cliquedyn
