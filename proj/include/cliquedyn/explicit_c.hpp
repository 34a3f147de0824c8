#pragma once

// The explicit isomorphism C_{n+1}: G_{n+1} -> kG_n, which sends a shape to a
// clique of lower-level shapes, its four-part verification, and the chain
// psi_n: G_n -> k^n G assembled from these maps.

#include <algorithm>
#include <array>
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

/// Parts of an image. Shapes of side >= 1 use the first four, side 0 the last two.
enum class CPart : int { down1 = 0, up1 = 1, up3 = 2, special = 3, incident = 4, interior = 5 };
inline constexpr std::size_t kCPartCount = 6;

inline const char* to_string(CPart p) {
  switch (p) {
    case CPart::down1: return "M_m-1";
    case CPart::up1: return "M_m+1";
    case CPart::up3: return "M_m+3";
    case CPart::special: return "special";
    case CPart::incident: return "incident_delta1";
    case CPart::interior: return "enclosing_delta3";
  }
  return "?";
}

struct CImage {
  VertexSet image;                            // lower-level shape ids
  std::array<std::size_t, kCPartCount> parts{};
  std::optional<std::string> flag;            // set when the image could not be formed
};

struct ExplicitCMap {
  std::uint32_t upper_level = 0;
  std::vector<CImage> images;  // indexed by upper shape id
  VertexSet safe;              // upper shapes far enough from the rim to be checked
};

/// Inclusive bounds a part size must satisfy.
struct PartBounds {
  std::size_t lo = 0, hi = 0;
};

/// Size annotations for one part, given side m, lower level n and, for
/// side 0, the host degree of the vertex.
inline PartBounds expected_part(CPart p, std::uint32_t m, std::uint32_t n, std::size_t deg) {
  switch (p) {
    case CPart::down1: return m >= 1 ? PartBounds{3, 3} : PartBounds{0, 0};
    case CPart::up1: return m >= 1 && m + 1 <= n ? PartBounds{0, 3} : PartBounds{0, 0};
    case CPart::up3: return m >= 1 && m + 3 <= n ? PartBounds{0, 1} : PartBounds{0, 0};
    case CPart::special:
      if (m == 0 || (m == 1 && n <= 1)) return {0, 0};
      return {1, 1};
    case CPart::incident: return m == 0 ? PartBounds{deg, deg} : PartBounds{0, 0};
    case CPart::interior:
      if (m != 0) return {0, 0};
      if (deg == 6 && n >= 3) return {2, 2};
      if (deg >= 7 || n <= 2) return {0, 0};
      return {0, 2};
  }
  return {0, 0};
}

namespace detail {

/// Hexagonal extension of a side-1 shape: each edge gains its second common
/// neighbour. Empty when some edge does not have exactly one such vertex.
inline std::optional<VertexSet> nabla2_extension(const Graph& g, const TriShape& s) {
  VertexSet out = s.vertices;
  const auto& v = s.vertices;
  for (int k = 0; k < 3; ++k) {
    VertexId a = v[k], b = v[(k + 1) % 3], c = v[(k + 2) % 3];
    std::optional<VertexId> extra;
    for (VertexId w : common_neighbours(g, a, b)) {
      if (w == c) continue;
      if (extra) return std::nullopt;
      extra = w;
    }
    if (!extra) return std::nullopt;
    out.push_back(*extra);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) return std::nullopt;
  return out;
}

}  // namespace detail

/// Builds C_{n+1}(S) for every shape S of the upper level from the lower level.
inline ExplicitCMap explicit_C(const GeoCliqueGraph& upper, const GeoCliqueGraph& lower, const Graph& host,
                               std::uint32_t margin = kClassifyMargin) {
  if (upper.level != lower.level + 1)
    throw ShapeError("explicit_C: levels must be n+1 and n, got " + std::to_string(upper.level) + " and " +
                     std::to_string(lower.level));
  if (upper.host.vertex_count() != host.vertex_count() || lower.host.vertex_count() != host.vertex_count())
    throw ShapeError("explicit_C: both levels must be built over the given host");
  const std::uint32_t n = lower.level;
  ExplicitCMap out;
  out.upper_level = upper.level;
  out.images.resize(upper.shapes.size());
  auto containing = detail::vertex_to_shapes(host, lower.shapes, false);

  auto shapes_of_side_containing = [&](const TriShape& s, std::uint32_t side) {
    std::vector<VertexId> cand;
    if (side + 1 >= lower.side_begin.size()) return cand;
    const std::uint32_t lo = lower.side_begin[side], hi = lower.side_begin[side + 1];
    auto first = detail::id_range(containing[s.corner(0)], lo, hi);
    cand.assign(first.begin(), first.end());
    for (int k = 1; k < 3 && s.side > 0; ++k) {
      auto other = detail::id_range(containing[s.corner(k)], lo, hi);
      std::vector<VertexId> tmp;
      std::set_intersection(cand.begin(), cand.end(), other.begin(), other.end(), std::back_inserter(tmp));
      cand.swap(tmp);
    }
    return cand;
  };

  for (VertexId i = 0; i < upper.shapes.size(); ++i) {
    const TriShape& s = upper.shapes[i];
    CImage& img = out.images[i];
    auto add = [&](CPart p, VertexId t) {
      img.image.push_back(t);
      ++img.parts[static_cast<int>(p)];
    };
    auto add_set = [&](CPart p, std::uint32_t side, const VertexSet& vs, const char* what) {
      if (auto t = lower.find(side, vs)) add(p, *t);
      else if (!img.flag) img.flag = std::string("missing ") + what;
    };
    const std::uint32_t m = s.side;

    if (m == 0) {
      const VertexId v = s.vertices[0];
      if (lower.side_begin.size() > 2)
        for (VertexId t : detail::id_range(containing[v], lower.side_begin[1], lower.side_begin[2]))
          add(CPart::incident, t);
      if (n >= 3)
        for (VertexId t : shapes_of_side_containing(s, 3))
          if (shape_core(lower.shapes[t], 1) == s.vertices) add(CPart::interior, t);
    } else {
      for (const auto& e : kUnitVectors) {
        TriShape sub = sub_shape(s, m - 1, e);
        add_set(CPart::down1, m - 1, sub.vertices, "sub-triangle");
      }
      if (m + 1 <= n)
        for (VertexId t : shapes_of_side_containing(s, m + 1)) {
          const TriShape& ts = lower.shapes[t];
          for (const auto& e : kUnitVectors)
            if (sub_shape(ts, m, e).vertices == s.vertices) {
              add(CPart::up1, t);
              break;
            }
        }
      if (m + 3 <= n)
        for (VertexId t : shapes_of_side_containing(s, m + 3))
          if (shape_core(lower.shapes[t], 1) == s.vertices) add(CPart::up3, t);
      if (m == 1 && n >= 2) {
        auto ext = detail::nabla2_extension(host, s);
        if (ext) add_set(CPart::special, 2, *ext, "nabla2 extension shape");
        else if (!img.flag) img.flag = "no unique nabla2 extension";
      } else if (m == 2) {
        VertexSet nabla{s.chart[delta_index_of({1, 1, 0})], s.chart[delta_index_of({0, 1, 1})],
                        s.chart[delta_index_of({1, 0, 1})]};
        std::sort(nabla.begin(), nabla.end());
        add_set(CPart::special, 1, nabla, "central down triangle");
      } else if (m >= 3) {
        add_set(CPart::special, m - 3, shape_core(s, 1), "interior shape");
      }
    }
    std::sort(img.image.begin(), img.image.end());
    img.image.erase(std::unique(img.image.begin(), img.image.end()), img.image.end());
    if (upper.classifiable(i, margin)) out.safe.push_back(i);
  }
  return out;
}

struct VerifyCReport {
  bool ok = false;
  bool maximal_cliques = true;
  bool injective = true;
  bool adjacency = true;
  bool part_sizes = true;
  bool bijective = false;  // every shape checked and the map hits every clique
  std::size_t checked = 0;
  std::size_t excluded = 0;
  std::vector<std::string> failures;  // first few, with shape ids
  std::optional<VertexSet> witness_clique;
  std::map<std::string, std::map<std::size_t, std::size_t>> observed_part_sizes;  // part -> size -> count
  std::vector<VertexId> clique_of;  // upper shape -> kG_n vertex, kUnreachable when unmapped
};

/// The four checks: maximal cliques, injectivity, adjacency both ways on the
/// safe region, and part-size annotations.
inline VerifyCReport verify_C(const ExplicitCMap& map, const GeoCliqueGraph& upper, const GeoCliqueGraph& lower,
                              const CliqueGraphResult& kg_lower) {
  VerifyCReport r;
  constexpr std::size_t kMaxFailures = 20;
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (r.failures.size() < kMaxFailures) r.failures.push_back(std::move(msg));
  };
  if (map.images.size() != upper.shapes.size()) throw ShapeError("verify_C: map does not match the upper level");
  if (kg_lower.graph.vertex_count() != kg_lower.membership.size())
    throw ShapeError("verify_C: malformed clique graph");
  const Graph& gl = lower.graph;
  SetIndex index(kg_lower.membership);
  r.clique_of.assign(upper.shapes.size(), kUnreachable);
  r.checked = map.safe.size();
  r.excluded = upper.shapes.size() - map.safe.size();
  std::vector<char> is_safe(upper.shapes.size(), 0);
  for (VertexId s : map.safe) is_safe[s] = 1;

  std::map<VertexSet, VertexId> seen;
  std::vector<std::vector<VertexId>> users(gl.vertex_count());
  for (VertexId s : map.safe) {
    const CImage& img = map.images[s];
    const std::string tag = "shape " + std::to_string(s) + " (side " + std::to_string(upper.shapes[s].side) + ")";
    if (img.flag) fail(r.maximal_cliques, tag + ": " + *img.flag);

    // (1) complete and maximal in G_n.
    bool complete = !img.image.empty();
    for (std::size_t a = 0; complete && a < img.image.size(); ++a)
      for (std::size_t b = a + 1; complete && b < img.image.size(); ++b)
        complete = gl.adjacent(img.image[a], img.image[b]);
    bool maximal = complete;
    if (complete)
      for (VertexId x : gl.neighbours(img.image.front())) {
        if (std::binary_search(img.image.begin(), img.image.end(), x)) continue;
        if (std::all_of(img.image.begin(), img.image.end(), [&](VertexId y) { return gl.adjacent(x, y); })) {
          maximal = false;
          break;
        }
      }
    if (!maximal) {
      fail(r.maximal_cliques, tag + (complete ? ": image is not maximal" : ": image is not complete"));
      if (!r.witness_clique) r.witness_clique = img.image;
    } else if (auto k = index.find(img.image)) {
      r.clique_of[s] = *k;
    } else {
      fail(r.maximal_cliques, tag + ": image is not among the cliques of the lower level");
    }

    // (2) injective.
    auto [it, fresh] = seen.emplace(img.image, s);
    if (!fresh) fail(r.injective, tag + " and shape " + std::to_string(it->second) + " share an image");
    for (VertexId t : img.image) users[t].push_back(s);

    // (4) part sizes.
    const TriShape& sh = upper.shapes[s];
    std::size_t deg = sh.side == 0 ? upper.host.degree(sh.vertices[0]) : 0;
    for (std::size_t p = 0; p < kCPartCount; ++p) {
      auto part = static_cast<CPart>(p);
      const bool relevant = sh.side == 0 ? (part == CPart::incident || part == CPart::interior)
                                         : (part != CPart::incident && part != CPart::interior);
      if (!relevant) continue;
      ++r.observed_part_sizes[to_string(part)][img.parts[p]];
      PartBounds b = expected_part(part, sh.side, lower.level, deg);
      if (img.parts[p] < b.lo || img.parts[p] > b.hi)
        fail(r.part_sizes, tag + ": part " + to_string(part) + " has size " + std::to_string(img.parts[p]) +
                               ", expected " + std::to_string(b.lo) + ".." + std::to_string(b.hi));
    }
  }

  // (3) S ~ T in G_{n+1} iff their images meet, among safe shapes.
  for (VertexId s : map.safe) {
    VertexSet meet;
    for (VertexId t : map.images[s].image)
      for (VertexId u : users[t])
        if (u != s) meet.push_back(u);
    std::sort(meet.begin(), meet.end());
    meet.erase(std::unique(meet.begin(), meet.end()), meet.end());
    VertexSet adj;
    for (VertexId u : upper.graph.neighbours(s))
      if (is_safe[u]) adj.push_back(u);
    if (meet != adj) {
      VertexSet diff;
      std::set_symmetric_difference(meet.begin(), meet.end(), adj.begin(), adj.end(), std::back_inserter(diff));
      fail(r.adjacency, "shape " + std::to_string(s) + ": adjacency differs at shape " + std::to_string(diff.front()));
    }
  }

  r.bijective = r.maximal_cliques && r.injective && r.excluded == 0 &&
                upper.shapes.size() == kg_lower.graph.vertex_count();
  r.ok = r.maximal_cliques && r.injective && r.adjacency && r.part_sizes;
  return r;
}

/// Equivariance of C under a host automorphism: C(gamma S) = gamma C(S) on
/// safe shapes whose images stay inside the catalogue. Returns violating shapes.
inline std::vector<VertexId> explicit_C_violations(const ExplicitCMap& map, const GeoCliqueGraph& upper,
                                                   const GeoCliqueGraph& lower, const Permutation& gamma) {
  std::vector<VertexId> bad;
  for (VertexId s : map.safe) {
    auto gs = shape_image(upper, s, gamma);
    if (!gs) {
      bad.push_back(s);
      continue;
    }
    VertexSet moved;
    bool ok = true;
    for (VertexId t : map.images[s].image) {
      auto gt = shape_image(lower, t, gamma);
      if (!gt) {
        ok = false;
        break;
      }
      moved.push_back(*gt);
    }
    std::sort(moved.begin(), moved.end());
    if (!ok || moved != map.images[*gs].image) bad.push_back(s);
  }
  return bad;
}

struct PsiChain {
  std::uint32_t level = 0;
  std::vector<VertexId> map;  // G_n shape id -> vertex of k^n G
  bool isomorphism = false;
  std::optional<std::string> failure;
};

/// psi_0 identifies side-0 shapes with host vertices; psi_n sends S to the
/// clique {psi_{n-1}(T) : T in C_n(S)} of k^{n-1} G. Needs a host without rim.
inline PsiChain psi_chain(const Graph& host, std::uint32_t n, std::size_t vertex_budget = kDefaultVertexBudget) {
  PsiChain out;
  out.level = n;
  auto iter = iterate_clique_graph(host, n, vertex_budget);
  if (iter.budget_hit) {
    out.failure = "clique iteration hit the vertex budget";
    return out;
  }
  std::vector<GeoCliqueGraph> g;
  for (std::uint32_t i = 0; i <= n; ++i) g.push_back(geo_clique_graph(host, i, {false}));
  std::vector<VertexId> psi(g[0].shapes.size());
  for (VertexId s = 0; s < psi.size(); ++s) psi[s] = g[0].shapes[s].vertices[0];
  for (std::uint32_t i = 1; i <= n; ++i) {
    ExplicitCMap c = explicit_C(g[i], g[i - 1], host);
    SetIndex index(iter.levels[i - 1].membership);
    std::vector<VertexId> next(g[i].shapes.size(), kUnreachable);
    for (VertexId s = 0; s < next.size(); ++s) {
      VertexSet clique;
      for (VertexId t : c.images[s].image) clique.push_back(psi[t]);
      std::sort(clique.begin(), clique.end());
      auto k = index.find(clique);
      if (!k) {
        out.failure = "level " + std::to_string(i) + ": shape " + std::to_string(s) + " maps to a non-clique";
        return out;
      }
      next[s] = *k;
    }
    psi = std::move(next);
  }
  out.map = psi;
  const Graph& target = n == 0 ? host : iter.levels[n - 1].graph;
  out.isomorphism = is_isomorphism(g[n].graph, target, psi);
  if (!out.isomorphism) out.failure = "assembled map is not an isomorphism";
  return out;
}

}  // namespace cliquedyn
