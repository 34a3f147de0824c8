#include <gtest/gtest.h>

#include "cliquedyn/covering.hpp"
#include "cliquedyn/hexgeo.hpp"
#include "cliquedyn/isomorphism.hpp"

using namespace cliquedyn;

TEST(HexCoordinates, DirectionSetIsTheSixUnitDifferences) {
  std::vector<HexCoord> d(kDirections.begin(), kDirections.end());
  std::sort(d.begin(), d.end());
  std::vector<HexCoord> expect{{1, -1, 0}, {1, 0, -1}, {-1, 1, 0}, {0, 1, -1}, {-1, 0, 1}, {0, -1, 1}};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(d, expect);
  for (const auto& x : kDirections) EXPECT_EQ(x.height(), 0);
}

TEST(DeltaGraph, SizesAndBoundary) {
  EXPECT_EQ(delta_graph(0).vertex_count(), 1u);
  EXPECT_EQ(delta_graph(0).graph.edge_count(), 0u);
  EXPECT_EQ(delta_graph(4).vertex_count(), 15u);
  auto b1 = boundary(delta_graph(1));
  EXPECT_EQ(b1.vertices.size(), 3u);
  EXPECT_EQ(b1.edges.size(), 3u);
  auto b4 = boundary(delta_graph(4));
  EXPECT_EQ(b4.vertices.size(), 12u);
  EXPECT_EQ(b4.edges.size(), 12u);
  EXPECT_EQ(boundary(delta_graph(0)).vertices, (VertexSet{0}));
}

TEST(DeltaGraph, TriangleCountAndBoundaryCharacterisations) {
  for (std::uint32_t m = 0; m <= 10; ++m) {
    auto t = delta_graph(m);
    EXPECT_EQ(t.vertex_count(), (m + 1) * (m + 2) / 2);
    EXPECT_EQ(triangles(t.graph).size(), m * m);
    if (m == 0) continue;
    EXPECT_EQ(boundary(t).vertices.size(), 3 * m);
    for (VertexId i = 0; i < t.vertex_count(); ++i) EXPECT_EQ(t.graph.degree(i) < 6, t.on_boundary(i)) << m << " " << i;
  }
}

TEST(DeltaGraph, InteriorOfDelta6IsDelta3) {
  auto t = delta_graph(6);
  VertexSet inner;
  for (VertexId i = 0; i < t.vertex_count(); ++i)
    if (!t.on_boundary(i)) inner.push_back(i);
  auto sub = induced_subgraph(t.graph, inner);
  EXPECT_TRUE(are_isomorphic(sub.graph, delta_graph(3).graph).has_value());
}

TEST(Erode, Examples) {
  auto e = erode(delta_graph(6), ErodeMode::closed_nbhd);
  EXPECT_EQ(e.side, 0u);
  EXPECT_EQ(e.coords.front(), (HexCoord{2, 2, 2}));
  auto b = erode(delta_graph(9), ErodeMode::boundary);
  EXPECT_EQ(b.side, 6u);
  EXPECT_EQ(b.offset, (HexCoord{1, 1, 1}));
  EXPECT_THROW(erode(delta_graph(5), ErodeMode::closed_nbhd), HexError);
  EXPECT_THROW(erode(delta_graph(2), ErodeMode::boundary), HexError);
}

TEST(Erode, ClosedNeighbourhoodErosionMatchesGraphComputation) {
  for (std::uint32_t m = 6; m <= 10; ++m) {
    auto t = delta_graph(m);
    VertexSet bnd = boundary(t).vertices;
    VertexSet near = closed_neighbourhood(t.graph, bnd);
    std::vector<HexCoord> rest;
    for (VertexId i = 0; i < t.vertex_count(); ++i)
      if (!std::binary_search(near.begin(), near.end(), i)) rest.push_back(t.coords[i]);
    auto e = erode(t, ErodeMode::closed_nbhd);
    std::vector<HexCoord> got = e.coords;
    std::sort(rest.begin(), rest.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(rest, got) << m;
  }
}

TEST(TriangleInclusion, IdentityUnitShiftsAndComposition) {
  auto id = triangle_inclusion(3, {0, 0, 0});
  for (const auto& c : delta_graph(3).coords) EXPECT_EQ(id(c), c);
  for (std::uint32_t m = 1; m <= 6; ++m)
    for (const auto& e : kUnitVectors) {
      auto inc = triangle_inclusion(m - 1, e);
      EXPECT_EQ(inc.target_height(), static_cast<std::int64_t>(m));
      for (const auto& c : delta_graph(m - 1).coords) {
        HexCoord x = inc(c);
        EXPECT_TRUE(x[0] >= 0 && x[1] >= 0 && x[2] >= 0 && x.height() == m);
      }
    }
  auto a = triangle_inclusion(2, {1, 0, 0});
  auto b = triangle_inclusion(3, {0, 2, -1});
  auto ab = compose(b, a);
  for (const auto& c : delta_graph(2).coords) EXPECT_EQ(ab(c), b(a(c)));
}

TEST(Symmetries, SixAutomorphismsPreservingBoundaryAndErosion) {
  auto s = symmetries();
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (CoordPermutation{{0, 1, 2}}));
  int reflections = 0;
  for (const auto& p : s) reflections += p.is_reflection();
  EXPECT_EQ(reflections, 3);
  CoordPermutation swap12{{1, 0, 2}};
  EXPECT_EQ(swap12(HexCoord{1, 0, 0}), (HexCoord{0, 1, 0}));
  EXPECT_EQ(swap12(HexCoord{0, 0, 1}), (HexCoord{0, 0, 1}));
  for (std::uint32_t m = 0; m <= 9; ++m) {
    auto t = delta_graph(m);
    for (const auto& p : s) {
      auto perm = symmetry_permutation(m, p);
      EXPECT_TRUE(is_automorphism(t.graph, perm));
      for (VertexId i = 0; i < t.vertex_count(); ++i) EXPECT_EQ(t.on_boundary(i), t.on_boundary(perm[i]));
      if (m >= 3) {
        auto e = erode(t, ErodeMode::boundary);
        std::vector<HexCoord> moved, kept = e.coords;
        for (const auto& c : e.coords) moved.push_back(p(c));
        std::sort(moved.begin(), moved.end());
        std::sort(kept.begin(), kept.end());
        EXPECT_EQ(moved, kept);
      }
    }
  }
}

TEST(HexWindow, VertexCounts) {
  EXPECT_EQ(hex_window({{0, 0, 0}, 0}).vertex_count(), 1u);
  Graph w1 = hex_window({{0, 0, 0}, 1});
  EXPECT_EQ(w1.vertex_count(), 7u);
  EXPECT_EQ(w1.max_degree(), 6u);
  EXPECT_EQ(hex_window({{0, 0, 0}, 2}).vertex_count(), 19u);
  for (std::uint32_t r = 0; r <= 8; ++r) EXPECT_EQ(hex_window({{3, -1, -2}, r}).vertex_count(), 1 + 3 * r * (r + 1));
}

TEST(Torus, Examples) {
  Torus t = torus_graph({{5, 0}, {0, 5}});
  EXPECT_EQ(t.graph.vertex_count(), 25u);
  EXPECT_EQ(t.graph.edge_count(), 75u);
  EXPECT_EQ(triangles(t.graph).size(), 50u);
  EXPECT_EQ(euler_characteristic(t.graph), 0);
  Torus four = torus_graph({{4, 0}, {0, 4}});
  EXPECT_EQ(four.graph.vertex_count(), 16u);
  EXPECT_TRUE(is_locally_cyclic(four.graph).ok);
  EXPECT_THROW(torus_graph({{2, 0}, {0, 2}}), HexError);
  EXPECT_THROW(torus_graph({{2, 0}, {4, 0}}), HexError);
}

TEST(Torus, SkewedBasisAndIndex) {
  Torus t = torus_graph({{4, 2}, {-2, 6}});
  EXPECT_EQ(t.graph.vertex_count(), 28u);
  EXPECT_TRUE(is_locally_cyclic(t.graph).ok);
  EXPECT_TRUE(every_edge_in_two_triangles(t.graph));
  for (VertexId v = 0; v < t.graph.vertex_count(); ++v) EXPECT_EQ(t.graph.degree(v), 6u);
}

TEST(Torus, TranslationsAreAutomorphisms) {
  Torus t = torus_graph({{5, 0}, {0, 5}});
  for (Axial a : {Axial{1, 0}, Axial{0, 1}, Axial{2, -3}}) EXPECT_TRUE(is_automorphism(t.graph, t.translation(a)));
}

TEST(Torus, WindowProjectionIsACoverOnTheInterior) {
  Torus t = torus_graph({{5, 0}, {0, 5}});
  auto p = torus_projection(hex_window({{0, 0, 0}, 6}), t);
  auto rep = is_covering_map(p);
  EXPECT_TRUE(rep.ok) << rep.reason;
  EXPECT_TRUE(rep.restricted);
  EXPECT_EQ(rep.checked, hex_window({{0, 0, 0}, 5}).vertex_count());
}

TEST(ConeLattice, Examples) {
  Graph c71 = cone_lattice(7, 1);
  EXPECT_EQ(c71.vertex_count(), 8u);
  EXPECT_EQ(c71.degree(0), 7u);
  for (std::uint32_t r = 1; r <= 5; ++r) EXPECT_TRUE(are_isomorphic(cone_lattice(6, r), hex_window({{0, 0, 0}, r})).has_value());
  Graph c72 = cone_lattice(7, 2);
  EXPECT_EQ(c72.vertex_count(), 1u + 7u * 3u);
  for (VertexId v : c72.neighbours(0)) {
    EXPECT_EQ(c72.degree(v), 6u);
    EXPECT_TRUE(link_cycle(c72, v).has_value());
  }
  EXPECT_TRUE(link_cycle(c72, 0).has_value());
  EXPECT_THROW(cone_lattice(5, 2), HexError);
}

TEST(ConeLattice, InteriorVerticesAwayFromApexHaveDegreeSix) {
  Graph c = cone_lattice(8, 6);
  VertexSet apex{0};
  auto d = bfs_distances(c, apex);
  for (VertexId v = 1; v < c.vertex_count(); ++v)
    if (d[v] < 6) {
      EXPECT_EQ(c.degree(v), 6u) << v;
    }
  EXPECT_EQ(c.degree(0), 8u);
}
