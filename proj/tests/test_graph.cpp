#include <gtest/gtest.h>

#include <random>

#include "cliquedyn/graph.hpp"
#include "cliquedyn/hexgeo.hpp"
#include "oracles.hpp"

using namespace cliquedyn;

namespace {

Graph path3() {
  std::vector<Edge> e{{0, 1}, {1, 2}};
  return build_graph(3, e);
}

}  // namespace

TEST(BuildGraph, TriangleAndSingleVertex) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  Graph k3 = build_graph(3, e);
  EXPECT_EQ(k3.vertex_count(), 3u);
  EXPECT_EQ(k3.edge_count(), 3u);
  Graph one = build_graph(1, {});
  EXPECT_EQ(one.vertex_count(), 1u);
  EXPECT_EQ(one.edge_count(), 0u);
}

TEST(BuildGraph, OctahedronFromPairsMinusMatching) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = u + 1; v < 6; ++v)
      if (v != u + 3) e.emplace_back(u, v);
  Graph g = build_graph(6, e);
  EXPECT_EQ(g.edge_count(), 12u);
  for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 4u);
  EXPECT_EQ(g, octahedron());
}

TEST(BuildGraph, DuplicatesCollapseAndAdjacencyIsSymmetricSorted) {
  std::vector<Edge> e{{2, 0}, {0, 2}, {1, 2}, {2, 1}, {0, 1}};
  Graph g = build_graph(3, e);
  EXPECT_EQ(g.edge_count(), 3u);
  for (VertexId u = 0; u < 3; ++u) {
    auto nb = g.neighbours(u);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (VertexId v : nb) EXPECT_TRUE(g.adjacent(v, u));
  }
}

TEST(BuildGraph, RejectsBadPairsNamingThem) {
  std::vector<Edge> out_of_range{{0, 3}};
  try {
    build_graph(3, out_of_range);
    FAIL() << "expected rejection";
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,3)"), std::string::npos);
  }
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(build_graph(3, loop), GraphError);
}

TEST(Neighbourhood, Examples) {
  EXPECT_EQ(neighbourhood(octahedron(), 0, false).size(), 4u);
  EXPECT_EQ(neighbourhood(complete_graph(3), 0, true), (VertexSet{0, 1, 2}));
  EXPECT_TRUE(neighbourhood(build_graph(1, {}), 0, false).empty());
  EXPECT_THROW(neighbourhood(octahedron(), 6, false), GraphError);
}

TEST(Distance, Examples) {
  VertexSet two{2};
  EXPECT_EQ(distance(path3(), 0, two), 2u);
  VertexSet self{1};
  EXPECT_EQ(distance(octahedron(), 1, self), 0u);
  std::vector<Edge> e{{0, 1}, {2, 3}};
  Graph split = build_graph(4, e);
  VertexSet far{3};
  EXPECT_FALSE(distance(split, 0, far).has_value());
  EXPECT_FALSE(distance(split, 0, VertexSet{}).has_value());
}

TEST(Distance, TriangleInequalityOnSampledTriples) {
  Graph g = hex_window({{0, 0, 0}, 4});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.vertex_count() - 1));
  for (int i = 0; i < 200; ++i) {
    VertexId a = pick(rng), b = pick(rng), c = pick(rng);
    auto d = [&](VertexId x, VertexId y) { return *distance(g, x, VertexSet{y}); };
    EXPECT_LE(d(a, c), d(a, b) + d(b, c));
  }
}

TEST(LocallyCyclic, Examples) {
  auto oct = is_locally_cyclic(octahedron());
  EXPECT_TRUE(oct.ok);
  EXPECT_EQ(oct.min_degree, 4u);
  auto torus = is_locally_cyclic(torus_graph({}).graph);
  EXPECT_TRUE(torus.ok);
  EXPECT_EQ(torus.min_degree, 6u);
  auto k4 = is_locally_cyclic(complete_graph(4));
  EXPECT_TRUE(k4.ok);
  EXPECT_EQ(k4.min_degree, 3u);
  auto window = is_locally_cyclic(hex_window({{0, 0, 0}, 2}));
  EXPECT_FALSE(window.ok);
  ASSERT_TRUE(window.witness.has_value());
  EXPECT_FALSE(link_cycle(hex_window({{0, 0, 0}, 2}), *window.witness).has_value());
}

TEST(LocallyCyclic, AgreesWithInducedNeighbourhoodOracle) {
  for (const Graph& g : {octahedron(), icosahedron(), complete_graph(4), torus_graph({}).graph, cycle_graph(5)}) {
    bool all = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      VertexSet nb = neighbourhood(g, v, false);
      auto sub = induced_subgraph(g, nb);
      bool cyc = nb.size() >= 3 && is_connected(sub.graph) && sub.graph.min_degree() == 2 && sub.graph.max_degree() == 2;
      all = all && cyc;
    }
    EXPECT_EQ(is_locally_cyclic(g).ok, all);
  }
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(octahedron()), 2);
  EXPECT_EQ(triangles(octahedron()).size(), 8u);
  EXPECT_EQ(euler_characteristic(torus_graph({}).graph), 0);
  EXPECT_EQ(euler_characteristic(icosahedron()), 2);
  EXPECT_EQ(triangles(icosahedron()).size(), 20u);
  EXPECT_THROW(euler_characteristic(hex_window({{0, 0, 0}, 2})), GraphError);
}

TEST(SurfaceProperties, EveryEdgeInTwoTrianglesAndIncidenceCount) {
  for (const Graph& g : {octahedron(), icosahedron(), torus_graph({}).graph}) {
    EXPECT_TRUE(every_edge_in_two_triangles(g));
    std::size_t incidences = 0;
    for (const auto& [u, v] : g.edges()) incidences += common_neighbours(g, u, v).size();
    EXPECT_EQ(incidences, 3 * triangles(g).size());
  }
  EXPECT_FALSE(every_edge_in_two_triangles(hex_window({{0, 0, 0}, 2})));
}

TEST(Triangles, SortedTriplesMatchBruteForce) {
  Graph g = hex_window({{0, 0, 0}, 2});
  auto t = triangles(g);
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
  std::size_t brute = 0;
  for (VertexId a = 0; a < g.vertex_count(); ++a)
    for (VertexId b = a + 1; b < g.vertex_count(); ++b)
      for (VertexId c = b + 1; c < g.vertex_count(); ++c) brute += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
  EXPECT_EQ(t.size(), brute);
  for (const auto& tri : t) EXPECT_TRUE(tri[0] < tri[1] && tri[1] < tri[2]);
}
