#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/covering.hpp"
#include "cliquedyn/hexgeo.hpp"
#include "cliquedyn/isomorphism.hpp"
#include "oracles.hpp"

using namespace cliquedyn;

TEST(MaxCliques, Examples) {
  EXPECT_EQ(max_cliques(complete_graph(3)), (std::vector<Clique>{{0, 1, 2}}));
  auto oct = max_cliques(octahedron());
  EXPECT_EQ(oct.size(), 8u);
  for (const auto& q : oct) EXPECT_EQ(q.size(), 3u);
  auto c5 = max_cliques(cycle_graph(5));
  EXPECT_EQ(c5.size(), 5u);
  for (const auto& q : c5) EXPECT_EQ(q.size(), 2u);
  EXPECT_EQ(max_cliques(build_graph(1, {})), (std::vector<Clique>{{0}}));
}

TEST(MaxCliques, MatchesSubsetOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 5 + rng() % 20;
    double p = 0.2 + 0.6 * (rng() % 100) / 100.0;
    Graph g = oracle::random_graph(n, p, rng);
    auto got = max_cliques(g);
    EXPECT_EQ(got, oracle::max_cliques(g)) << "graph " << i;
    for (const auto& q : got) {
      EXPECT_TRUE(std::is_sorted(q.begin(), q.end()));
      EXPECT_TRUE(oracle::complete(g, q) && oracle::maximal(g, q));
    }
  }
}

TEST(MaxCliques, EveryCliqueOfAMidSizeGraphIsMaximal) {
  std::mt19937_64 rng(5);
  Graph g = oracle::random_graph(200, 0.05, rng);
  for (const auto& q : max_cliques(g)) EXPECT_TRUE(oracle::complete(g, q) && oracle::maximal(g, q));
}

TEST(MaxCliques, DeterministicAcrossWorkerCounts) {
  std::mt19937_64 rng(11);
  Graph g = oracle::random_graph(120, 0.15, rng);
  setenv("CLIQUE_DYN_THREADS", "1", 1);
  auto one = enumerate_max_cliques(g).cliques;
  setenv("CLIQUE_DYN_THREADS", "4", 1);
  auto four = enumerate_max_cliques(g).cliques;
  unsetenv("CLIQUE_DYN_THREADS");
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, max_cliques(g));
}

TEST(MaxCliques, LimitFlagsTheEnumeration) {
  auto e = enumerate_max_cliques(torus_graph({}).graph, 10);
  EXPECT_TRUE(e.budget_hit);
  EXPECT_FALSE(enumerate_max_cliques(torus_graph({}).graph).budget_hit);
}

TEST(CliqueGraph, Examples) {
  EXPECT_EQ(clique_graph(complete_graph(3)).graph.vertex_count(), 1u);
  auto kc5 = clique_graph(cycle_graph(5));
  EXPECT_TRUE(are_isomorphic(kc5.graph, cycle_graph(5)).has_value());
  auto ko = clique_graph(octahedron());
  ASSERT_EQ(ko.graph.vertex_count(), 8u);
  for (VertexId a = 0; a < 8; ++a) {
    std::size_t missing = 0;
    for (VertexId b = 0; b < 8; ++b) {
      if (a == b) continue;
      VertexSet meet;
      std::set_intersection(ko.membership[a].begin(), ko.membership[a].end(), ko.membership[b].begin(),
                            ko.membership[b].end(), std::back_inserter(meet));
      EXPECT_EQ(ko.graph.adjacent(a, b), !meet.empty());
      if (meet.empty()) {
        ++missing;
        // The antipodal face is the vertex complement.
        VertexSet both = ko.membership[a];
        both.insert(both.end(), ko.membership[b].begin(), ko.membership[b].end());
        std::sort(both.begin(), both.end());
        EXPECT_EQ(both, (VertexSet{0, 1, 2, 3, 4, 5}));
      }
    }
    EXPECT_EQ(missing, 1u);
  }
}

TEST(CliqueGraph, ConnectedHostsGiveConnectedCliqueGraphs) {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int i = 0; i < 60 && tested < 20; ++i) {
    Graph g = oracle::random_graph(15, 0.3, rng);
    if (!is_connected(g)) continue;
    ++tested;
    EXPECT_TRUE(is_connected(clique_graph(g).graph));
  }
  EXPECT_GT(tested, 5);
  for (const Graph& g : {octahedron(), icosahedron(), torus_graph({}).graph})
    EXPECT_TRUE(is_connected(clique_graph(g).graph));
}

TEST(IterateCliqueGraph, Examples) {
  auto k3 = iterate_clique_graph(complete_graph(3), 2);
  ASSERT_EQ(k3.levels.size(), 2u);
  EXPECT_EQ(k3.levels[0].graph.vertex_count(), 1u);
  EXPECT_EQ(k3.levels[1].graph.vertex_count(), 1u);
  EXPECT_FALSE(k3.budget_hit);
  auto t = iterate_clique_graph(torus_graph({}).graph, 2);
  ASSERT_EQ(t.levels.size(), 2u);
  EXPECT_EQ(t.levels[0].graph.vertex_count(), 50u);
  EXPECT_EQ(t.levels[0].graph.vertex_count(), triangles(torus_graph({}).graph).size());
  EXPECT_TRUE(iterate_clique_graph(octahedron(), 0).levels.empty());
}

TEST(IterateCliqueGraph, BudgetKeepsCompletedLevels) {
  auto r = iterate_clique_graph(torus_graph({}).graph, 3, 60);
  EXPECT_TRUE(r.budget_hit);
  ASSERT_EQ(r.levels.size(), 1u);
  EXPECT_EQ(r.levels[0].graph.vertex_count(), 50u);
}

TEST(IterateCliqueGraph, TorusCliqueCountIsTwiceTheVertexCount) {
  for (TorusSpec s : {TorusSpec{{4, 0}, {0, 4}}, TorusSpec{{6, 0}, {0, 6}}, TorusSpec{{4, 2}, {-2, 6}}}) {
    Torus t = torus_graph(s);
    EXPECT_EQ(clique_graph(t.graph).graph.vertex_count(), 2 * t.graph.vertex_count());
  }
}

TEST(InducedCliqueAction, IdentityTranslationAndComposition) {
  Torus t = torus_graph({});
  auto kg = clique_graph(t.graph);
  auto id = induced_clique_action(GroupAction(25, {identity_permutation(25)}), kg);
  EXPECT_EQ(id.generators()[0], identity_permutation(50));

  auto tr = induced_clique_action(GroupAction(25, {t.translation({1, 0})}), kg);
  const Permutation& p = tr.generators()[0];
  EXPECT_TRUE(is_automorphism(kg.graph, p));
  for (VertexId q = 0; q < 50; ++q) EXPECT_NE(p[q], q);

  // Octahedron automorphisms: a rotation and a reflection.
  Graph oct = octahedron();
  auto ko = clique_graph(oct);
  Permutation rot{1, 2, 0, 4, 5, 3};
  Permutation flip{3, 1, 2, 0, 4, 5};
  ASSERT_TRUE(is_automorphism(oct, rot) && is_automorphism(oct, flip));
  auto ind = induced_clique_action(GroupAction(6, {rot, flip, compose(rot, flip)}), ko);
  EXPECT_EQ(ind.generators()[2], compose(ind.generators()[0], ind.generators()[1]));
  for (const auto& g : ind.generators()) EXPECT_TRUE(is_automorphism(ko.graph, g));
}

TEST(InducedCliqueAction, RejectsNonAutomorphisms) {
  Graph g = cycle_graph(5);
  Permutation bad{0, 2, 1, 3, 4};
  EXPECT_THROW(induced_clique_action(GroupAction(5, {bad}), clique_graph(g)), ActionError);
}

TEST(MapPk, IdentityCover) {
  Graph oct = octahedron();
  auto ko = clique_graph(oct);
  auto pk = map_pk(identity_cover(oct), ko, ko);
  EXPECT_EQ(pk.vertex_map, identity_permutation(8));
  EXPECT_TRUE(is_covering_map(pk).ok);
}

TEST(MapPk, WindowToTorusIsACoverOnTheInterior) {
  Torus t = torus_graph({});
  Graph w = hex_window({{0, 0, 0}, 7});
  auto p = torus_projection(w, t);
  auto kw = clique_graph(w);
  auto kt = clique_graph(t.graph);
  auto pk = map_pk(p, kw, kt);
  auto rep = is_covering_map(pk);
  EXPECT_TRUE(rep.ok) << rep.reason;
  EXPECT_TRUE(rep.restricted);
  EXPECT_GT(rep.checked, 0u);
  ASSERT_TRUE(pk.domain.has_value());
  for (VertexId q : *pk.domain) EXPECT_EQ(pk.source.degree(q), pk.target.degree(pk.vertex_map[q]));
}

TEST(MapPk, CompositionCommutes) {
  Torus big = torus_graph({{10, 0}, {0, 10}});
  Torus small = torus_graph({});
  auto q = torus_covering(big, small).map;
  Graph w = hex_window({{0, 0, 0}, 6});
  auto p = torus_projection(w, big);
  auto kw = clique_graph(w), kb = clique_graph(big.graph), ks = clique_graph(small.graph);
  auto qp_k = map_pk(compose(q, p), kw, ks);
  auto qk = map_pk(q, kb, ks);
  auto pk = map_pk(p, kw, kb);
  for (VertexId c = 0; c < kw.graph.vertex_count(); ++c) EXPECT_EQ(qp_k.vertex_map[c], qk.vertex_map[pk.vertex_map[c]]);
}
