#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "distdom/graph.hpp"
#include "distdom/profile.hpp"
#include "test_support.hpp"

namespace distdom {
namespace {

using testing::complete_bipartite;
using testing::cycle;
using testing::path;
using testing::star;

TEST(ParseEdgeList, PathOfThree) {
  auto g = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ParseEdgeList, DuplicateEdgesCollapse) {
  auto g = parse_edge_list("0 1\n0 1\n1 0\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeList, SelfLoopIsRejectedWithLineNumber) {
  try {
    parse_edge_list("# header\n0 1\n0 0\n");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseEdgeList, BadTokens) {
  EXPECT_THROW(parse_edge_list("0 -1"), parse_error);
  EXPECT_THROW(parse_edge_list("0 x"), parse_error);
  EXPECT_THROW(parse_edge_list("0 1 2"), parse_error);
  EXPECT_THROW(parse_edge_list("0"), parse_error);
  EXPECT_THROW(parse_edge_list("n 2\n0 5"), parse_error);
}

TEST(ParseEdgeList, HeaderCommentsAndBlankLines) {
  auto g = parse_edge_list("# a comment\n\nn 6\n  0 1\r\n\n# more\n2 3\n");
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(5), 0u);
  EXPECT_EQ(parse_edge_list("").vertex_count(), 0u);
}

TEST(ParseEdgeList, RoundTripsThroughWriter) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = testing::random_graph(15, 0.2, seed);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
}

TEST(Graph, RejectsInvalidEdges) {
  EXPECT_THROW(graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(graph::from_edges(2, {{1, 1}}), std::invalid_argument);
}

TEST(TwoColor, EvenCycle) {
  auto b = two_color(cycle(12));
  EXPECT_EQ(b.v1_count, 6u);
  EXPECT_EQ(b.v2_count, 6u);
  EXPECT_EQ(b.side[0], 1);
}

TEST(TwoColor, OddCycleNamesAVertex) {
  try {
    two_color(cycle(5));
    FAIL() << "expected not_bipartite_error";
  } catch (const not_bipartite_error& e) {
    EXPECT_LT(e.vertex(), 5u);
  }
}

TEST(TwoColor, CompleteBipartite) {
  auto b = two_color(complete_bipartite(3, 4));
  EXPECT_EQ(b.v1_count, 3u);
  EXPECT_EQ(b.v2_count, 4u);
}

TEST(TwoColor, EachComponentStartsOnSideOne) {
  // Components {0,1}, {2,3,4}: 3 is the middle of the second path, but 2 is
  // its lowest index.
  auto g = testing::make_graph(5, {{0, 1}, {2, 3}, {3, 4}});
  auto b = two_color(g);
  EXPECT_EQ(b.side, (std::vector<std::uint8_t>{1, 2, 1, 2, 1}));
}

TEST(TwoColor, NoMonochromaticEdgeOnRandomBipartiteGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    // Random graph restricted to edges between even and odd vertices.
    auto raw = testing::random_graph(20, 0.25, seed);
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (auto [u, v] : raw.edges())
      if ((u + v) % 2 == 1) e.emplace_back(u, v);
    auto g = graph::from_edges(20, e);
    auto b = two_color(g);
    for (auto [u, v] : g.edges()) EXPECT_NE(b.side[u], b.side[v]);
  }
}

TEST(BfsLayers, CycleOfTwelve) {
  auto l = bfs_layers(cycle(12), 4, 3);
  EXPECT_EQ(l.sizes(), (std::vector<std::size_t>{1, 2, 2, 2}));
  EXPECT_FALSE(l.exhausted);
  EXPECT_EQ(l.layers[0], std::vector<vertex_t>{4});
}

TEST(BfsLayers, StarFromCenterAndLeaf) {
  auto s = star(5);
  auto c = bfs_layers(s, 0, 2);
  EXPECT_EQ(c.sizes(), (std::vector<std::size_t>{1, 5, 0}));
  EXPECT_TRUE(c.exhausted);
  auto l = bfs_layers(s, 3, 2);
  EXPECT_EQ(l.sizes(), (std::vector<std::size_t>{1, 1, 4}));
  EXPECT_TRUE(l.exhausted);
}

TEST(BfsLayers, LayersPartitionNeighborhoodAndMatchDistances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = testing::random_graph(18, 0.15, seed);
    auto d = testing::floyd_warshall(g);
    for (vertex_t v = 0; v < g.vertex_count(); v += 3) {
      for (std::size_t k : {1u, 2u, 4u}) {
        auto l = bfs_layers(g, v, k);
        std::set<vertex_t> seen;
        for (std::size_t layer = 0; layer <= k; ++layer) {
          for (auto u : l.layers[layer]) {
            EXPECT_EQ(d[v][u], layer);
            EXPECT_TRUE(seen.insert(u).second);
          }
        }
        std::size_t within = 0;
        bool beyond = false;
        for (vertex_t u = 0; u < g.vertex_count(); ++u) {
          if (d[v][u] <= k) ++within;
          else if (d[v][u] < testing::inf) beyond = true;
        }
        EXPECT_EQ(seen.size(), within);
        EXPECT_EQ(l.exhausted, !beyond);
      }
    }
  }
}

TEST(BfsLayers, ParityOfLayersOnBipartiteGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = testing::random_connected(16, 0.1, seed);
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (auto [u, v] : g.edges())
      if ((u + v) % 2 == 1) e.emplace_back(u, v);
    auto h = graph::from_edges(16, e);
    auto b = two_color(h);
    for (vertex_t v = 0; v < 16; ++v) {
      auto l = bfs_layers(h, v, 6);
      for (std::size_t layer = 0; layer < l.layers.size(); ++layer)
        for (auto u : l.layers[layer])
          EXPECT_EQ(b.side[u] == b.side[v], layer % 2 == 0);
    }
  }
}

TEST(KNeighborhoodSplit, Examples) {
  auto c = cycle(12);
  auto bc = two_color(c);
  EXPECT_EQ(k_neighborhood_split(c, bc, 0, 3), (neighborhood_split{2, 4, false}));

  auto k33 = complete_bipartite(3, 3);
  auto b = two_color(k33);
  EXPECT_EQ(k_neighborhood_split(k33, b, 0, 1), (neighborhood_split{0, 3, false}));
  EXPECT_EQ(k_neighborhood_split(k33, b, 0, 2), (neighborhood_split{2, 3, true}));
}

TEST(PowerGraph, Examples) {
  auto sq = power_graph(path(3), 2);
  EXPECT_EQ(sq.edge_count(), 3u);

  auto c6 = power_graph(cycle(6), 2);
  for (vertex_t v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 4u);

  auto g = testing::random_graph(12, 0.3, 7);
  EXPECT_EQ(power_graph(g, 1), g);
  EXPECT_THROW(power_graph(g, 0), precondition_error);
}

TEST(PowerGraph, AdjacencyMatchesBfsNeighborhoods) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = testing::random_graph(16, 0.15, seed);
    for (std::size_t k = 1; k <= 4; ++k) {
      auto pk = power_graph(g, k);
      for (vertex_t v = 0; v < g.vertex_count(); ++v) {
        auto l = bfs_layers(g, v, k);
        std::vector<vertex_t> expected;
        for (std::size_t layer = 1; layer <= k; ++layer)
          expected.insert(expected.end(), l.layers[layer].begin(), l.layers[layer].end());
        std::sort(expected.begin(), expected.end());
        auto got = pk.neighbors(v);
        EXPECT_EQ(std::vector<vertex_t>(got.begin(), got.end()), expected);
      }
    }
  }
}

TEST(IsKDominating, Examples) {
  auto c = cycle(12);
  EXPECT_TRUE(is_k_dominating(c, vertex_set::full(12), 1));
  EXPECT_FALSE(is_k_dominating(c, vertex_set(12, {0}), 2));
  EXPECT_TRUE(is_k_dominating(c, vertex_set(12, {0, 4, 8}), 2));
}

TEST(IsKDominating, AgreesWithPowerGraphAtRadiusOne) {
  rng r(99);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = testing::random_graph(14, 0.2, seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      auto pk = power_graph(g, k);
      for (int trial = 0; trial < 10; ++trial) {
        vertex_set s(14);
        for (vertex_t v = 0; v < 14; ++v)
          if (unit_double(r) < 0.25) s.insert(v);
        EXPECT_EQ(is_k_dominating(g, s, k), is_k_dominating(pk, s, 1));
      }
    }
  }
}

TEST(Profile, Examples) {
  auto c = cycle(12);
  EXPECT_EQ(profile(c, two_color(c), 5), (bipartite_profile{6, 6, 2, 2, 5}));
  auto k34 = complete_bipartite(3, 4);
  EXPECT_EQ(profile(k34, two_color(k34), 2), (bipartite_profile{3, 4, 4, 3, 2}));
  auto s = star(5);
  EXPECT_EQ(profile(s, two_color(s), 1), (bipartite_profile{1, 5, 5, 1, 1}));
}

TEST(Profile, IsolatedVertexIsAnError) {
  auto g = testing::make_graph(3, {{0, 1}});
  EXPECT_THROW(profile(g, two_color(g), 1), precondition_error);
}

TEST(Connectivity, DiameterRadiusAndDisconnection) {
  EXPECT_EQ(diameter(cycle(12)), 6u);
  EXPECT_EQ(radius(path(7)), 3u);
  EXPECT_FALSE(is_connected(testing::make_graph(3, {{0, 1}})));
  EXPECT_THROW(eccentricity(testing::make_graph(3, {{0, 1}}), 0), disconnected_error);
}

}  // namespace
}  // namespace distdom
