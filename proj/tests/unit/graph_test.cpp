#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "dunbar/baselines.hpp"
#include "dunbar/generators.hpp"
#include "dunbar/graph.hpp"
#include "support/oracles.hpp"

namespace dunbar {
namespace {

TEST(LoadUndirected, TriangleFile) {
  const auto path = oracle::write_temp("triangle.txt", "0 1\n1 2\n2 0\n");
  const Graph g = load_undirected(path);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(LoadUndirected, SoleSelfLoopIsAnEmptyGraph) {
  const auto path = oracle::write_temp("selfloop.txt", "0 0\n");
  LoadStats stats;
  EXPECT_THROW(load_undirected(path, &stats), LoadError);
  EXPECT_EQ(stats.self_loops, 1u);
}

TEST(LoadUndirected, CommentsDuplicatesAndSelfLoopsAreAccounted) {
  const auto path = oracle::write_temp("messy.txt",
                                       "# Directed graph (each unordered pair of nodes is saved once)\n"
                                       "# FromNodeId\tToNodeId\n"
                                       "10\t20\n20 10\n  30 30\n\n20 40\r\n");
  LoadStats stats;
  const Graph g = load_undirected(path, &stats);
  EXPECT_EQ(stats.comment_lines, 2u);
  EXPECT_EQ(stats.self_loops, 1u);
  EXPECT_EQ(stats.duplicate_edges, 1u);
  EXPECT_EQ(g.node_count(), 4u);  // 30 survives as an isolated node
  EXPECT_EQ(g.edge_count(), 2u);
  ASSERT_TRUE(g.dense_id(30).has_value());
  EXPECT_EQ(g.degree(*g.dense_id(30)), 0u);
  EXPECT_TRUE(g.has_edge(*g.dense_id(10), *g.dense_id(20)));
  EXPECT_FALSE(g.has_edge(*g.dense_id(10), *g.dense_id(40)));
}

TEST(LoadUndirected, MalformedLineReportsLineNumber) {
  const auto path = oracle::write_temp("bad.txt", "0 1\n# ok\n1 x\n");
  try {
    load_undirected(path);
    FAIL() << "expected LoadError";
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos);
  }
  EXPECT_THROW(load_undirected(oracle::write_temp("extra.txt", "0 1 2\n")), LoadError);
  EXPECT_THROW(load_undirected(oracle::write_temp("single.txt", "0\n")), LoadError);
}

TEST(LoadUndirected, MissingFile) {
  EXPECT_THROW(load_undirected("/nonexistent/graph.txt"), LoadError);
}

TEST(LoadUndirected, LabelsDensifyInAscendingOrderAndRoundTrip) {
  const auto path = oracle::write_temp("labels.txt", "900 7\n7 -3\n123456789012 900\n");
  const Graph g = load_undirected(path);
  ASSERT_EQ(g.node_count(), 4u);
  const std::vector<Label> expected{-3, 7, 900, 123456789012};
  for (NodeId v = 0; v < 4; ++v) {
    EXPECT_EQ(g.label(v), expected[v]);
    EXPECT_EQ(g.dense_id(g.label(v)), v);
  }
  EXPECT_FALSE(g.dense_id(8).has_value());
}

TEST(Graph, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen::erdos_renyi(30, 0.2, seed);
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      auto nb = g.neighbors(v);
      degree_sum += nb.size();
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_TRUE(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
      for (NodeId u : nb) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(g.has_edge(u, v));
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(Graph, FromEdgesDropsLoopsAndParallelEdges) {
  const std::vector<Edge> edges{{0, 1}, {1, 0}, {2, 2}, {1, 2}};
  const Graph g = Graph::from_edges(3, edges);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(Graph::from_edges(2, std::vector<Edge>{{0, 5}}), InvalidArgument);
}

DirectedEdgeList arcs(std::initializer_list<std::pair<Label, Label>> list) { return {{list.begin(), list.end()}}; }

TEST(Mutualize, OneWayArcsAndIsolatesDisappear) {
  MutualizeStats stats;
  const Graph g = mutualize(arcs({{1, 2}, {2, 1}, {1, 3}}), &stats);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_FALSE(g.dense_id(3).has_value());
  EXPECT_EQ(stats.removed_nodes, 1u);
}

TEST(Mutualize, Path) {
  const Graph g = mutualize(arcs({{1, 2}, {2, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(*g.dense_id(1), *g.dense_id(2)));
  EXPECT_TRUE(g.has_edge(*g.dense_id(2), *g.dense_id(3)));
  EXPECT_FALSE(g.has_edge(*g.dense_id(1), *g.dense_id(3)));
}

TEST(Mutualize, FullyMutualFourCycleKeepsEverything) {
  const Graph g = mutualize(arcs({{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}, {0, 1}}));
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  // every retained edge has both arcs in the input
  for (auto [u, v] : g.edges()) {
    const Label a = g.label(u), b = g.label(v);
    EXPECT_TRUE((a + 1) % 4 == b || (b + 1) % 4 == a);
  }
}

TEST(Mutualize, EmptyResultIsAllowed) {
  MutualizeStats stats;
  const Graph g = mutualize(arcs({{0, 1}, {1, 2}, {5, 5}}), &stats);
  EXPECT_EQ(g.node_count(), 0u);
  EXPECT_EQ(stats.self_loops, 1u);
  EXPECT_EQ(stats.removed_nodes, 4u);
}

TEST(Mutualize, IdempotentOnItsOwnOutput) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Label> node(0, 25);
  for (int trial = 0; trial < 10; ++trial) {
    DirectedEdgeList input;
    for (int i = 0; i < 200; ++i) input.arcs.emplace_back(node(rng), node(rng));
    const Graph once = mutualize(input);
    DirectedEdgeList symmetric;
    for (auto [u, v] : once.edges()) {
      symmetric.arcs.emplace_back(once.label(u), once.label(v));
      symmetric.arcs.emplace_back(once.label(v), once.label(u));
    }
    const Graph twice = mutualize(symmetric);
    ASSERT_EQ(twice.node_count(), once.node_count());
    EXPECT_EQ(std::vector<Label>(twice.labels().begin(), twice.labels().end()),
              std::vector<Label>(once.labels().begin(), once.labels().end()));
    EXPECT_EQ(twice.edges(), once.edges());
  }
}

TEST(DegreeDistribution, Star) {
  const auto d = degree_distribution(gen::star(3));
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{1, 3}, {2, 1}, {3, 1}, {4, 1}};
  EXPECT_EQ(d, expected);
}

TEST(DegreeDistribution, Triangle) {
  const auto d = degree_distribution(gen::complete(3));
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{1, 2}, {2, 2}, {3, 2}};
  EXPECT_EQ(d, expected);
}

TEST(DegreeDistribution, MonotoneOnPowerLawGraph) {
  const Graph g = gen::powerlaw_cluster(2000, 3, 0.3, 11);
  const auto d = degree_distribution(g);
  ASSERT_EQ(d.size(), g.node_count());
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(d[i].first, i + 1);
    if (i) EXPECT_LE(d[i].second, d[i - 1].second);
  }
}

std::filesystem::path write_bad_dblp_cover() {
  // 999999 is not a DBLP author id
  return oracle::write_temp("dblp-bad.cmty", "0 999999\n");
}

std::filesystem::path dblp_file(const char* name) {
  const char* env = std::getenv("DUNBAR_DATA_DIR");
  return std::filesystem::path(env && *env ? env : DUNBAR_DEFAULT_DATA_DIR) / name;
}

TEST(Dblp, DegreeDistributionAndGroundTruth) {
  const auto graph_file = dblp_file("com-dblp.ungraph.txt");
  const auto top_file = dblp_file("com-dblp.top5000.cmty.txt");
  if (!std::filesystem::exists(graph_file) || !std::filesystem::exists(top_file)) {
    GTEST_SKIP() << "DBLP files not found under " << graph_file.parent_path();
  }
  const Graph g = load_undirected(graph_file);
  const auto d = degree_distribution(g);
  ASSERT_EQ(d.size(), g.node_count());
  EXPECT_EQ(d.size(), 317080u);
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_LE(d[i].second, d[i - 1].second);
  EXPECT_EQ(import_cover(top_file, g).size(), 5000u);
  try {
    import_cover(write_bad_dblp_cover(), g);
    FAIL() << "expected LoadError";
  } catch (const LoadError& e) {
    EXPECT_NE(std::string(e.what()).find("999999"), std::string::npos);
  }
}

}  // namespace
}  // namespace dunbar
