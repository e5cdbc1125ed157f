#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "iasl/families.hpp"
#include "iasl/graph.hpp"
#include "test_support.hpp"

namespace iasl {
namespace {

Graph triangle() { return Graph{{"u", "v"}, {"v", "w"}, {"u", "w"}}; }

TEST(GraphTest, NamesSortedAndEdgesNormalised) {
  Graph g{{"c", "a"}, {"b", "a"}};
  ASSERT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.name(0), "a");
  EXPECT_EQ(g.name(2), "c");
  EXPECT_EQ(g.edge_name(g.edge_between("c", "a")), "a c");
  EXPECT_EQ(g.degree(g.vertex("a")), 2u);
  EXPECT_TRUE(g.adjacent(g.vertex("a"), g.vertex("b")));
  EXPECT_FALSE(g.adjacent(g.vertex("b"), g.vertex("c")));
}

TEST(GraphTest, RejectsLoopsParallelEdgesAndUnknownNames) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of([] { Graph{{"a", "a"}}; }), ErrorCode::InvalidGraph);
  EXPECT_EQ(code_of([] { Graph{{"a", "b"}, {"b", "a"}}; }), ErrorCode::InvalidGraph);
  EXPECT_EQ(code_of([] { triangle().vertex("x"); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([] { Graph{{"a", "b"}, {"b", "c"}}.edge_between("a", "c"); }), ErrorCode::UnknownEdge);
}

TEST(GraphTest, IsolatedVertices) {
  std::vector<std::pair<std::string, std::string>> edges{{"a", "b"}};
  Graph g({"z"}, edges);
  EXPECT_EQ(g.vertex_count(), 3u);
  auto iso = g.isolated_vertices();
  ASSERT_EQ(iso.size(), 1u);
  EXPECT_EQ(g.name(iso[0]), "z");
  EXPECT_FALSE(is_connected(g));
}

TEST(BipartiteTest, Examples) {
  Graph k2{{"u", "v"}};
  auto parts = is_bipartite(k2);
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->left, std::vector<std::size_t>{k2.vertex("u")});
  EXPECT_EQ(parts->right, std::vector<std::size_t>{k2.vertex("v")});
  EXPECT_FALSE(is_bipartite(triangle()));
  EXPECT_TRUE(is_bipartite(cycle_graph(4)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
}

TEST(CutEdgesTest, Examples) {
  Graph path{{"a", "b"}, {"b", "c"}};
  EXPECT_EQ(cut_edges(path).size(), 2u);
  EXPECT_TRUE(cut_edges(triangle()).empty());
  Graph pendant{{"u", "v"}, {"v", "w"}, {"u", "w"}, {"u", "x"}};
  EXPECT_EQ(cut_edges(pendant), std::vector<std::size_t>{pendant.edge_between("u", "x")});
}

TEST(SimpleCyclesTest, Examples) {
  EXPECT_TRUE(simple_cycles(star_graph(4)).empty());
  auto c5 = simple_cycles(cycle_graph(5));
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_EQ(c5[0].vertices.size(), 5u);
  EXPECT_EQ(c5[0].edges.size(), 5u);

  auto k4 = simple_cycles(complete_graph(4));
  EXPECT_EQ(k4.size(), testing::complete_graph_cycle_count(4));
  EXPECT_EQ(std::count_if(k4.begin(), k4.end(), [](const Cycle& c) { return c.vertices.size() == 3; }), 4);
  EXPECT_EQ(std::count_if(k4.begin(), k4.end(), [](const Cycle& c) { return c.vertices.size() == 4; }), 3);
}

TEST(SimpleCyclesTest, CompleteGraphCountsMatchFormula) {
  for (std::size_t n = 3; n <= 5; ++n) EXPECT_EQ(simple_cycles(complete_graph(n)).size(), testing::complete_graph_cycle_count(n));
}

TEST(SimpleCyclesTest, CyclesAreClosedWalksWithMatchingEdges) {
  Graph g = complete_bipartite_graph(3, 3);
  std::set<std::vector<std::size_t>> edge_sets;
  for (const Cycle& c : simple_cycles(g)) {
    ASSERT_EQ(c.vertices.size(), c.edges.size());
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      std::size_t a = c.vertices[i], b = c.vertices[(i + 1) % c.vertices.size()];
      ASSERT_EQ(g.find_edge(a, b), c.edges[i]);
    }
    std::vector<std::size_t> es = c.edges;
    std::sort(es.begin(), es.end());
    ASSERT_TRUE(edge_sets.insert(es).second) << "cycle reported twice";
  }
  // K3,3: 9 four-cycles and 6 six-cycles.
  EXPECT_EQ(edge_sets.size(), 15u);
}

TEST(SimpleCyclesTest, BoundExceeded) {
  try {
    simple_cycles(path_graph(6), 5);
    FAIL() << "expected BoundExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
}

TEST(InTriangleTest, Examples) {
  EXPECT_FALSE(in_triangle(star_graph(3), std::size_t{0}));
  Graph k3 = triangle();
  for (std::size_t v = 0; v < 3; ++v) EXPECT_TRUE(in_triangle(k3, v));
  EXPECT_FALSE(in_triangle(cycle_graph(4), std::size_t{1}));
}

// Properties over every connected graph with at most 7 vertices.
TEST(GraphPropertyTest, CutEdgesAreExactlyEdgesOnNoCycle) {
  for (const Graph& g : connected_graphs_up_to(7)) {
    auto cycles = simple_cycles(g);
    std::vector<char> on_cycle(g.edge_count(), 0);
    for (const Cycle& c : cycles)
      for (std::size_t id : c.edges) on_cycle[id] = 1;
    std::vector<std::size_t> expected;
    for (std::size_t id = 0; id < g.edge_count(); ++id)
      if (!on_cycle[id]) expected.push_back(id);
    auto bridges = cut_edges(g);
    ASSERT_EQ(bridges, expected);
    ASSERT_EQ(bridges, testing::bridges_by_removal(g));
  }
}

TEST(GraphPropertyTest, BipartiteIffNoOddCycle) {
  for (const Graph& g : connected_graphs_up_to(7)) {
    auto cycles = simple_cycles(g);
    bool odd = std::any_of(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.vertices.size() % 2 == 1; });
    auto parts = is_bipartite(g);
    ASSERT_EQ(parts.has_value(), !odd);
    if (parts) {
      std::vector<int> side(g.vertex_count(), -1);
      for (auto v : parts->left) side[v] = 0;
      for (auto v : parts->right) side[v] = 1;
      for (const Edge& e : g.edges()) ASSERT_NE(side[e.u], side[e.v]);
    }
  }
}

TEST(GraphPropertyTest, InTriangleMatchesThreeCycles) {
  for (const Graph& g : connected_graphs_up_to(6)) {
    std::vector<char> expected(g.vertex_count(), 0);
    for (const Cycle& c : simple_cycles(g))
      if (c.vertices.size() == 3)
        for (auto v : c.vertices) expected[v] = 1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) ASSERT_EQ(in_triangle(g, v), bool(expected[v]));
  }
}

}  // namespace
}  // namespace iasl
