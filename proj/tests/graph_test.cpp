#include <gtest/gtest.h>

#include <algorithm>

#include "setval/error.hpp"
#include "setval/graph.hpp"
#include "setval/oracle.hpp"

namespace setval {
namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Graph complete(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::IoError;
}

TEST(BuildGraph, TriangleHasThreeEdges) {
  const Graph g = triangle();
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_TRUE(g.isolated_vertices().empty());
}

TEST(BuildGraph, DuplicatesAreDroppedAndCounted) {
  const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 0}};
  const GraphBuild built = build_graph(2, edges);
  EXPECT_EQ(built.graph.edge_count(), 1u);
  EXPECT_EQ(built.graph.edge(0), (Edge{0, 1}));
  EXPECT_EQ(built.duplicates, 1u);
}

TEST(BuildGraph, RejectsLoopsAndOutOfRange) {
  EXPECT_EQ(code_of([] { Graph(2, {{0, 0}}); }), ErrorCode::SelfLoopRejected);
  EXPECT_EQ(code_of([] { Graph(2, {{0, 2}}); }), ErrorCode::InvalidVertex);
}

TEST(BuildGraph, EdgesAreCanonicallyOrdered) {
  const Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), expected.begin(), expected.end()));
  EXPECT_EQ(g.find_edge(3, 2), EdgeId{2});
  EXPECT_FALSE(g.find_edge(1, 3));
}

TEST(BuildGraph, ReportsIsolatedVertices) {
  const Graph g(4, {{0, 1}});
  EXPECT_EQ(g.isolated_vertices(), (std::vector<VertexId>{2, 3}));
}

TEST(SignedGraph, SignatureMustCoverEveryEdge) {
  EXPECT_EQ(code_of([] { SignedGraph(triangle(), {Sign::positive}); }), ErrorCode::PreconditionViolated);
  const SignedGraph sg(triangle(), {Sign::positive, Sign::negative, Sign::positive});
  EXPECT_EQ(sg.negative_edges().size() + sg.positive_edges().size(), sg.edge_count());
  EXPECT_EQ(code_of([&] { sg.sign(0, 0); }), ErrorCode::EdgeNotInGraph);
}

TEST(SignAlgebra, ProductTable) {
  EXPECT_EQ(Sign::positive * Sign::positive, Sign::positive);
  EXPECT_EQ(Sign::positive * Sign::negative, Sign::negative);
  EXPECT_EQ(Sign::negative * Sign::positive, Sign::negative);
  EXPECT_EQ(Sign::negative * Sign::negative, Sign::positive);
}

TEST(EnumerateCycles, Triangle) {
  const auto cycles = enumerate_cycles(triangle());
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].length(), 3u);
}

TEST(EnumerateCycles, K4HasSevenCycles) {
  // Frozen from brute_cycles: 4 triangles + 3 four-cycles.
  const auto cycles = enumerate_cycles(complete(4));
  ASSERT_EQ(cycles.size(), 7u);
  EXPECT_EQ(std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.length() == 3; }), 4);
  EXPECT_EQ(std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.length() == 4; }), 3);
  EXPECT_EQ(brute_cycles(complete(4)).size(), 7u);
}

TEST(EnumerateCycles, PathIsAcyclic) {
  EXPECT_TRUE(enumerate_cycles(Graph(3, {{0, 1}, {1, 2}})).empty());
}

TEST(EnumerateCycles, BudgetIsEnforced) {
  EXPECT_EQ(code_of([] { enumerate_cycles(complete(5), 10); }), ErrorCode::CycleBudgetExceeded);
  EXPECT_EQ(enumerate_cycles(complete(5), 37).size(), 37u);
}

TEST(CycleSign, ProductAlongCycle) {
  const Graph g = triangle();
  const Cycle c{{0, 1, 2}};
  auto with = [&](Sign a, Sign b, Sign d) { return cycle_sign(SignedGraph(g, {a, b, d}), c); };
  EXPECT_EQ(with(Sign::positive, Sign::positive, Sign::positive), Sign::positive);
  EXPECT_EQ(with(Sign::positive, Sign::negative, Sign::negative), Sign::positive);
  EXPECT_EQ(with(Sign::positive, Sign::positive, Sign::negative), Sign::negative);
}

TEST(CycleSign, RejectsNonEdges) {
  const SignedGraph sg = SignedGraph::all_positive(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(code_of([&] { cycle_sign(sg, Cycle{{0, 1, 2}}); }), ErrorCode::EdgeNotInGraph);
}

TEST(CycleSign, InvariantUnderRotationAndReflection) {
  const Graph g = complete(5);
  std::vector<Sign> signs;
  for (std::size_t i = 0; i < g.edge_count(); ++i) signs.push_back(i % 3 == 0 ? Sign::negative : Sign::positive);
  const SignedGraph sg(g, signs);
  for (Cycle c : enumerate_cycles(g)) {
    const Sign expected = cycle_sign(sg, c);
    for (std::size_t r = 0; r < c.length(); ++r) {
      std::rotate(c.vertices.begin(), c.vertices.begin() + 1, c.vertices.end());
      EXPECT_EQ(cycle_sign(sg, c), expected);
      Cycle reflected{std::vector<VertexId>(c.vertices.rbegin(), c.vertices.rend())};
      EXPECT_EQ(cycle_sign(sg, reflected), expected);
    }
  }
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connected_components(triangle()).size(), 1u);
  const auto two = connected_components(Graph(4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(two[1], (std::vector<VertexId>{2, 3}));
  const auto singles = connected_components(Graph(3, {}));
  EXPECT_EQ(singles.size(), 3u);
  for (const auto& c : singles) EXPECT_EQ(c.size(), 1u);
}

TEST(CanonicalCycle, RotatesAndOrients) {
  EXPECT_EQ(canonical_cycle(Cycle{{3, 1, 2}}).vertices, (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(canonical_cycle(Cycle{{2, 0, 3, 1}}).vertices, (std::vector<VertexId>{0, 2, 1, 3}));
}

}  // namespace
}  // namespace setval
