#include <gtest/gtest.h>

#include <algorithm>

#include "setval/analysis.hpp"
#include "setval/constructors.hpp"
#include "setval/error.hpp"
#include "setval/graph_family.hpp"
#include "setval/oracle.hpp"

namespace setval {
namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph square() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

Graph complete(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

SetValuation labels(std::size_t m, std::initializer_list<std::initializer_list<Element>> sets) {
  const GroundSet x(m);
  std::vector<SetLabel> out;
  for (auto s : sets) out.push_back(SetLabel::from_elements(x, s));
  return SetValuation(x, std::move(out));
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

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

TEST(IsBalanced, AllPositiveK4) {
  const BalanceResult r = is_balanced(SignedGraph::all_positive(complete(4)));
  ASSERT_TRUE(r.balanced());
  EXPECT_TRUE(r.bipartition().v2.empty());
  EXPECT_EQ(r.bipartition().v1.size(), 4u);
}

TEST(IsBalanced, TwoNegativeTriangle) {
  // Edges (0,1) (0,2) (1,2): negatives meet at vertex 0.
  const SignedGraph sg(triangle(), {N, N, P});
  const BalanceResult r = is_balanced(sg);
  ASSERT_TRUE(r.balanced());
  EXPECT_TRUE(brute_balance(sg));
  EXPECT_EQ(r.bipartition().v1, (std::vector<VertexId>{0}));
  EXPECT_EQ(r.bipartition().v2, (std::vector<VertexId>{1, 2}));
}

TEST(IsBalanced, AllNegativeTriangleWitness) {
  const SignedGraph sg(triangle(), {N, N, N});
  const BalanceResult r = is_balanced(sg);
  ASSERT_FALSE(r.balanced());
  EXPECT_EQ(r.negative_cycle().vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(cycle_sign(sg, r.negative_cycle()), N);
}

TEST(IsBalanced, WitnessInLargerGraph) {
  // Balanced square plus a chord that breaks it.
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
  std::vector<Sign> signs(g.edge_count(), P);
  signs[*g.find_edge(1, 3)] = N;
  const SignedGraph sg(g, signs);
  const BalanceResult r = is_balanced(sg);
  ASSERT_FALSE(r.balanced());
  EXPECT_EQ(cycle_sign(sg, r.negative_cycle()), N);
  EXPECT_NO_THROW(cycle_edges(g, r.negative_cycle()));
}

TEST(CycleNegativeCount, Triangle) {
  const Cycle c{{0, 1, 2}};
  EXPECT_EQ(cycle_negative_count(SignedGraph(triangle(), {P, P, P}), c), 0u);
  EXPECT_EQ(cycle_negative_count(SignedGraph(triangle(), {N, N, P}), c), 2u);
  EXPECT_EQ(cycle_negative_count(SignedGraph(triangle(), {N, N, N}), c), 3u);
  EXPECT_THROW(cycle_negative_count(SignedGraph(triangle(), {N, N, N}), Cycle{{0, 1, 3}}), Error);
}

TEST(TwoClusterable, Examples) {
  const ClusterResult all_pos = is_two_clusterable(SignedGraph::all_positive(triangle()));
  ASSERT_FALSE(all_pos.clusterable());
  EXPECT_EQ(all_pos.reason(), NotClusterableReason::AllPositive);

  // Alternating square, edge order (0,1) (0,3) (1,2) (2,3).
  const SignedGraph alt(square(), {P, N, N, P});
  const ClusterResult yes = is_two_clusterable(alt);
  ASSERT_TRUE(yes.clusterable());
  EXPECT_EQ(yes.certificate().u1, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(yes.certificate().u2, (std::vector<VertexId>{2, 3}));
  EXPECT_TRUE(brute_two_cluster(alt));

  const SignedGraph all_neg(triangle(), {N, N, N});
  const ClusterResult no = is_two_clusterable(all_neg);
  ASSERT_FALSE(no.clusterable());
  EXPECT_EQ(no.reason(), NotClusterableReason::Unbalanced);
  EXPECT_FALSE(brute_two_cluster(all_neg));
}

TEST(TwoClusterable, DisconnectedRejected) {
  const SignedGraph sg(Graph(4, {{0, 1}, {2, 3}}), {N, N});
  EXPECT_EQ(code_of([&] { is_two_clusterable(sg); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] { two_clusterable_by_parity(sg.graph(), labels(2, {{}, {1}, {2}, {1, 2}})); }),
            ErrorCode::PreconditionViolated);
}

TEST(TwoClusterableByParity, Examples) {
  const Graph edge(2, {{0, 1}});
  EXPECT_FALSE(two_clusterable_by_parity(edge, labels(2, {{1}, {2}})));
  EXPECT_TRUE(two_clusterable_by_parity(edge, labels(2, {{1}, {1, 2}})));
  const SetValuation val = labels(2, {{1}, {2}, {1, 2}});
  EXPECT_TRUE(two_clusterable_by_parity(triangle(), val));
  EXPECT_TRUE(is_two_clusterable(induce_signed_graph(triangle(), val)).clusterable());
}

TEST(IsEulerian, Examples) {
  EXPECT_TRUE(is_eulerian(square()));
  EXPECT_FALSE(is_eulerian(Graph(3, {{0, 1}, {1, 2}})));
  EXPECT_TRUE(is_eulerian(bowtie()));
  // Isolated vertices are ignored; two separate cycles are not.
  EXPECT_TRUE(is_eulerian(Graph(4, {{0, 1}, {1, 2}, {2, 0}})));
  EXPECT_FALSE(is_eulerian(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  EXPECT_FALSE(is_eulerian(Graph(3, {})));
}

void expect_partitions_edges(const Graph& g, const CycleDecomposition& d) {
  std::vector<int> cover(g.edge_count(), 0);
  for (const Cycle& c : d.cycles) {
    for (EdgeId e : cycle_edges(g, c)) ++cover[e];
  }
  EXPECT_TRUE(std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; }));
}

TEST(EulerianDecomposition, Examples) {
  const CycleDecomposition sq = eulerian_cycle_decomposition(square());
  ASSERT_EQ(sq.cycles.size(), 1u);
  EXPECT_EQ(sq.cycles[0].length(), 4u);

  const CycleDecomposition bt = eulerian_cycle_decomposition(bowtie());
  ASSERT_EQ(bt.cycles.size(), 2u);
  EXPECT_EQ(bt.cycles[0].length(), 3u);
  EXPECT_EQ(bt.cycles[1].length(), 3u);

  const Graph k5 = complete(5);
  expect_partitions_edges(k5, eulerian_cycle_decomposition(k5));

  EXPECT_EQ(code_of([] { eulerian_cycle_decomposition(Graph(3, {{0, 1}, {1, 2}})); }), ErrorCode::NotEulerian);
}

TEST(EulerianDecomposition, EveryEulerianGraphUpToSeven) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const Graph& g : small_graphs(n)) {
      if (!is_eulerian(g)) continue;
      expect_partitions_edges(g, eulerian_cycle_decomposition(g));
    }
  }
}

TEST(EulerianLabelSum, SquareWithSingletons) {
  const EulerianParityReport r = eulerian_label_sum_parity(square(), labels(4, {{1}, {2}, {3}, {4}}));
  EXPECT_EQ(r.total, 8u);
  EXPECT_TRUE(r.total_even());
  ASSERT_EQ(r.cycles.size(), 1u);
  EXPECT_EQ(r.cycles[0].negative_edges, 0u);
  EXPECT_EQ(r.cycles[0].positive_sum, 8u);
}

TEST(EulerianLabelSum, SquareWithRepeatedEdgeLabels) {
  // Edge labels {1}, {2}, {1}, {2}: injective on vertices, not a set-indexer.
  const SetValuation val = labels(2, {{}, {1}, {1, 2}, {2}});
  EXPECT_EQ(code_of([&] { eulerian_label_sum_parity(square(), val); }), ErrorCode::NotSetIndexer);
  const EulerianParityReport r = eulerian_label_sum_parity(square(), val, IndexerRequirement::relaxed);
  EXPECT_EQ(r.total, 4u);
  ASSERT_EQ(r.cycles.size(), 1u);
  EXPECT_EQ(r.cycles[0].negative_edges, 4u);
  EXPECT_EQ(r.cycles[0].negative_sum, 4u);
  EXPECT_TRUE(r.all_cycles_even());
}

TEST(EulerianLabelSum, BowtieCanonical) {
  const Graph g = bowtie();
  const EulerianParityReport r = eulerian_label_sum_parity(g, canonical_set_indexer(g));
  EXPECT_EQ(r.total, 12u);
  ASSERT_EQ(r.cycles.size(), 2u);
  EXPECT_EQ(r.cycles[0].total(), 6u);
  EXPECT_EQ(r.cycles[1].total(), 6u);
}

TEST(EulerianLabelSum, Errors) {
  EXPECT_EQ(code_of([] {
              eulerian_label_sum_parity(Graph(3, {{0, 1}, {1, 2}}), labels(2, {{}, {1}, {2}}));
            }),
            ErrorCode::NotEulerian);
}

}  // namespace
}  // namespace setval
