#include <gtest/gtest.h>

#include "setval/error.hpp"
#include "setval/valuation.hpp"

namespace setval {
namespace {

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

TEST(SetValuation, GroundMismatchRejected) {
  std::vector<SetLabel> mixed{SetLabel(GroundSet(2)), SetLabel(GroundSet(3))};
  EXPECT_EQ(code_of([&] { SetValuation(GroundSet(2), mixed); }), ErrorCode::GroundSetMismatch);
}

TEST(SetValuation, FindsCollision) {
  const SetValuation val = labels(2, {{1}, {2}, {1}});
  ASSERT_TRUE(val.find_collision());
  EXPECT_EQ(*val.find_collision(), (std::pair<VertexId, VertexId>{0, 2}));
  EXPECT_TRUE(labels(2, {{}, {1}, {2}, {1, 2}}).is_injective());
}

TEST(InducedEdgeLabel, Examples) {
  const Graph g(2, {{0, 1}});
  const GroundSet x(3);
  EXPECT_EQ(induced_edge_label(labels(3, {{1}, {2}}), g, {0, 1}), SetLabel::from_elements(x, {1, 2}));
  EXPECT_EQ(induced_edge_label(labels(3, {{1}, {1, 2}}), g, {0, 1}), SetLabel::from_elements(x, {2}));
  EXPECT_EQ(induced_edge_label(labels(3, {{}, {3}}), g, {0, 1}), SetLabel::from_elements(x, {3}));
}

TEST(InducedEdgeLabel, NonEdge) {
  const Graph g(3, {{0, 1}});
  EXPECT_EQ(code_of([&] { induced_edge_label(labels(2, {{}, {1}, {2}}), g, {0, 2}); }), ErrorCode::EdgeNotInGraph);
}

TEST(InduceSignedGraph, Examples) {
  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const SignedGraph all_pos = induce_signed_graph(triangle, labels(3, {{1}, {2}, {3}}));
  EXPECT_TRUE(all_pos.negative_edges().empty());

  const Graph path(3, {{0, 1}, {1, 2}});
  const SignedGraph both_neg = induce_signed_graph(path, labels(2, {{1}, {1, 2}, {2}}));
  EXPECT_EQ(both_neg.negative_edges().size(), 2u);

  const SignedGraph single = induce_signed_graph(Graph(2, {{0, 1}}), labels(1, {{}, {1}}));
  EXPECT_EQ(single.sign(0), Sign::negative);
}

TEST(InduceSignedGraph, Errors) {
  const Graph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(code_of([&] { induce_signed_graph(path, labels(2, {{1}, {2}, {1}})); }), ErrorCode::NotInjective);
  EXPECT_EQ(code_of([&] { induce_signed_graph(path, labels(2, {{1}, {2}})); }), ErrorCode::MissingLabel);
}

TEST(InduceSignedGraph, ReadBackMatchesInducedSign) {
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const SetValuation val = labels(3, {{}, {1, 2}, {3}, {1, 2, 3}});
  const SignedGraph sg = induce_signed_graph(k4, val);
  for (EdgeId id = 0; id < k4.edge_count(); ++id) {
    const Edge& e = k4.edge(id);
    EXPECT_EQ(sg.sign(id), induced_sign(val.label(e.u), val.label(e.v)));
  }
}

TEST(ParityPartition, Examples) {
  const ParityPartition a = parity_partition(labels(2, {{1}, {2}, {1, 2}}));
  EXPECT_EQ(a.odd, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(a.even, (std::vector<VertexId>{2}));
  EXPECT_TRUE(parity_partition(labels(3, {{1}, {2}, {3}})).even.empty());
  EXPECT_TRUE(parity_partition(labels(2, {{}, {1, 2}})).odd.empty());
}

TEST(IsSetIndexer, Examples) {
  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(is_set_indexer(triangle, labels(3, {{1}, {2}, {3}})));

  // P4 with ∅, {1}, {1,2}, {2}: edge labels {1}, {2}, {1}.
  const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  const IndexerCheck check = is_set_indexer(p4, labels(2, {{}, {1}, {1, 2}, {2}}));
  EXPECT_FALSE(check);
  ASSERT_TRUE(check.collision);
  EXPECT_EQ(p4.edge(check.collision->first), (Edge{0, 1}));
  EXPECT_EQ(p4.edge(check.collision->second), (Edge{2, 3}));

  EXPECT_TRUE(is_set_indexer(Graph(2, {{0, 1}}), labels(1, {{}, {1}})));
}

}  // namespace
}  // namespace setval
