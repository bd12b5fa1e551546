#ifndef SETVAL_VALUATION_HPP
#define SETVAL_VALUATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "setval/graph.hpp"
#include "setval/set_label.hpp"

namespace setval {

// Vertex v carries labels()[v]. Construction checks that every label lives
// over the stated ground set but not injectivity; operations that need an
// injective labeling check it themselves (see find_collision).
class SetValuation {
 public:
  // Throws GroundSetMismatch.
  SetValuation(GroundSet ground, std::vector<SetLabel> labels);

  const GroundSet& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const SetLabel> labels() const noexcept { return labels_; }
  // Throws MissingLabel.
  const SetLabel& label(VertexId v) const;

  // Some pair of vertices sharing a label, smallest first.
  std::optional<std::pair<VertexId, VertexId>> find_collision() const;
  bool is_injective() const { return !find_collision().has_value(); }

  bool operator==(const SetValuation&) const = default;

 private:
  GroundSet ground_;
  std::vector<SetLabel> labels_;
};

struct ParityPartition {
  std::vector<VertexId> odd;
  std::vector<VertexId> even;
};

// f(u) ⊕ f(v) for an edge uv. Throws EdgeNotInGraph, MissingLabel.
SetLabel induced_edge_label(const SetValuation& val, const Graph& g, Edge e);

// Signature σ(uv) = (-1)^{|f(u) ⊕ f(v)|} on every edge of g.
// Throws MissingLabel if val labels fewer than n vertices, PreconditionViolated
// if it labels more, NotInjective if two vertices share a label.
SignedGraph induce_signed_graph(const Graph& g, const SetValuation& val);

ParityPartition parity_partition(const SetValuation& val);

struct IndexerCheck {
  bool is_indexer = true;
  // Two edges with the same induced label, when is_indexer is false.
  std::optional<std::pair<EdgeId, EdgeId>> collision;

  explicit operator bool() const noexcept { return is_indexer; }
};

// True iff the induced edge labels are pairwise distinct. Assumes val is a
// valid (injective) labeling of g; throws MissingLabel otherwise.
IndexerCheck is_set_indexer(const Graph& g, const SetValuation& val);

}  // namespace setval

#endif  // SETVAL_VALUATION_HPP
