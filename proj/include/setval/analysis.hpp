#ifndef SETVAL_ANALYSIS_HPP
#define SETVAL_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "setval/graph.hpp"
#include "setval/valuation.hpp"

namespace setval {

// Vertex partition with E⁻ = E(v1, v2). v2 may be empty.
struct Bipartition {
  std::vector<VertexId> v1;
  std::vector<VertexId> v2;

  bool operator==(const Bipartition&) const = default;
};

struct BalanceResult {
  // Bipartition when balanced, otherwise a cycle with negative sign.
  std::variant<Bipartition, Cycle> certificate;

  bool balanced() const noexcept { return std::holds_alternative<Bipartition>(certificate); }
  const Bipartition& bipartition() const { return std::get<Bipartition>(certificate); }
  const Cycle& negative_cycle() const { return std::get<Cycle>(certificate); }
};

// Harary test. Each component is two-coloured by propagating signs along a
// BFS tree (positive edge: same side, negative edge: opposite side); the
// first non-tree edge that disagrees closes a negative cycle through the
// tree. O(|V| + |E|). The smallest vertex of each component lands in v1.
BalanceResult is_balanced(const SignedGraph& sg);

// Number of negative edges along c. Throws EdgeNotInGraph.
std::size_t cycle_negative_count(const SignedGraph& sg, const Cycle& c);

struct ClusterCertificate {
  std::vector<VertexId> u1;
  std::vector<VertexId> u2;
};

enum class NotClusterableReason { AllPositive, Unbalanced };

std::string_view to_string(NotClusterableReason reason);

struct ClusterResult {
  std::variant<ClusterCertificate, NotClusterableReason> outcome;

  bool clusterable() const noexcept { return std::holds_alternative<ClusterCertificate>(outcome); }
  const ClusterCertificate& certificate() const { return std::get<ClusterCertificate>(outcome); }
  NotClusterableReason reason() const { return std::get<NotClusterableReason>(outcome); }
};

// Two non-empty clusters with positive edges inside and negative edges across.
// For a connected graph that is exactly "balanced with at least one negative
// edge", and the certificate is the Harary bipartition.
// Throws PreconditionViolated on disconnected input.
ClusterResult is_two_clusterable(const SignedGraph& sg);

// Clusterability read off the labels: some edge joins opposite-parity labels.
// Throws PreconditionViolated on disconnected input, MissingLabel.
bool two_clusterable_by_parity(const Graph& g, const SetValuation& val);

// Connected once isolated vertices are ignored, every degree even, and at
// least one edge.
bool is_eulerian(const Graph& g);

struct CycleDecomposition {
  std::vector<Cycle> cycles;
};

// Edge-disjoint simple cycles covering every edge exactly once, found by
// walking unused edges and cutting off a cycle whenever the walk revisits a
// vertex. Throws NotEulerian.
CycleDecomposition eulerian_cycle_decomposition(const Graph& g);

// Label-size sums of one cycle of the decomposition, split by edge sign.
struct CycleLabelSum {
  Cycle cycle;
  std::uint64_t positive_sum = 0;  // over positive edges; each term even
  std::uint64_t negative_sum = 0;  // over negative edges; each term odd
  std::size_t negative_edges = 0;

  std::uint64_t total() const noexcept { return positive_sum + negative_sum; }
};

struct EulerianParityReport {
  std::uint64_t total = 0;  // Σ_e |f⊕(e)| over all edges
  std::vector<CycleLabelSum> cycles;

  bool total_even() const noexcept { return total % 2 == 0; }
  bool all_cycles_even() const noexcept;
};

enum class IndexerRequirement {
  // The labeling must be a set-indexer (NotSetIndexer otherwise).
  strict,
  // Any injective labeling.
  relaxed,
};

// Σ_e |f(u) ⊕ f(v)| with per-cycle breakdown over
// eulerian_cycle_decomposition(g). Throws NotEulerian, NotSetIndexer,
// NotInjective, MissingLabel.
EulerianParityReport eulerian_label_sum_parity(const Graph& g, const SetValuation& val,
                                               IndexerRequirement mode = IndexerRequirement::strict);

}  // namespace setval

#endif  // SETVAL_ANALYSIS_HPP
