#include "setval/valuation.hpp"

#include <string>
#include <unordered_map>

#include "setval/error.hpp"

namespace setval {

SetValuation::SetValuation(GroundSet ground, std::vector<SetLabel> labels)
    : ground_(ground), labels_(std::move(labels)) {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v].ground_size() != ground_.size()) {
      throw Error(ErrorCode::GroundSetMismatch,
                  "label of vertex " + std::to_string(v) + " is over a ground set of size " +
                      std::to_string(labels_[v].ground_size()) + ", expected " +
                      std::to_string(ground_.size()));
    }
  }
}

const SetLabel& SetValuation::label(VertexId v) const {
  if (v >= labels_.size()) {
    throw Error(ErrorCode::MissingLabel, "vertex " + std::to_string(v) + " has no label");
  }
  return labels_[v];
}

std::optional<std::pair<VertexId, VertexId>> SetValuation::find_collision() const {
  std::unordered_map<SetLabel, VertexId, SetLabelHash> first_owner;
  first_owner.reserve(labels_.size());
  for (VertexId v = 0; v < labels_.size(); ++v) {
    auto [it, inserted] = first_owner.emplace(labels_[v], v);
    if (!inserted) return std::make_pair(it->second, v);
  }
  return std::nullopt;
}

SetLabel induced_edge_label(const SetValuation& val, const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw Error(ErrorCode::EdgeNotInGraph, "{" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}");
  }
  return symmetric_difference(val.label(e.u), val.label(e.v));
}

SignedGraph induce_signed_graph(const Graph& g, const SetValuation& val) {
  if (val.size() < g.vertex_count()) {
    throw Error(ErrorCode::MissingLabel, "vertex " + std::to_string(val.size()) + " has no label");
  }
  if (val.size() > g.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolated,
                std::to_string(val.size()) + " labels for " + std::to_string(g.vertex_count()) + " vertices");
  }
  if (auto clash = val.find_collision()) {
    throw Error(ErrorCode::NotInjective, "vertices " + std::to_string(clash->first) + " and " +
                                             std::to_string(clash->second) + " share a label");
  }
  std::vector<Sign> signs;
  signs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) signs.push_back(induced_sign(val.label(e.u), val.label(e.v)));
  return SignedGraph(g, std::move(signs));
}

ParityPartition parity_partition(const SetValuation& val) {
  ParityPartition out;
  for (VertexId v = 0; v < val.size(); ++v) {
    (val.labels()[v].is_odd() ? out.odd : out.even).push_back(v);
  }
  return out;
}

IndexerCheck is_set_indexer(const Graph& g, const SetValuation& val) {
  std::unordered_map<SetLabel, EdgeId, SetLabelHash> first_edge;
  first_edge.reserve(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    auto [it, inserted] = first_edge.emplace(symmetric_difference(val.label(e.u), val.label(e.v)), id);
    if (!inserted) return IndexerCheck{false, std::make_pair(it->second, id)};
  }
  return IndexerCheck{};
}

}  // namespace setval
