#include "setval/constructors.hpp"

#include <random>
#include <string>
#include <unordered_set>

#include "setval/analysis.hpp"
#include "setval/error.hpp"

namespace setval {

SetValuation canonical_set_indexer(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "graph has no vertices");
  const GroundSet ground(n);
  std::vector<SetLabel> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(SetLabel::from_elements(ground, {static_cast<Element>(i + 1)}));
  }
  return SetValuation(ground, std::move(labels));
}

CompatibleLabeling balance_compatible_labeling(const SignedGraph& sg) {
  BalanceResult balance = is_balanced(sg);
  if (!balance.balanced()) return CompatibleLabeling{balance.negative_cycle()};

  const std::size_t n = sg.vertex_count();
  const GroundSet ground(n + 1);
  const auto sentinel = static_cast<Element>(n + 1);
  std::vector<SetLabel> labels(n, SetLabel(ground));
  for (VertexId v : balance.bipartition().v1) {
    labels[v] = SetLabel::from_elements(ground, {static_cast<Element>(v + 1)});
  }
  for (VertexId v : balance.bipartition().v2) {
    labels[v] = SetLabel::from_elements(ground, {static_cast<Element>(v + 1), sentinel});
  }
  return CompatibleLabeling{SetValuation(ground, std::move(labels))};
}

SetValuation random_valuation(const Graph& g, std::size_t m, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  if (m < 64 && (std::uint64_t{1} << m) < n) {
    throw Error(ErrorCode::GroundSetTooSmall, "2^" + std::to_string(m) + " subsets cannot label " +
                                                  std::to_string(n) + " vertices injectively");
  }
  const GroundSet ground(m);
  std::mt19937_64 rng(seed);
  const std::size_t words = (m + 63) / 64;
  const std::size_t top_bits = m % 64;

  std::unordered_set<SetLabel, SetLabelHash> taken;
  std::vector<SetLabel> labels;
  labels.reserve(n);
  std::vector<Element> members;
  while (labels.size() < n) {
    members.clear();
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = rng();
      if (w + 1 == words && top_bits != 0) bits &= (std::uint64_t{1} << top_bits) - 1;
      for (std::size_t b = 0; b < 64; ++b) {
        if ((bits >> b) & 1U) members.push_back(static_cast<Element>(w * 64 + b + 1));
      }
    }
    SetLabel label = SetLabel::from_elements(ground, members);
    if (taken.insert(label).second) labels.push_back(std::move(label));
  }
  return SetValuation(ground, std::move(labels));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

SignedGraph random_signature(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Sign> signs;
  signs.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    signs.push_back((rng() & 1U) ? Sign::negative : Sign::positive);
  }
  return SignedGraph(g, std::move(signs));
}

}  // namespace setval
