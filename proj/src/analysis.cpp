#include "setval/analysis.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "setval/error.hpp"

namespace setval {

namespace {

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

void require_connected(const Graph& g, std::string_view what) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::PreconditionViolated, std::string(what) + " requires a connected graph");
  }
}

// Tree path u -> lca -> v, used to close a negative cycle with edge vu.
std::vector<VertexId> tree_path(VertexId u, VertexId v, const std::vector<VertexId>& parent,
                                const std::vector<std::size_t>& depth) {
  std::vector<VertexId> from_u;
  std::vector<VertexId> from_v;
  while (depth[u] > depth[v]) {
    from_u.push_back(u);
    u = parent[u];
  }
  while (depth[v] > depth[u]) {
    from_v.push_back(v);
    v = parent[v];
  }
  while (u != v) {
    from_u.push_back(u);
    from_v.push_back(v);
    u = parent[u];
    v = parent[v];
  }
  from_u.push_back(u);
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> side(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<std::size_t> depth(n, 0);
  std::queue<VertexId> frontier;

  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    frontier.push(root);
    while (!frontier.empty()) {
      const VertexId u = frontier.front();
      frontier.pop();
      for (const Incidence& inc : g.neighbors(u)) {
        const std::uint8_t crosses = sg.sign(inc.edge) == Sign::negative ? 1 : 0;
        const VertexId w = inc.to;
        if (!seen[w]) {
          seen[w] = true;
          side[w] = side[u] ^ crosses;
          parent[w] = u;
          depth[w] = depth[u] + 1;
          frontier.push(w);
        } else if ((side[u] ^ side[w]) != crosses) {
          return BalanceResult{canonical_cycle(Cycle{tree_path(u, w, parent, depth)})};
        }
      }
    }
  }

  Bipartition part;
  for (VertexId v = 0; v < n; ++v) (side[v] == 0 ? part.v1 : part.v2).push_back(v);
  return BalanceResult{std::move(part)};
}

std::size_t cycle_negative_count(const SignedGraph& sg, const Cycle& c) {
  std::size_t count = 0;
  for (EdgeId e : cycle_edges(sg.graph(), c)) {
    if (sg.sign(e) == Sign::negative) ++count;
  }
  return count;
}

std::string_view to_string(NotClusterableReason reason) {
  switch (reason) {
    case NotClusterableReason::AllPositive: return "AllPositive";
    case NotClusterableReason::Unbalanced: return "Unbalanced";
  }
  return "Unknown";
}

ClusterResult is_two_clusterable(const SignedGraph& sg) {
  require_connected(sg.graph(), "two-clusterability");
  BalanceResult balance = is_balanced(sg);
  if (!balance.balanced()) return ClusterResult{NotClusterableReason::Unbalanced};
  const auto signs = sg.signs();
  if (std::none_of(signs.begin(), signs.end(), [](Sign s) { return s == Sign::negative; })) {
    return ClusterResult{NotClusterableReason::AllPositive};
  }
  Bipartition part = std::move(std::get<Bipartition>(balance.certificate));
  return ClusterResult{ClusterCertificate{std::move(part.v1), std::move(part.v2)}};
}

bool two_clusterable_by_parity(const Graph& g, const SetValuation& val) {
  require_connected(g, "two-clusterability");
  return std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return !same_parity(val.label(e.u), val.label(e.v));
  });
}

bool is_eulerian(const Graph& g) {
  if (g.edge_count() == 0) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  std::size_t nontrivial = 0;
  for (const auto& component : connected_components(g)) {
    if (component.size() > 1) ++nontrivial;
  }
  return nontrivial == 1;
}

CycleDecomposition eulerian_cycle_decomposition(const Graph& g) {
  if (!is_eulerian(g)) throw Error(ErrorCode::NotEulerian, "graph is not Eulerian");

  const std::size_t n = g.vertex_count();
  constexpr std::size_t kOffPath = std::numeric_limits<std::size_t>::max();
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::size_t> position(n, kOffPath);
  CycleDecomposition out;

  auto next_unused = [&](VertexId v) -> const Incidence* {
    auto adj = g.neighbors(v);
    while (cursor[v] < adj.size() && used[adj[cursor[v]].edge]) ++cursor[v];
    return cursor[v] < adj.size() ? &adj[cursor[v]] : nullptr;
  };

  for (VertexId start = 0; start < n; ++start) {
    while (next_unused(start) != nullptr) {
      std::vector<VertexId> path{start};
      position[start] = 0;
      VertexId current = start;
      while (const Incidence* step = next_unused(current)) {
        used[step->edge] = true;
        const VertexId w = step->to;
        if (position[w] == kOffPath) {
          position[w] = path.size();
          path.push_back(w);
        } else {
          const std::size_t at = position[w];
          Cycle c{std::vector<VertexId>(path.begin() + static_cast<std::ptrdiff_t>(at), path.end())};
          for (std::size_t i = at + 1; i < path.size(); ++i) position[path[i]] = kOffPath;
          path.resize(at + 1);
          out.cycles.push_back(std::move(c));
        }
        current = w;
      }
      // Even degrees: a walk can only stall where it is closed.
      if (path.size() != 1) throw std::logic_error("cycle peeling stalled on an open trail");
      position[start] = kOffPath;
    }
  }
  return out;
}

bool EulerianParityReport::all_cycles_even() const noexcept {
  return std::all_of(cycles.begin(), cycles.end(), [](const CycleLabelSum& c) { return c.total() % 2 == 0; });
}

EulerianParityReport eulerian_label_sum_parity(const Graph& g, const SetValuation& val, IndexerRequirement mode) {
  if (!is_eulerian(g)) throw Error(ErrorCode::NotEulerian, "graph is not Eulerian");
  const SignedGraph sg = induce_signed_graph(g, val);
  if (mode == IndexerRequirement::strict) {
    if (auto check = is_set_indexer(g, val); !check) {
      throw Error(ErrorCode::NotSetIndexer, "edges " + std::to_string(check.collision->first) + " and " +
                                                std::to_string(check.collision->second) +
                                                " share an induced label");
    }
  }

  std::vector<std::uint64_t> label_size(g.edge_count());
  EulerianParityReport report;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    label_size[id] = symmetric_difference(val.label(e.u), val.label(e.v)).cardinality();
    report.total += label_size[id];
  }
  for (Cycle& c : eulerian_cycle_decomposition(g).cycles) {
    CycleLabelSum sum;
    for (EdgeId id : cycle_edges(g, c)) {
      if (sg.sign(id) == Sign::positive) {
        sum.positive_sum += label_size[id];
      } else {
        sum.negative_sum += label_size[id];
        ++sum.negative_edges;
      }
    }
    sum.cycle = std::move(c);
    report.cycles.push_back(std::move(sum));
  }
  return report;
}

}  // namespace setval
