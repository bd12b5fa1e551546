#include "setval/graph.hpp"

#include <algorithm>
#include <string>

#include "setval/error.hpp"

namespace setval {

std::optional<Sign> sign_from_char(char c) noexcept {
  switch (c) {
    case '+': return Sign::positive;
    case '-': return Sign::negative;
    default: return std::nullopt;
  }
}

GraphBuild build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list) {
  GraphBuild out;
  Graph& g = out.graph;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::InvalidVertex, "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                                ") outside vertex range [0, " + std::to_string(n) + ")");
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoopRejected, "self-loop at vertex " + std::to_string(a));
    }
    g.edges_.push_back(make_edge(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto last = std::unique(g.edges_.begin(), g.edges_.end());
  out.duplicates = static_cast<std::size_t>(g.edges_.end() - last);
  g.edges_.erase(last, g.edges_.end());
  g.index_adjacency();
  return out;
}

Graph::Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list)
    : Graph(build_graph(n, edge_list).graph) {}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edge_list)
    : Graph(n, std::span<const std::pair<VertexId, VertexId>>(edge_list.begin(), edge_list.size())) {}

void Graph::index_adjacency() {
  std::vector<std::size_t> degree(n_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[cursor[e.u]++] = {e.v, id};
    adjacency_[cursor[e.v]++] = {e.u, id};
  }
}

std::span<const Incidence> Graph::neighbors(VertexId v) const {
  if (v >= n_) throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
  return std::span<const Incidence>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::degree(VertexId v) const { return neighbors(v).size(); }

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const noexcept {
  if (a == b || a >= n_ || b >= n_) return std::nullopt;
  const Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::vector<VertexId> Graph::isolated_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v) {
    if (offsets_[v + 1] == offsets_[v]) out.push_back(v);
  }
  return out;
}

SignedGraph::SignedGraph(Graph graph, std::vector<Sign> signs)
    : graph_(std::move(graph)), signs_(std::move(signs)) {
  if (signs_.size() != graph_.edge_count()) {
    throw Error(ErrorCode::PreconditionViolated,
                "signature has " + std::to_string(signs_.size()) + " entries for " +
                    std::to_string(graph_.edge_count()) + " edges");
  }
}

SignedGraph SignedGraph::all_positive(Graph graph) {
  std::vector<Sign> signs(graph.edge_count(), Sign::positive);
  return SignedGraph(std::move(graph), std::move(signs));
}

Sign SignedGraph::sign(VertexId a, VertexId b) const {
  auto e = graph_.find_edge(a, b);
  if (!e) {
    throw Error(ErrorCode::EdgeNotInGraph, "{" + std::to_string(a) + ", " + std::to_string(b) + "}");
  }
  return signs_[*e];
}

std::vector<EdgeId> SignedGraph::positive_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < signs_.size(); ++e) {
    if (signs_[e] == Sign::positive) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> SignedGraph::negative_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < signs_.size(); ++e) {
    if (signs_[e] == Sign::negative) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> cycle_edges(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) {
    throw Error(ErrorCode::PreconditionViolated, "cycle needs at least three vertices");
  }
  std::vector<VertexId> sorted(vs);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::PreconditionViolated, "cycle repeats a vertex");
  }
  std::vector<EdgeId> out;
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    VertexId a = vs[i];
    VertexId b = vs[(i + 1) % vs.size()];
    auto e = g.find_edge(a, b);
    if (!e) {
      throw Error(ErrorCode::EdgeNotInGraph,
                  "cycle step {" + std::to_string(a) + ", " + std::to_string(b) + "}");
    }
    out.push_back(*e);
  }
  return out;
}

Cycle canonical_cycle(Cycle c) {
  auto& vs = c.vertices;
  if (vs.size() < 2) return c;
  std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
  if (vs.size() > 2 && vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
  return c;
}

namespace {

// Cycles whose smallest vertex is `root`: DFS restricted to vertices above
// root, closing whenever a neighbor is root. Reflection duplicates are
// dropped by keeping only paths with path[1] < path.back().
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t budget, std::vector<Cycle>& out)
      : g_(g), budget_(budget), out_(out), on_path_(g.vertex_count(), false) {}

  void run_from(VertexId root) {
    root_ = root;
    path_.assign(1, root);
    on_path_[root] = true;
    extend(root);
    on_path_[root] = false;
  }

 private:
  void extend(VertexId v) {
    for (const Incidence& inc : g_.neighbors(v)) {
      const VertexId w = inc.to;
      if (w == root_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) emit();
        continue;
      }
      if (w < root_ || on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  void emit() {
    if (out_.size() >= budget_) {
      throw Error(ErrorCode::CycleBudgetExceeded,
                  "more than " + std::to_string(budget_) + " simple cycles");
    }
    out_.push_back(Cycle{path_});
  }

  const Graph& g_;
  std::size_t budget_;
  std::vector<Cycle>& out_;
  std::vector<bool> on_path_;
  std::vector<VertexId> path_;
  VertexId root_ = 0;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t budget) {
  std::vector<Cycle> out;
  CycleSearch search(g, budget, out);
  for (VertexId root = 0; root < g.vertex_count(); ++root) search.run_from(root);
  return out;
}

Sign cycle_sign(const SignedGraph& sg, const Cycle& c) {
  Sign product = Sign::positive;
  for (EdgeId e : cycle_edges(sg.graph(), c)) product = product * sg.sign(e);
  return product;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> component;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (const Incidence& inc : g.neighbors(v)) {
        if (!seen[inc.to]) {
          seen[inc.to] = true;
          stack.push_back(inc.to);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace setval
