#ifndef SETVAL_GRAPH_HPP
#define SETVAL_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace setval {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class Sign : std::uint8_t { positive, negative };

// Sign multiplication: positive is the identity, negative * negative = positive.
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}

constexpr char to_char(Sign s) noexcept { return s == Sign::positive ? '+' : '-'; }

std::optional<Sign> sign_from_char(char c) noexcept;

// Unordered vertex pair stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Normalizes endpoint order. Does not validate.
constexpr Edge make_edge(VertexId a, VertexId b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

struct Incidence {
  VertexId to;
  EdgeId edge;
};

struct GraphBuild;

// Simple undirected graph on vertices [0, n). Edges are kept sorted, so an
// EdgeId is the rank of the edge in (u, v) lexicographic order.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidVertex / SelfLoopRejected. Duplicate pairs are dropped.
  Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list);
  Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edge_list);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const noexcept;
  bool has_edge(VertexId a, VertexId b) const noexcept { return find_edge(a, b).has_value(); }

  // Vertices of degree zero. Permitted, but outside the usual convention.
  std::vector<VertexId> isolated_vertices() const;

  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  friend GraphBuild build_graph(std::size_t, std::span<const std::pair<VertexId, VertexId>>);

  void index_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

struct GraphBuild {
  Graph graph;
  std::size_t duplicates = 0;
};

GraphBuild build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list);

// A graph together with a sign on every edge, indexed by EdgeId.
class SignedGraph {
 public:
  SignedGraph() = default;
  // Throws PreconditionViolated if signs.size() != graph.edge_count().
  SignedGraph(Graph graph, std::vector<Sign> signs);

  // Every edge positive.
  static SignedGraph all_positive(Graph graph);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }

  std::span<const Sign> signs() const noexcept { return signs_; }
  Sign sign(EdgeId e) const { return signs_.at(e); }
  // Throws EdgeNotInGraph.
  Sign sign(VertexId a, VertexId b) const;

  std::vector<EdgeId> positive_edges() const;
  std::vector<EdgeId> negative_edges() const;

  bool operator==(const SignedGraph&) const = default;

 private:
  Graph graph_;
  std::vector<Sign> signs_;
};

// Simple cycle as a cyclic vertex sequence; the closing edge back to the
// first vertex is implied.
struct Cycle {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool operator==(const Cycle&) const = default;
};

// Edge ids along c in traversal order, including the closing edge.
// Throws EdgeNotInGraph for a non-edge, PreconditionViolated if c has fewer
// than three vertices or repeats one.
std::vector<EdgeId> cycle_edges(const Graph& g, const Cycle& c);

// Rotates to start at the smallest vertex and orients so the second vertex
// is smaller than the last. Two cycles are the same iff their canonical
// forms are equal.
Cycle canonical_cycle(Cycle c);

inline constexpr std::size_t kDefaultCycleBudget = 1'000'000;

// Every simple cycle exactly once, in canonical form. Exponential; throws
// CycleBudgetExceeded once more than `budget` cycles have been found.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t budget = kDefaultCycleBudget);

Sign cycle_sign(const SignedGraph& sg, const Cycle& c);

// Components ordered by smallest member; members sorted ascending.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace setval

#endif  // SETVAL_GRAPH_HPP
