#ifndef PATHDECOMP_GRAPH_HPP
#define PATHDECOMP_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pathdecomp {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor = kNoVertex;
  EdgeId edge = kNoEdge;
};

/// Simple undirected graph on vertices 0..n-1. Edge ids are dense and follow
/// construction order. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on a self-loop, a repeated pair or an
  /// out-of-range endpoint.
  Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  /// Endpoint of `e` opposite to `v`.
  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A sorted list of edge ids of some parent graph.
using EdgeSet = std::vector<EdgeId>;

/// Indicator vector over E(g).
std::vector<char> membership(const Graph& g, const EdgeSet& edges);

/// Degree of every vertex inside the subgraph spanned by `edges`.
std::vector<int> subgraph_degrees(const Graph& g, const EdgeSet& edges);

struct RegularityReport {
  bool ok = true;
  /// (vertex, observed degree) for every vertex whose degree differs from k.
  std::vector<std::pair<Vertex, int>> offenders;
};

RegularityReport validate_regular(const Graph& g, int k);
RegularityReport validate_regular(const Graph& g, const EdgeSet& edges, int k);

/// Direction assignment on a subset of the edges of a graph. The graph must
/// outlive the orientation.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(const Graph& g);

  /// Directs `e` away from `tail`; `tail` must be an endpoint of `e`.
  void orient(EdgeId e, Vertex tail);
  void clear(EdgeId e);

  bool is_oriented(EdgeId e) const { return tail_[static_cast<std::size_t>(e)] != kNoVertex; }
  Vertex tail(EdgeId e) const { return tail_[static_cast<std::size_t>(e)]; }
  Vertex head(EdgeId e) const;
  bool leaves(EdgeId e, Vertex v) const { return tail(e) == v; }

  int out_degree(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  int in_degree(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }

  /// Oriented edges leaving `v`, in adjacency order.
  std::vector<EdgeId> out_edges(Vertex v) const;

  /// True when every vertex has equal in- and out-degree.
  bool is_eulerian() const;

  /// O^-: every oriented edge flipped.
  Orientation reversed() const;

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_ = nullptr;
  std::vector<Vertex> tail_;
  std::vector<int> out_;
  std::vector<int> in_;
};

}  // namespace pathdecomp

#endif  // PATHDECOMP_GRAPH_HPP
