#include "pathdecomp/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "pathdecomp/errors.hpp"

namespace pathdecomp {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(vertex_count), adjacency_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw PreconditionError("edge " + std::to_string(u) + " " + std::to_string(v) +
                              " has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(pair_key(u, v)).second) {
      throw PreconditionError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    adjacency_[static_cast<std::size_t>(u)].push_back({v, id});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, id});
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  // Scan the shorter list; degrees are small in every graph this library targets.
  if (degree(u) > degree(v)) std::swap(u, v);
  for (const Incidence& inc : incident(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

std::vector<char> membership(const Graph& g, const EdgeSet& edges) {
  std::vector<char> in(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : edges) in[static_cast<std::size_t>(e)] = 1;
  return in;
}

std::vector<int> subgraph_degrees(const Graph& g, const EdgeSet& edges) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  return deg;
}

namespace {

RegularityReport regularity_from_degrees(const std::vector<int>& deg, int k) {
  RegularityReport report;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] != k) report.offenders.emplace_back(static_cast<Vertex>(v), deg[v]);
  }
  report.ok = report.offenders.empty();
  return report;
}

}  // namespace

RegularityReport validate_regular(const Graph& g, int k) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  return regularity_from_degrees(deg, k);
}

RegularityReport validate_regular(const Graph& g, const EdgeSet& edges, int k) {
  return regularity_from_degrees(subgraph_degrees(g, edges), k);
}

Orientation::Orientation(const Graph& g)
    : graph_(&g),
      tail_(static_cast<std::size_t>(g.edge_count()), kNoVertex),
      out_(static_cast<std::size_t>(g.vertex_count()), 0),
      in_(static_cast<std::size_t>(g.vertex_count()), 0) {}

void Orientation::orient(EdgeId e, Vertex tail) {
  const Edge& ed = graph_->edge(e);
  if (tail != ed.u && tail != ed.v) {
    throw PreconditionError("vertex " + std::to_string(tail) + " is not an endpoint of edge " +
                            std::to_string(e));
  }
  clear(e);
  tail_[static_cast<std::size_t>(e)] = tail;
  ++out_[static_cast<std::size_t>(tail)];
  ++in_[static_cast<std::size_t>(graph_->other_end(e, tail))];
}

void Orientation::clear(EdgeId e) {
  const Vertex t = tail_[static_cast<std::size_t>(e)];
  if (t == kNoVertex) return;
  --out_[static_cast<std::size_t>(t)];
  --in_[static_cast<std::size_t>(graph_->other_end(e, t))];
  tail_[static_cast<std::size_t>(e)] = kNoVertex;
}

Vertex Orientation::head(EdgeId e) const {
  const Vertex t = tail(e);
  return t == kNoVertex ? kNoVertex : graph_->other_end(e, t);
}

std::vector<EdgeId> Orientation::out_edges(Vertex v) const {
  std::vector<EdgeId> out;
  for (const Incidence& inc : graph_->incident(v)) {
    if (tail(inc.edge) == v) out.push_back(inc.edge);
  }
  return out;
}

bool Orientation::is_eulerian() const {
  return out_ == in_;
}

Orientation Orientation::reversed() const {
  Orientation r(*graph_);
  for (EdgeId e = 0; e < graph_->edge_count(); ++e) {
    if (is_oriented(e)) r.orient(e, head(e));
  }
  return r;
}

}  // namespace pathdecomp
