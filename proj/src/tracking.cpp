#include "pathdecomp/tracking.hpp"

#include <algorithm>
#include <string>

#include "pathdecomp/errors.hpp"

namespace pathdecomp {

const char* to_string(TrailKind kind) {
  switch (kind) {
    case TrailKind::Path: return "path";
    case TrailKind::Triangle: return "triangle";
    case TrailKind::Cycle: return "cycle";
  }
  return "?";
}

Tracking::Tracking(const std::array<Vertex, 5>& vertices, const std::array<EdgeId, 4>& edges)
    : vertices_(vertices), edges_(edges) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (edges_[i] == edges_[j]) {
        throw PreconditionError("tracking reuses edge " + std::to_string(edges_[i]));
      }
    }
  }
}

Tracking Tracking::from_vertices(const Graph& g, const std::array<Vertex, 5>& vertices) {
  std::array<EdgeId, 4> edges{};
  for (int i = 0; i < 4; ++i) {
    auto e = g.find_edge(vertices[i], vertices[i + 1]);
    if (!e) {
      throw PreconditionError("vertices " + std::to_string(vertices[i]) + " and " +
                              std::to_string(vertices[i + 1]) + " are not adjacent");
    }
    edges[i] = *e;
  }
  return Tracking(vertices, edges);
}

Tracking Tracking::reversed() const {
  Tracking r;
  std::reverse_copy(vertices_.begin(), vertices_.end(), r.vertices_.begin());
  std::reverse_copy(edges_.begin(), edges_.end(), r.edges_.begin());
  return r;
}

TrailKind Tracking::kind() const {
  if (vertices_[0] == vertices_[4]) return TrailKind::Cycle;
  if (vertices_[0] == vertices_[3] || vertices_[1] == vertices_[4]) return TrailKind::Triangle;
  return TrailKind::Path;
}

bool Tracking::contains_vertex(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Tracking::contains_edge(EdgeId e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

bool Tracking::consistent_with(const Graph& g) const {
  for (int i = 0; i < 4; ++i) {
    if (edges_[i] < 0 || edges_[i] >= g.edge_count()) return false;
    const Edge& e = g.edge(edges_[i]);
    const bool forward = e.u == vertices_[i] && e.v == vertices_[i + 1];
    const bool backward = e.v == vertices_[i] && e.u == vertices_[i + 1];
    if (!forward && !backward) return false;
  }
  return true;
}

int tau(std::span<const Tracking> trackings) {
  return static_cast<int>(
      std::count_if(trackings.begin(), trackings.end(), [](const Tracking& t) { return t.is_cycle(); }));
}

int tau_prime(std::span<const Tracking> trackings) {
  return static_cast<int>(
      std::count_if(trackings.begin(), trackings.end(), [](const Tracking& t) { return t.is_path(); }));
}

std::vector<int> end_counts(int vertex_count, std::span<const Tracking> trackings) {
  std::vector<int> count(static_cast<std::size_t>(vertex_count), 0);
  for (const Tracking& t : trackings) {
    ++count[static_cast<std::size_t>(t.first())];
    ++count[static_cast<std::size_t>(t.last())];
  }
  return count;
}

std::vector<int> prehang_counts(int vertex_count, std::span<const Tracking> trackings) {
  std::vector<int> count(static_cast<std::size_t>(vertex_count), 0);
  for (const Tracking& t : trackings) {
    ++count[static_cast<std::size_t>(t.vertex(1))];
    ++count[static_cast<std::size_t>(t.vertex(3))];
  }
  return count;
}

bool is_edge_partition(const Graph& g, std::span<const Tracking> trackings) {
  std::vector<int> used(static_cast<std::size_t>(g.edge_count()), 0);
  for (const Tracking& t : trackings) {
    if (!t.consistent_with(g)) return false;
    for (EdgeId e : t.edges()) ++used[static_cast<std::size_t>(e)];
  }
  return std::all_of(used.begin(), used.end(), [](int c) { return c == 1; });
}

}  // namespace pathdecomp
