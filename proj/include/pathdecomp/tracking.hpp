#ifndef PATHDECOMP_TRACKING_HPP
#define PATHDECOMP_TRACKING_HPP

#include <array>
#include <span>
#include <vector>

#include "pathdecomp/graph.hpp"

namespace pathdecomp {

/// Shape of the trail induced by a 4-tracking in a simple graph. Exactly one
/// applies: five distinct vertices, a triangle closed at one end
/// (x0 == x3 or x1 == x4), or a 4-cycle (x0 == x4).
enum class TrailKind { Path, Triangle, Cycle };

const char* to_string(TrailKind kind);

/// A walk x0 x1 x2 x3 x4 whose four edges are pairwise distinct.
class Tracking {
 public:
  Tracking() = default;

  /// Throws PreconditionError if an edge id repeats.
  Tracking(const std::array<Vertex, 5>& vertices, const std::array<EdgeId, 4>& edges);

  /// Resolves the edge ids in `g`; throws PreconditionError if two
  /// consecutive vertices are not adjacent or an edge repeats.
  static Tracking from_vertices(const Graph& g, const std::array<Vertex, 5>& vertices);

  Vertex vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  EdgeId edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  const std::array<Vertex, 5>& vertices() const noexcept { return vertices_; }
  const std::array<EdgeId, 4>& edges() const noexcept { return edges_; }

  Vertex first() const { return vertices_[0]; }
  Vertex last() const { return vertices_[4]; }

  /// B^-: the same trail read backwards.
  Tracking reversed() const;

  TrailKind kind() const;
  bool is_path() const { return kind() == TrailKind::Path; }
  bool is_cycle() const { return kind() == TrailKind::Cycle; }
  bool has_triangle() const { return kind() == TrailKind::Triangle; }

  bool contains_vertex(Vertex v) const;
  bool contains_edge(EdgeId e) const;

  /// Every edge i joins vertices i and i+1 in `g`.
  bool consistent_with(const Graph& g) const;

  friend bool operator==(const Tracking&, const Tracking&) = default;

 private:
  std::array<Vertex, 5> vertices_{kNoVertex, kNoVertex, kNoVertex, kNoVertex, kNoVertex};
  std::array<EdgeId, 4> edges_{kNoEdge, kNoEdge, kNoEdge, kNoEdge};
};

inline Tracking reverse(const Tracking& t) { return t.reversed(); }

/// Number of 4-cycles among the trackings.
int tau(std::span<const Tracking> trackings);
/// Number of trackings that induce paths.
int tau_prime(std::span<const Tracking> trackings);

/// B(v): how many tracking end-edges point at v (x1->x0 and x3->x4 enter
/// the final vertices), i.e. how many times v is a final vertex.
std::vector<int> end_counts(int vertex_count, std::span<const Tracking> trackings);

/// prehang(v, B): how many tracking end-edges leave v (v sits at x1 or x3).
std::vector<int> prehang_counts(int vertex_count, std::span<const Tracking> trackings);

/// True if every edge of `g` lies in exactly one tracking.
bool is_edge_partition(const Graph& g, std::span<const Tracking> trackings);

}  // namespace pathdecomp

#endif  // PATHDECOMP_TRACKING_HPP
