#ifndef PATHDECOMP_P2_DECOMPOSITION_HPP
#define PATHDECOMP_P2_DECOMPOSITION_HPP

#include <map>
#include <utility>
#include <vector>

#include "pathdecomp/graph.hpp"

namespace pathdecomp {

/// Path end_a - center - end_b; end_a < end_b. edge_a joins end_a and the
/// center, edge_b joins the center and end_b.
struct P2Path {
  Vertex end_a = kNoVertex;
  Vertex center = kNoVertex;
  Vertex end_b = kNoVertex;
  EdgeId edge_a = kNoEdge;
  EdgeId edge_b = kNoEdge;

  Vertex other_end(Vertex v) const { return v == end_a ? end_b : end_a; }
  EdgeId edge_at(Vertex end) const { return end == end_a ? edge_a : edge_b; }

  friend bool operator==(const P2Path&, const P2Path&) = default;
};

/// Balanced decomposition of a 4-regular factor into paths of length 2.
/// Path i is centered at vertex i, so there are exactly n paths.
class P2Decomposition {
 public:
  P2Decomposition() = default;
  P2Decomposition(int vertex_count, std::vector<P2Path> paths);

  int vertex_count() const noexcept { return n_; }
  const std::vector<P2Path>& paths() const noexcept { return paths_; }
  const P2Path& path(int i) const { return paths_[static_cast<std::size_t>(i)]; }

  /// Indices of the paths having v as an end (two, ordered by index).
  const std::vector<int>& paths_ending_at(Vertex v) const { return by_end_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& paths_centered_at(Vertex v) const { return by_center_[static_cast<std::size_t>(v)]; }

 private:
  int n_ = 0;
  std::vector<P2Path> paths_;
  std::vector<std::vector<int>> by_end_;
  std::vector<std::vector<int>> by_center_;
};

/// Eulerian orientation of the factor, then P_v = the two edges leaving v.
/// Throws PreconditionError unless `factor` is spanning and 4-regular.
P2Decomposition balanced_p2_decomposition(const Graph& g, const EdgeSet& factor);

/// Unordered end pair (smaller id first) -> indices of paths with those ends.
std::map<std::pair<Vertex, Vertex>, std::vector<int>> trapping_ends(const P2Decomposition& d);

}  // namespace pathdecomp

#endif  // PATHDECOMP_P2_DECOMPOSITION_HPP
