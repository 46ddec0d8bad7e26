#ifndef PATHDECOMP_TRAPPED_HPP
#define PATHDECOMP_TRAPPED_HPP

#include <array>
#include <utility>
#include <vector>

#include "pathdecomp/graph.hpp"
#include "pathdecomp/p2_decomposition.hpp"

namespace pathdecomp {

/// Induced path u v w of the second factor whose two edges are trapped and
/// whose ends u, w are the ends of some path of the decomposition.
struct TrappedP2 {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  Vertex w = kNoVertex;
  EdgeId uv = kNoEdge;
  EdgeId vw = kNoEdge;
  int path_uw = -1;
};

struct TrappedTriangle {
  std::array<Vertex, 3> vertices{};
  /// edges[i] joins vertices[i] and vertices[(i + 1) % 3].
  std::array<EdgeId, 3> edges{};
};

/// K4 of the second factor whose trapped edges form the 4-cycle
/// cycle[0..3]; chords[0] joins cycle[0], cycle[2] and chords[1] joins
/// cycle[1], cycle[3].
struct TrappedK4 {
  std::array<Vertex, 4> cycle{};
  std::array<EdgeId, 4> cycle_edges{};
  std::array<EdgeId, 2> chords{};
};

/// Triangle with exactly two trapped edges, left-center and center-right.
struct QuasiTriangle {
  Vertex left = kNoVertex;
  Vertex center = kNoVertex;
  Vertex right = kNoVertex;
  EdgeId left_edge = kNoEdge;
  EdgeId right_edge = kNoEdge;
  EdgeId chord = kNoEdge;
  bool in_k4 = false;
};

/// Maximal sequence of quasi-trapped triangles, consecutive ones sharing a
/// trapped edge. triangles[i] is centered at spine[i + 1] (indices mod k when
/// closed) and chords[i] joins spine[i] and spine[i + 2].
///   open:   spine a0..a_{k+1}, spine_edges[i] joins a_i a_{i+1}, i = 0..k
///   closed: spine a0..a_{k-1}, spine_edges[i] joins a_i a_{i+1 mod k}
struct Chain {
  std::vector<int> triangles;
  bool closed = false;
  std::vector<Vertex> spine;
  std::vector<EdgeId> spine_edges;
  std::vector<EdgeId> chords;

  int size() const { return static_cast<int>(triangles.size()); }
};

struct TrappedReport {
  /// Per edge of the parent graph: indices of the trapping paths (empty when
  /// the edge is not trapped or lies outside the second factor).
  std::vector<std::vector<int>> trapped;
  std::vector<char> in_factor;

  std::vector<EdgeId> free_edges;
  std::vector<TrappedP2> trapped_p2s;
  std::vector<TrappedTriangle> trapped_triangles;
  std::vector<TrappedK4> trapped_k4s;
  std::vector<QuasiTriangle> quasi_triangles;
  std::vector<Chain> chains;

  /// Pairs of single-triangle chains whose triangles share their untrapped
  /// chord: a trapped 4-cycle with exactly one chord in the factor. Neither
  /// a K4 nor a chain in the usual sense; the orientation treats each pair
  /// as one gadget.
  std::vector<std::pair<int, int>> chord_sharing_chains;

  bool is_trapped(EdgeId e) const { return !trapped[static_cast<std::size_t>(e)].empty(); }
  bool double_trapped(EdgeId e) const { return trapped[static_cast<std::size_t>(e)].size() == 2; }
  std::vector<EdgeId> trapped_edges() const;
};

/// Classifies the trapped structure of `factor` against a balanced P2
/// decomposition of the complementary factor. Throws PreconditionError if
/// `factor` is not 4-regular or `d` uses one of its edges.
TrappedReport analyze(const Graph& g, const EdgeSet& factor, const P2Decomposition& d);

/// Groups the quasi-trapped triangles that are not inside trapped K4s into
/// maximal chains. Chains are seeded from the unvisited triangle whose lowest
/// trapped edge id is smallest.
std::vector<Chain> chain_decompose(const Graph& g, const TrappedReport& report);

}  // namespace pathdecomp

#endif  // PATHDECOMP_TRAPPED_HPP
