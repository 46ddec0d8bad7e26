#ifndef PATHDECOMP_GOOD_ORIENTATION_HPP
#define PATHDECOMP_GOOD_ORIENTATION_HPP

#include <string>
#include <vector>

#include "pathdecomp/graph.hpp"
#include "pathdecomp/trapped.hpp"

namespace pathdecomp {

struct GoodOrientation {
  Orientation orientation;
  TrappedReport report;
  /// Size of the auxiliary multigraph that was Euler-oriented.
  int aux_vertices = 0;
  int aux_edges = 0;
};

/// Eulerian orientation of the factor recorded in `report` that is
/// consistent on trapped P2s, Eulerian on trapped triangles and Eulerian or
/// centered on quasi-trapped triangles. Gadgets are replaced by surrogate
/// edges, the resulting even multigraph is oriented, and each gadget is then
/// reinstalled with a pattern matching its surrogate's direction. Throws
/// PreconditionError when the report does not describe a 4-regular factor of
/// `g`, InternalError if the surrogate graph has an odd vertex.
GoodOrientation good_orientation(const Graph& g, const TrappedReport& report);

/// How an orientation meets a triangle with trapped edges left-center and
/// center-right.
enum class TriangleOrientation {
  Eulerian,  // directed 3-cycle
  Centered,  // both trapped edges enter, or both leave, the center
  Through,   // neither: a transitive triangle through the center
};

const char* to_string(TriangleOrientation t);

TriangleOrientation classify(const Orientation& o, const QuasiTriangle& t);

enum class GoodRule { Eulerian, TrappedP2, TrappedTriangle, QuasiTriangle };

const char* to_string(GoodRule r);

struct GoodViolation {
  GoodRule rule;
  std::vector<Vertex> witness;
  std::string detail;
};

struct GoodReport {
  bool ok = true;
  std::vector<GoodViolation> violations;
};

/// Checks every condition of a good orientation independently of how `o`
/// was built.
GoodReport check_good(const Graph& g, const TrappedReport& report, const Orientation& o);
inline GoodReport check_good(const Graph& g, const GoodOrientation& go) {
  return check_good(g, go.report, go.orientation);
}

}  // namespace pathdecomp

#endif  // PATHDECOMP_GOOD_ORIENTATION_HPP
