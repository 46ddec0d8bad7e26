#ifndef PATHDECOMP_COMPLETION_HPP
#define PATHDECOMP_COMPLETION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pathdecomp/graph.hpp"
#include "pathdecomp/tracking.hpp"

namespace pathdecomp {

/// Indices into a tracking list: a triangle element and the path element
/// sharing its middle ends.
struct ExceptionalPair {
  int triangle = -1;
  int path = -1;

  friend bool operator==(const ExceptionalPair&, const ExceptionalPair&) = default;
};

/// A pair read in its standard form:
///   t1 = a1 b c1 d e1   (path)
///   t2 = a2 b c2 d b    (triangle, closing along the pivotal edge bd)
/// b has degree 5 in t1 + t2 and is taken as the center.
struct PairView {
  Tracking t1;
  Tracking t2;
  Vertex a1, b, c1, d, e1, a2, c2;
  EdgeId pivotal;
};

/// Reads a pair in standard form; nullopt if the two elements do not have
/// that shape.
std::optional<PairView> view_pair(const std::vector<Tracking>& b, const ExceptionalPair& pair);

struct CompletenessViolation {
  std::string item;  // "balance", "cycle", "i", "ii", "iii", "pair"
  std::vector<Vertex> witness;
  std::string detail;
};

struct CompletenessReport {
  bool ok = true;
  std::vector<CompletenessViolation> violations;
};

/// Balanced and cycle-free, plus: (i) every vertex has a hanging edge;
/// (ii) every triangle element is the triangle of a listed pair; (iii) an
/// element holding the center of a pair and a hanging edge at one of its
/// connection vertices has the center as an end.
CompletenessReport verify_complete(const Graph& g, const std::vector<Tracking>& b,
                                   const std::vector<ExceptionalPair>& pairs);

struct ResolveOptions {
  bool check_each_step = false;
  /// Test hook: corrupts the result after the last commit.
  bool inject_fault = false;
};

struct ResolveStats {
  int steps = 0;
  std::vector<int> tau_prime_trace;
};

/// Rewrites each pair together with an element hanging at one of its
/// connection vertices into three trackings, two of them paths, until no
/// triangle is left. Throws PreconditionError if the input is not complete
/// and InternalError if a commit breaks balance or fails to raise tau'.
std::vector<Tracking> resolve_exceptional(const Graph& g, std::vector<Tracking> b,
                                          std::vector<ExceptionalPair> pairs, const ResolveOptions& options = {},
                                          ResolveStats* stats = nullptr);

}  // namespace pathdecomp

#endif  // PATHDECOMP_COMPLETION_HPP
