#ifndef PATHDECOMP_TESTS_SUPPORT_HPP
#define PATHDECOMP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathdecomp/completion.hpp"
#include "pathdecomp/extensions.hpp"
#include "pathdecomp/factorize.hpp"
#include "pathdecomp/good_orientation.hpp"
#include "pathdecomp/graph.hpp"
#include "pathdecomp/p2_decomposition.hpp"
#include "pathdecomp/trapped.hpp"

namespace testsupport {

using namespace pathdecomp;

/// Everything the pipeline holds just before resolution, built stage by stage.
/// Orientations point at `g`, so a Staged is built in place and never moved.
struct Staged {
  Staged(Graph graph, EdgeSet first, EdgeSet second, P2Decomposition paths);
  Staged(const Staged&) = delete;
  Staged& operator=(const Staged&) = delete;

  Graph g;
  EdgeSet f1;
  EdgeSet f2;
  P2Decomposition d;
  TrappedReport report;
  GoodOrientation go;
  std::vector<Tracking> before_cycles;
  std::vector<Tracking> after_cycles;
  std::vector<Tracking> exceptional;
  std::vector<ExceptionalPair> pairs;
  CycleEliminationStats cycle_stats;
  ExceptionalStats exceptional_stats;
};

Staged stage(Graph g);

/// A split G = F1 + F2 with a P2 decomposition D of F1, designed so that the
/// end pairs of D trap chosen edges of F2.
struct Split {
  Graph g;
  EdgeSet f1;
  EdgeSet f2;
  P2Decomposition d;
};

/// Builds a split from a 4-regular F2 on n vertices and the end-pair graph of
/// D: a 2-regular multigraph given as closed vertex sequences (a 2-element
/// sequence is a doubled pair). Vertices not covered by `cycles` are joined
/// into extra cycles avoiding F2. Centers are then matched to end pairs by a
/// seeded backtracking search so that F1 is simple and disjoint from F2.
/// Returns nullopt if the search fails.
std::optional<Split> build_split(int n, const std::vector<std::pair<Vertex, Vertex>>& f2_edges,
                                 const std::vector<std::vector<Vertex>>& cycles, std::uint64_t seed);

/// Adversarial instance: F2 is CIRC(40;1,2) + K5 + CIRC(7;1,2) and the end
/// pairs of D trap, in separate regions, one P2, one triangle, one square, one
/// double edge, open chains of sizes 1, 2 and 3, a K4 and a closed chain of
/// size 7.
std::optional<Split> gadget_instance(std::uint64_t seed);

/// F2 edges forming a disjoint union of the given 4-regular blocks.
std::vector<std::pair<Vertex, Vertex>> circulant_edges(int offset, int n, std::vector<int> steps);

}  // namespace testsupport

#endif
