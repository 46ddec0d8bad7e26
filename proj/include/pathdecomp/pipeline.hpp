#ifndef PATHDECOMP_PIPELINE_HPP
#define PATHDECOMP_PIPELINE_HPP

#include <array>
#include <string>
#include <vector>

#include "pathdecomp/graph.hpp"
#include "pathdecomp/p2_decomposition.hpp"
#include "pathdecomp/tracking.hpp"

namespace pathdecomp {

struct PipelineOptions {
  /// Assert the structural invariants between stages (factor regularity,
  /// path balance, goodness, counters, pairing).
  bool check_stage_invariants = true;
  /// Re-verify completeness after every resolution commit.
  bool check_each_step = false;
  bool inject_resolve_fault = false;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct PipelineStats {
  int n = 0;
  int m = 0;
  int trapped_edges = 0;
  int double_trapped = 0;
  int trapped_p2s = 0;
  int trapped_triangles = 0;
  int trapped_k4s = 0;
  int chains = 0;
  int initial_tau = 0;
  int cycle_steps = 0;
  int exceptional_steps = 0;
  int exceptional_fallbacks = 0;
  int pairs = 0;
  int resolve_steps = 0;
  std::vector<int> tau_trace;
  std::vector<int> tau_prime_trace;  // make_exceptional, then resolve
  std::vector<StageTiming> timings;
};

struct PipelineResult {
  std::vector<Tracking> trackings;
  std::vector<std::array<Vertex, 5>> paths;
  PipelineStats stats;
};

/// Balanced decomposition of a simple 8-regular graph into paths of length 4.
/// Throws PreconditionError on other inputs and InternalError (carrying the
/// stage name) if a stage breaks its contract.
PipelineResult decompose(const Graph& g, const PipelineOptions& options = {});

/// Runs every stage after the P2 decomposition on a given split: f1 and f2
/// partition E(g) into 4-regular factors and d is a balanced P2
/// decomposition of f1.
PipelineResult decompose_with_split(const Graph& g, const EdgeSet& f1, const EdgeSet& f2, const P2Decomposition& d,
                                    const PipelineOptions& options = {});

}  // namespace pathdecomp

#endif  // PATHDECOMP_PIPELINE_HPP
