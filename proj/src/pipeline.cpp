#include "pathdecomp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <type_traits>
#include <string>
#include <utility>

#include "pathdecomp/completion.hpp"
#include "pathdecomp/errors.hpp"
#include "pathdecomp/extensions.hpp"
#include "pathdecomp/factorize.hpp"
#include "pathdecomp/good_orientation.hpp"
#include "pathdecomp/trapped.hpp"

namespace pathdecomp {

namespace {

template <class Fn>
auto run_stage(PipelineStats& stats, const std::string& name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto record = [&] {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    stats.timings.push_back({name, std::chrono::duration<double, std::milli>(elapsed).count()});
  };
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record();
    } else {
      auto result = fn();
      record();
      return result;
    }
  } catch (const InternalError&) {
    throw;
  } catch (const std::exception& e) {
    throw InternalError(name, e.what());
  }
}

void require(bool condition, const std::string& stage, const std::string& what) {
  if (!condition) throw InternalError(stage, what);
}

void check_fact_counters(const Graph& g, const std::vector<Tracking>& b, const std::string& stage) {
  const auto ends = end_counts(g.vertex_count(), b);
  const auto hanging = prehang_counts(g.vertex_count(), b);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    require(ends[static_cast<std::size_t>(v)] == 2 && hanging[static_cast<std::size_t>(v)] == 2, stage,
            "end/hanging counters at vertex " + std::to_string(v) + " are " +
                std::to_string(ends[static_cast<std::size_t>(v)]) + "/" +
                std::to_string(hanging[static_cast<std::size_t>(v)]));
  }
  require(is_edge_partition(g, b), stage, "elements do not partition the edges");
}

}  // namespace

PipelineResult decompose_with_split(const Graph& g, const EdgeSet& f1, const EdgeSet& f2, const P2Decomposition& d,
                                    const PipelineOptions& options) {
  PipelineResult result;
  PipelineStats& st = result.stats;
  st.n = g.vertex_count();
  st.m = g.edge_count();
  const bool checks = options.check_stage_invariants;

  if (checks) {
    require(validate_regular(g, f1, 4).ok && validate_regular(g, f2, 4).ok, "split", "factors are not 4-regular");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      require(d.paths_ending_at(v).size() == 2, "p2", "vertex " + std::to_string(v) + " is not the end of two paths");
    }
  }

  const TrappedReport report = run_stage(st, "trapped", [&] { return analyze(g, f2, d); });
  st.trapped_edges = static_cast<int>(report.trapped_edges().size());
  for (EdgeId e : report.trapped_edges()) st.double_trapped += report.double_trapped(e) ? 1 : 0;
  st.trapped_p2s = static_cast<int>(report.trapped_p2s.size());
  st.trapped_triangles = static_cast<int>(report.trapped_triangles.size());
  st.trapped_k4s = static_cast<int>(report.trapped_k4s.size());
  st.chains = static_cast<int>(report.chains.size());

  const GoodOrientation go = run_stage(st, "orientation", [&] { return good_orientation(g, report); });
  if (checks) {
    const GoodReport good = check_good(g, go);
    require(good.ok, "orientation",
            good.ok ? "" : std::string("check_good: ") + to_string(good.violations.front().rule) + " " +
                               good.violations.front().detail);
  }

  ExtensionDecomposition ext(g, d, go.orientation);
  CycleEliminationStats cycle_stats;
  run_stage(st, "eliminate_cycles", [&] { eliminate_cycles(ext, &cycle_stats); });
  st.initial_tau = cycle_stats.initial_tau;
  st.cycle_steps = cycle_stats.steps;
  st.tau_trace = cycle_stats.tau_trace;
  if (checks) {
    require(ext.tau() == 0, "eliminate_cycles", "4-cycles remain");
    check_fact_counters(g, ext.trackings(), "eliminate_cycles");
  }

  ExceptionalStats ex_stats;
  const auto extensions = run_stage(st, "make_exceptional", [&] { return make_exceptional(ext, go.report, &ex_stats); });
  st.exceptional_steps = ex_stats.steps;
  st.exceptional_fallbacks = ex_stats.fallback;
  st.tau_prime_trace = ex_stats.tau_prime_trace;
  st.pairs = static_cast<int>(extensions.size());

  std::vector<Tracking> b = ext.trackings();
  std::vector<ExceptionalPair> pairs;
  for (const ExceptionalExtension& x : extensions) pairs.push_back({x.triangle, x.partner});
  if (checks) {
    check_fact_counters(g, b, "make_exceptional");
    std::vector<int> membership_count(b.size(), 0);
    for (const ExceptionalPair& p : pairs) ++membership_count[static_cast<std::size_t>(p.triangle)];
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].has_triangle()) {
        require(membership_count[i] == 1, "make_exceptional",
                "triangle element " + std::to_string(i) + " lies in " + std::to_string(membership_count[i]) +
                    " pairs");
      }
    }
    const auto complete = verify_complete(g, b, pairs);
    require(complete.ok, "complete",
            complete.ok ? "" : "item " + complete.violations.front().item + ": " + complete.violations.front().detail);
  }

  ResolveStats resolve_stats;
  ResolveOptions resolve_options;
  resolve_options.check_each_step = options.check_each_step;
  resolve_options.inject_fault = options.inject_resolve_fault;
  result.trackings = run_stage(st, "resolve", [&] {
    return resolve_exceptional(g, std::move(b), std::move(pairs), resolve_options, &resolve_stats);
  });
  st.resolve_steps = resolve_stats.steps;
  st.tau_prime_trace.insert(st.tau_prime_trace.end(), resolve_stats.tau_prime_trace.begin(),
                            resolve_stats.tau_prime_trace.end());

  for (const Tracking& t : result.trackings) result.paths.push_back(t.vertices());
  return result;
}

PipelineResult decompose(const Graph& g, const PipelineOptions& options) {
  if (const auto report = validate_regular(g, 8); !report.ok) {
    throw PreconditionError("decompose needs an 8-regular graph; vertex " +
                            std::to_string(report.offenders.front().first) + " has degree " +
                            std::to_string(report.offenders.front().second));
  }
  PipelineStats pre;
  const Factorization two = run_stage(pre, "factorize", [&] { return two_factorization(g); });
  if (options.check_stage_invariants) {
    require(two.factors.size() == 4, "factorize", "expected four 2-factors");
    for (const EdgeSet& f : two.factors) require(validate_regular(g, f, 2).ok, "factorize", "factor is not 2-regular");
  }
  const FourFactors ff = merge_into_four_factors(two);
  const P2Decomposition d = run_stage(pre, "p2", [&] { return balanced_p2_decomposition(g, ff.first); });

  PipelineResult result = decompose_with_split(g, ff.first, ff.second, d, options);
  result.stats.timings.insert(result.stats.timings.begin(), pre.timings.begin(), pre.timings.end());
  return result;
}

}  // namespace pathdecomp
