#include "pathdecomp/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "pathdecomp/errors.hpp"
#include "pathdecomp/graph_io.hpp"
#include "pathdecomp/pipeline.hpp"
#include "pathdecomp/verify.hpp"

namespace pathdecomp {

int BatchSummary::total_runs() const {
  int total = 0;
  for (const BatchRow& r : rows) total += r.runs;
  return total;
}

int BatchSummary::total_passed() const {
  int total = 0;
  for (const BatchRow& r : rows) total += r.passed;
  return total;
}

std::uint64_t replicate_seed(std::uint64_t seed, int n, int replicate) {
  // splitmix64 over the mixed coordinates
  std::uint64_t z = seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(replicate);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Outcome {
  PipelineStats stats;
  std::optional<std::string> failure;
  std::string graph_text;
};

Outcome run_one(int n, std::uint64_t seed, const BatchOptions& options) {
  Outcome out;
  const Graph g = generate_random_regular(n, 8, seed);
  PipelineOptions po;
  po.check_each_step = options.check_each_step;
  po.inject_resolve_fault = options.inject_resolve_fault;
  try {
    const PipelineResult result = decompose(g, po);
    out.stats = result.stats;
    const VerifyReport report = verify_decomposition(g, result.paths);
    if (!report.ok) {
      const VerifyFailure& f = report.failures.front();
      out.failure = "verification failed: " + f.check + ": " + f.detail;
    }
  } catch (const Error& e) {
    out.failure = e.what();
  }
  if (out.failure) out.graph_text = write_edge_list(g);
  return out;
}

}  // namespace

BatchSummary run_batch(const BatchOptions& options) {
  struct Job {
    int n;
    int replicate;
  };
  std::vector<Job> jobs;
  for (int n : options.n_list) {
    if (n < 9) throw PreconditionError("batch sizes must be at least 9");
    for (int r = 0; r < options.count; ++r) jobs.push_back({n, r});
  }
  std::vector<std::optional<Outcome>> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size() && !stop; i = next++) {
      outcomes[i] = run_one(jobs[i].n, replicate_seed(options.seed, jobs[i].n, jobs[i].replicate), options);
      if (outcomes[i]->failure) stop = true;
    }
  };
  const int threads = std::max(1, options.jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // First failure in job order, so the reported counterexample is stable.
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!outcomes[i] || !outcomes[i]->failure) continue;
    const auto path = options.counterexample_dir / ("counterexample_n" + std::to_string(jobs[i].n) + "_r" +
                                                    std::to_string(jobs[i].replicate) + ".txt");
    std::ofstream file(path);
    file << "# seed " << replicate_seed(options.seed, jobs[i].n, jobs[i].replicate) << '\n'
         << outcomes[i]->graph_text;
    throw BatchFailure(path, "n=" + std::to_string(jobs[i].n) + " replicate " + std::to_string(jobs[i].replicate) +
                                 ": " + *outcomes[i]->failure);
  }

  BatchSummary summary;
  std::map<int, std::size_t> row_of;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [it, fresh] = row_of.emplace(jobs[i].n, summary.rows.size());
    if (fresh) {
      BatchRow fresh_row;
      fresh_row.n = jobs[i].n;
      summary.rows.push_back(std::move(fresh_row));
    }
    BatchRow& row = summary.rows[it->second];
    const PipelineStats& s = outcomes[i]->stats;
    ++row.runs;
    ++row.passed;
    row.cycle_steps += s.cycle_steps;
    row.exceptional_steps += s.exceptional_steps;
    row.exceptional_fallbacks += s.exceptional_fallbacks;
    row.resolve_steps += s.resolve_steps;
    row.initial_tau += s.initial_tau;
    row.pairs += s.pairs;
    for (const StageTiming& t : s.timings) {
      auto slot = std::find_if(row.stage_ms.begin(), row.stage_ms.end(),
                               [&](const auto& p) { return p.first == t.stage; });
      if (slot == row.stage_ms.end()) {
        row.stage_ms.emplace_back(t.stage, t.milliseconds);
      } else {
        slot->second += t.milliseconds;
      }
    }
  }
  return summary;
}

}  // namespace pathdecomp
