#ifndef PATHDECOMP_BATCH_HPP
#define PATHDECOMP_BATCH_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathdecomp {

struct BatchOptions {
  std::vector<int> n_list;
  int count = 1;
  std::uint64_t seed = 0;
  bool check_each_step = false;
  bool inject_resolve_fault = false;
  /// Where counterexample edge lists are written on failure.
  std::filesystem::path counterexample_dir = ".";
  /// Worker threads; replicates are independent.
  int jobs = 1;
};

struct BatchRow {
  int n = 0;
  int runs = 0;
  int passed = 0;
  long long cycle_steps = 0;
  long long exceptional_steps = 0;
  long long exceptional_fallbacks = 0;
  long long resolve_steps = 0;
  long long initial_tau = 0;
  long long pairs = 0;
  // Wall-clock totals per stage, in milliseconds; not deterministic.
  std::vector<std::pair<std::string, double>> stage_ms;
};

struct BatchSummary {
  std::vector<BatchRow> rows;
  int total_runs() const;
  int total_passed() const;
};

/// Raised when a replicate fails; the graph has been written to `path`.
class BatchFailure : public std::runtime_error {
 public:
  BatchFailure(std::filesystem::path path, const std::string& message)
      : std::runtime_error(message + " (graph written to " + path.string() + ")"), path_(std::move(path)) {}
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

/// Seed of replicate r at size n; a pure function of the batch seed.
std::uint64_t replicate_seed(std::uint64_t seed, int n, int replicate);

/// For each n and replicate: generate a random 8-regular graph, decompose,
/// verify. The first failure aborts the batch with BatchFailure.
BatchSummary run_batch(const BatchOptions& options);

}  // namespace pathdecomp

#endif  // PATHDECOMP_BATCH_HPP
