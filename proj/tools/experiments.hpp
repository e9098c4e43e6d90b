#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tganon/anonymizer.hpp"
#include "tganon/graph.hpp"
#include "tganon/metrics.hpp"
#include "tganon/realizability.hpp"

namespace tganon::experiments {

/// RNG for the synthetic graph identified by (seed, theta). The synth command
/// and the experiment suites share it, so `tganon synth` reproduces the
/// corpora the suites run on.
std::mt19937_64 corpus_rng(std::uint64_t seed, double theta);

struct Summary {
  double mean = 0.0;
  double std_error = 0.0;  ///< sample standard deviation / sqrt(count); 0 for one value
};
Summary summarize(const std::vector<double>& values);

struct SweepOptions {
  std::size_t num_nodes = 100;
  std::size_t num_slices = 10;
  double p0 = 0.1;
  std::vector<double> thetas;
  std::vector<std::size_t> ks;
  std::size_t seeds = 20;
  std::uint64_t first_seed = 0;
  /// k and seed are overwritten per run; the rest is used as given.
  AnonymizerConfig base;
  double damping = kDefaultDamping;
  bool with_utility = false;
  std::size_t threads = 1;
};

struct RunRecord {
  double theta = 0.0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double normalized_cost = 0.0;
  double mean_iterations = 0.0;  ///< over restarts
  double mean_pr_cosine = 0.0;   ///< over slices; only with_utility
  std::size_t edge_edits = 0;    ///< only with_utility
};

/// Runs the full pipeline for every (theta, k, seed). The graph for
/// (theta, seed) is the same for every k. Output order is theta-major, then
/// k, then seed, independent of `threads`.
std::vector<RunRecord> synthetic_sweep(const SweepOptions& opts);

/// Random group-uniform degree sequence on `num_nodes` nodes that is not
/// realizable. k is drawn from [k_min, k_max]; there are floor(n/k) groups
/// of size >= k.
struct RepairInstance {
  std::size_t k = 0;
  GroupDegreeProfile profile;
};
RepairInstance random_nonrealizable_profile(std::size_t num_nodes, std::size_t k_min, std::size_t k_max,
                                            std::mt19937_64& rng);

/// Cheapest group-uniform realizable profile by exhaustive search over
/// [0, n-1]^m. Cost is sum_j size_j |delta'_j - delta_j|.
std::int64_t optimal_group_repair_cost(const GroupDegreeProfile& profile, std::size_t num_nodes);

/// Heuristic repair: enforce_realizability followed by fix_parity.
GroupDegreeProfile heuristic_repair(const GroupDegreeProfile& profile, std::size_t num_nodes);

struct SuiteOptions {
  std::string suite;
  std::filesystem::path out_dir = ".";
  std::size_t seeds = 20;
  std::uint64_t first_seed = 0;
  std::vector<double> thetas;     ///< empty = suite default
  std::vector<std::size_t> ks;    ///< empty = suite default
  std::vector<std::size_t> sizes; ///< greedy-vs-exact node counts; empty = default
  std::vector<std::size_t> buckets;  ///< resolution widths; empty = default
  std::optional<std::filesystem::path> input;  ///< resolution suite on a user graph
  std::size_t num_nodes = 100;
  std::size_t num_slices = 10;
  double p0 = 0.1;
  std::size_t instances = 1000;  ///< realizability-cdf
  AnonymizerConfig base;
  double damping = kDefaultDamping;
  std::size_t threads = 1;
};

const std::vector<std::string>& suite_names();

/// Runs one suite and writes `<suite>.csv` into out_dir. Returns the path.
/// Throws std::invalid_argument for an unknown suite.
std::filesystem::path run_suite(const SuiteOptions& opts, std::ostream& log);

}  // namespace tganon::experiments
