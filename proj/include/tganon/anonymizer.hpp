#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "tganon/graph.hpp"

namespace tganon {

/// One median row per anonymity group (m x T).
using MedianMatrix = std::vector<DegreeVector>;

/// Partition of the nodes into anonymity groups.
struct AnonymityGrouping {
  static constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

  std::size_t num_groups = 0;
  /// node -> group, or kUnassigned while a grouping is being built.
  std::vector<std::size_t> assignment;

  std::vector<std::size_t> group_sizes() const;
  std::vector<std::vector<std::size_t>> members() const;
  /// n x m 0/1 matrix S with S[i][j] = 1 iff node i is in group j.
  std::vector<std::vector<std::uint8_t>> indicator() const;
  bool complete() const;
  /// Throws std::logic_error unless every node is assigned and every group
  /// holds at least k nodes.
  void validate(AnonymityLevel k) const;

  bool operator==(const AnonymityGrouping&) const = default;
};

/// Number of groups used for n nodes at level k: floor(n / k), so that every
/// group can hold k nodes and the n - m*k leftovers are residuals.
std::size_t group_count(std::size_t num_nodes, AnonymityLevel k);

enum class AssignmentMode { greedy, exact };

struct AnonymizerConfig {
  AnonymityLevel k{2};
  std::size_t restarts = 20;
  std::size_t inner_iters = 50;
  std::size_t greedy_perms = 10;
  std::uint64_t seed = 0;
  AssignmentMode assignment_mode = AssignmentMode::greedy;
  /// Also run one start from sorted_partition, after the random restarts.
  bool sorted_start = true;
  /// Workers for independent restarts; 0 = hardware concurrency. Results do
  /// not depend on this value.
  std::size_t threads = 1;

  void validate(std::size_t num_nodes) const;
};

struct Assignment {
  AnonymityGrouping grouping;
  /// Total l1 cost sum_i ||d_i - p_{g(i)}||_1, residual nodes included.
  std::int64_t cost = 0;
};

struct RestartTrace {
  std::size_t iterations = 0;
  bool converged = false;
  /// Cost after the initial partition, then after each accepted
  /// (assignment, update) pair.
  std::vector<std::int64_t> cost_trace;
  std::int64_t final_cost = 0;
};

struct AnonymizationOutcome {
  DegreeMatrix anonymized;
  AnonymityGrouping grouping;
  MedianMatrix medians;
  std::int64_t cost = 0;
  std::size_t best_restart = 0;
  std::vector<RestartTrace> restarts;
};

std::int64_t l1_distance(std::span<const int> a, std::span<const int> b);

/// Component-wise lower median: a minimizer of the summed l1 distance.
/// Throws std::invalid_argument on empty or ragged input.
DegreeVector set_median(const std::vector<DegreeVector>& vectors);

MedianMatrix group_medians(const DegreeMatrix& d, const AnonymityGrouping& grouping);

std::int64_t assignment_cost(const DegreeMatrix& d, const MedianMatrix& p,
                             const AnonymityGrouping& grouping);

/// Attaches every unassigned node to the l1-closest median (lowest group
/// index on ties).
AnonymityGrouping assign_residual(const DegreeMatrix& d, const MedianMatrix& p,
                                  AnonymityGrouping partial);

/// Greedy assignment: for each of `perms` random median orders, every median
/// claims its k nearest unassigned nodes, residuals go to their closest
/// median, and the cheapest of the candidate groupings wins.
Assignment greedy_assignment(const DegreeMatrix& d, const MedianMatrix& p, AnonymityLevel k,
                             std::size_t perms, std::mt19937_64& rng);

/// Largest m * n accepted by exact_assignment.
inline constexpr std::size_t kExactAssignmentLimit = 4'000'000;

/// Optimal assignment of all nodes to the m medians subject to every group
/// holding at least k nodes, solved as a min-cost flow. Throws
/// std::length_error when m * n exceeds kExactAssignmentLimit.
Assignment exact_assignment(const DegreeMatrix& d, const MedianMatrix& p, AnonymityLevel k);

/// Random partition into group_count(n, k) groups of size >= k.
AnonymityGrouping initial_partition(std::size_t num_nodes, AnonymityLevel k, std::mt19937_64& rng);

/// Deterministic start: nodes ordered by total degree (then by row, then by
/// index) and cut into consecutive runs of k; leftovers join the last group.
AnonymityGrouping sorted_partition(const DegreeMatrix& d, AnonymityLevel k);

/// Constrained l1 k-means over temporal degree vectors. Restarts run
/// independently, each with an RNG stream derived from (seed, restart), and
/// the cheapest one wins (lowest restart index on ties). With sorted_start
/// the sorted run is appended as restart index `restarts`.
AnonymizationOutcome degree_anonymization(const DegreeMatrix& d, const AnonymizerConfig& cfg);

/// sum |d - d_anon| / (T n (n - 1)); 0 when n < 2.
double normalized_cost(const DegreeMatrix& d, const DegreeMatrix& d_anon);

/// RNG for one restart of a seeded run.
std::mt19937_64 restart_rng(std::uint64_t seed, std::size_t restart);

}  // namespace tganon
