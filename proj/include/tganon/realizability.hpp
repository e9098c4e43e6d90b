#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tganon/anonymizer.hpp"
#include "tganon/graph.hpp"

namespace tganon {

/// True iff the sequence has an even sum and satisfies the Erdős–Gallai
/// inequalities. Throws std::invalid_argument if an entry is negative or
/// >= the sequence length.
bool is_realizable(std::span<const int> seq);

/// Erdős–Gallai inequalities only (parity ignored). Any order accepted.
bool satisfies_erdos_gallai(std::span<const int> seq);

/// Degrees of the anonymity groups in one slice.
struct GroupDegreeProfile {
  std::vector<int> delta;
  std::vector<std::size_t> sizes;

  /// Group indices by non-increasing degree, ties by group index.
  std::vector<std::size_t> ordering() const;
  /// Expanded per-node sequence S * delta in `ordering()` order.
  std::vector<int> expand() const;
  std::size_t num_nodes() const;
  std::int64_t degree_sum() const;

  bool operator==(const GroupDegreeProfile&) const = default;
};

/// sum_j sizes[j] * |after[j] - before[j]|.
std::int64_t repair_cost(const GroupDegreeProfile& before, const GroupDegreeProfile& after);

struct EnforceStats {
  std::size_t outer_iterations = 0;
};

/// Pivot repair of the Erdős–Gallai inequalities that keeps every group
/// degree-uniform. The right-hand side is re-linearized around the current
/// candidate each round; groups whose per-position constraints are violated
/// are lowered by the ceiling of their average violation and the reduction is
/// propagated so the degree order is kept. Degrees never increase. Inputs
/// that already satisfy the inequalities are returned unchanged.
GroupDegreeProfile enforce_realizability(const GroupDegreeProfile& profile, std::size_t n,
                                         EnforceStats* stats = nullptr);

/// Makes the degree sum even by moving every member of one odd group by +-1,
/// picking the smallest odd group (size, then degree, then index) and the
/// cheaper feasible direction (decrease on ties). Expects an input that
/// satisfies the Erdős–Gallai inequalities; the output is realizable.
GroupDegreeProfile fix_parity(const GroupDegreeProfile& profile, std::size_t n);

struct RepairResult {
  DegreeMatrix repaired;
  std::size_t columns_repaired = 0;
  std::size_t parity_fixes = 0;
  std::int64_t total_cost = 0;
  std::vector<std::int64_t> column_costs;
};

/// Makes every slice of a k-anonymous degree matrix realizable without
/// changing group membership. Realizable columns pass through unchanged.
/// Throws std::invalid_argument if a group is not degree-uniform.
RepairResult repair_degree_matrix(const DegreeMatrix& d_anon, const AnonymityGrouping& grouping,
                                  std::size_t threads = 1);

}  // namespace tganon
