#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tganon/graph.hpp"

namespace tganon {

enum class IsolatedTerms {
  exclude,       ///< node-time pairs with an empty neighborhood are skipped
  count_as_zero  ///< ... or averaged in with overlap 0
};

/// Average topological overlap of node neighborhoods between consecutive
/// slices:
///
///   C_i(t) = sum_j a_ij(t) a_ij(t+1) / sqrt(deg_i(t) deg_i(t+1))
///
/// averaged over nodes and t = 0..T-2. Returns 0 when no term qualifies.
/// Throws std::invalid_argument when T < 2.
double temporal_correlation(const TemporalGraph& g, IsolatedTerms isolated = IsolatedTerms::exclude);

inline constexpr double kDefaultDamping = 0.85;
inline constexpr double kDefaultPageRankTol = 1e-10;
inline constexpr std::size_t kPageRankMaxIterations = 10'000;

/// PageRank by power iteration; each undirected edge is two arcs and
/// degree-0 nodes teleport uniformly. Stops when the l1 change drops below
/// `tol`. Throws std::runtime_error if that takes more than
/// kPageRankMaxIterations steps.
std::vector<double> pagerank(std::span<const Edge> edges, std::size_t num_nodes,
                             double damping = kDefaultDamping, double tol = kDefaultPageRankTol);

/// Throws std::invalid_argument on a length mismatch or an all-zero input.
double cosine_similarity(std::span<const double> u, std::span<const double> v);

struct SliceUtility {
  std::size_t slice = 0;
  std::size_t active_edges = 0;  ///< edges in the original slice
  double pr_cosine = 0.0;
  std::size_t edge_edits = 0;
  std::int64_t l1_degree_dist = 0;
};

std::vector<SliceUtility> utility_report(const TemporalGraph& original, const TemporalGraph& anonymized,
                                         double damping = kDefaultDamping, std::size_t threads = 1);

/// CSV with header `slice,active_edges,pr_cosine,edge_edits,l1_degree_dist`.
void write_utility_csv(std::ostream& out, const std::vector<SliceUtility>& rows);

}  // namespace tganon
