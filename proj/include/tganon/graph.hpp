#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tganon {

using NodeId = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Normalizes the endpoint order. Throws std::invalid_argument on a self-loop.
Edge make_edge(NodeId a, NodeId b);

using EdgeList = std::vector<Edge>;
using DegreeVector = std::vector<int>;

/// A sequence of simple undirected graphs over the fixed node set 0..n-1.
///
/// Slices can be time steps or layers of a multi-layer graph; slice order only
/// matters for temporal metrics. Each slice is kept sorted and duplicate-free
/// so that iteration order is deterministic.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  /// Validates endpoints and self-loops, then sorts and deduplicates every
  /// slice. Throws std::invalid_argument on invalid input or when no slice
  /// is given.
  TemporalGraph(std::size_t num_nodes, std::vector<EdgeList> slices);

  static TemporalGraph empty(std::size_t num_nodes, std::size_t num_slices);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_slices() const { return slices_.size(); }
  std::span<const Edge> slice(std::size_t t) const { return slices_.at(t); }
  const std::vector<EdgeList>& slices() const { return slices_; }
  std::size_t num_edges() const;

  bool operator==(const TemporalGraph&) const = default;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<EdgeList> slices_;
};

/// n x T matrix of per-node, per-slice degrees with entries in [0, n-1].
class DegreeMatrix {
 public:
  DegreeMatrix() = default;
  DegreeMatrix(std::size_t num_nodes, std::size_t num_slices);
  /// Throws std::invalid_argument if the size is wrong or an entry is out of
  /// range.
  DegreeMatrix(std::size_t num_nodes, std::size_t num_slices, std::vector<int> row_major);

  static DegreeMatrix from_rows(const std::vector<DegreeVector>& rows);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_slices() const { return num_slices_; }

  int at(std::size_t node, std::size_t t) const { return values_[node * num_slices_ + t]; }
  void set(std::size_t node, std::size_t t, int value);

  std::span<const int> row(std::size_t node) const {
    return {values_.data() + node * num_slices_, num_slices_};
  }
  DegreeVector column(std::size_t t) const;
  std::vector<DegreeVector> rows() const;

  bool operator==(const DegreeMatrix&) const = default;

 private:
  std::size_t num_nodes_ = 0;
  std::size_t num_slices_ = 0;
  std::vector<int> values_;
};

/// Anonymity parameter k >= 1.
class AnonymityLevel {
 public:
  explicit AnonymityLevel(std::size_t k);
  std::size_t value() const { return k_; }

  bool operator==(const AnonymityLevel&) const = default;

 private:
  std::size_t k_ = 1;
};

DegreeMatrix degree_matrix(const TemporalGraph& g);

/// Degree sequence of one slice, indexed by node.
DegreeVector slice_degrees(std::span<const Edge> edges, std::size_t num_nodes);

/// True iff every row of d equals at least k-1 other rows.
bool is_k_anonymous(const DegreeMatrix& d, AnonymityLevel k);

/// Size of the symmetric difference of the edge sets, summed over slices.
std::size_t edge_edit_count(const TemporalGraph& g, const TemporalGraph& h);
std::size_t edge_edit_count(std::span<const Edge> a, std::span<const Edge> b);

/// Number of edges present in both edge lists.
std::size_t edge_overlap(std::span<const Edge> a, std::span<const Edge> b);

/// Raw l1 difference sum_i ||a_i - b_i||_1.
std::int64_t degree_l1_distance(const DegreeMatrix& a, const DegreeMatrix& b);

/// Half the l1 difference: no graph with degree matrix b is closer than this
/// to a graph with degree matrix a in edge edits.
double degree_distance(const DegreeMatrix& a, const DegreeMatrix& b);

/// Merges every `width` consecutive slices into one (edge union). The last
/// bucket may be shorter.
TemporalGraph rebucket(const TemporalGraph& g, std::size_t width);

}  // namespace tganon
