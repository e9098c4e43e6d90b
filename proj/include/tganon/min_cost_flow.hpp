#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tganon {

/// Min-cost flow by successive shortest paths with Dijkstra on reduced costs.
/// Arc costs must be non-negative.
class MinCostFlow {
 public:
  struct Result {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };

  explicit MinCostFlow(std::size_t num_vertices);

  /// Returns an arc id usable with flow_on().
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity, std::int64_t cost);

  /// Pushes up to `limit` units from source to sink at minimum cost.
  Result solve(std::size_t source, std::size_t sink, std::int64_t limit);

  std::int64_t flow_on(std::size_t arc_id) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::int64_t capacity;
    std::int64_t cost;
  };

  std::vector<std::vector<Arc>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> arc_index_;
  std::vector<std::int64_t> original_capacity_;
};

}  // namespace tganon
