#include "tganon/min_cost_flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace tganon {

MinCostFlow::MinCostFlow(std::size_t num_vertices) : adjacency_(num_vertices) {}

std::size_t MinCostFlow::add_arc(std::size_t from, std::size_t to, std::int64_t capacity,
                                 std::int64_t cost) {
  if (from >= adjacency_.size() || to >= adjacency_.size()) {
    throw std::out_of_range("arc endpoint out of range");
  }
  if (capacity < 0 || cost < 0) throw std::invalid_argument("arc capacity and cost must be >= 0");
  const std::size_t fwd = adjacency_[from].size();
  const std::size_t bwd = adjacency_[to].size() + (from == to ? 1 : 0);
  adjacency_[from].push_back({to, bwd, capacity, cost});
  adjacency_[to].push_back({from, fwd, 0, -cost});
  arc_index_.emplace_back(from, fwd);
  original_capacity_.push_back(capacity);
  return arc_index_.size() - 1;
}

std::int64_t MinCostFlow::flow_on(std::size_t arc_id) const {
  const auto [from, slot] = arc_index_.at(arc_id);
  return original_capacity_[arc_id] - adjacency_[from][slot].capacity;
}

MinCostFlow::Result MinCostFlow::solve(std::size_t source, std::size_t sink, std::int64_t limit) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::size_t n = adjacency_.size();
  std::vector<std::int64_t> potential(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<std::size_t> prev_vertex(n), prev_arc(n);
  Result result;

  using Item = std::pair<std::int64_t, std::size_t>;
  while (result.flow < limit) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[source] = 0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0, source);
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[v]) continue;
      for (std::size_t a = 0; a < adjacency_[v].size(); ++a) {
        const Arc& arc = adjacency_[v][a];
        if (arc.capacity <= 0) continue;
        const std::int64_t nd = d + arc.cost + potential[v] - potential[arc.to];
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          prev_vertex[arc.to] = v;
          prev_arc[arc.to] = a;
          heap.emplace(nd, arc.to);
        }
      }
    }
    if (dist[sink] >= kInf) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }

    std::int64_t push = limit - result.flow;
    for (std::size_t v = sink; v != source; v = prev_vertex[v]) {
      push = std::min(push, adjacency_[prev_vertex[v]][prev_arc[v]].capacity);
    }
    for (std::size_t v = sink; v != source; v = prev_vertex[v]) {
      Arc& arc = adjacency_[prev_vertex[v]][prev_arc[v]];
      arc.capacity -= push;
      adjacency_[v][arc.rev].capacity += push;
      result.cost += push * arc.cost;
    }
    result.flow += push;
  }
  return result;
}

}  // namespace tganon
