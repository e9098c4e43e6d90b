#include "tganon/constructor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tganon/parallel.hpp"
#include "tganon/realizability.hpp"

namespace tganon {

EdgeList build_slice(std::span<const int> target, std::span<const Edge> original) {
  const std::size_t n = target.size();
  bool realizable = false;
  try {
    realizable = is_realizable(target);
  } catch (const std::invalid_argument&) {
    realizable = false;
  }
  if (!realizable) throw std::invalid_argument("build_slice: target degree sequence is not realizable");

  std::vector<std::vector<NodeId>> original_adj(n);
  for (const auto& e : original) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("build_slice: original edge out of range");
    original_adj[e.u].push_back(e.v);
    original_adj[e.v].push_back(e.u);
  }
  for (auto& nbrs : original_adj) std::sort(nbrs.begin(), nbrs.end());
  auto in_original = [&](NodeId a, NodeId b) {
    return std::binary_search(original_adj[a].begin(), original_adj[a].end(), b);
  };

  std::vector<int> residual(target.begin(), target.end());
  std::vector<char> done(n, 0);
  std::vector<char> taken(n, 0);
  std::vector<int> scratch;
  EdgeList edges;

  while (true) {
    const auto it = std::max_element(residual.begin(), residual.end());  // first max = lowest index
    if (it == residual.end() || *it == 0) break;
    const auto v = static_cast<NodeId>(it - residual.begin());
    done[v] = 1;

    std::vector<NodeId> eligible;
    for (NodeId w = 0; w < n; ++w) {
      if (!done[w] && residual[w] > 0) eligible.push_back(w);
    }
    // Havel–Hakimi order: completing v's remaining stubs along it is always
    // feasible while the current residual sequence is.
    std::vector<NodeId> witness = eligible;
    std::stable_sort(witness.begin(), witness.end(),
                     [&](NodeId a, NodeId b) { return residual[a] > residual[b]; });
    std::vector<NodeId> candidates = eligible;
    std::stable_sort(candidates.begin(), candidates.end(), [&](NodeId a, NodeId b) {
      const bool oa = in_original(v, a), ob = in_original(v, b);
      if (oa != ob) return oa;
      return residual[a] > residual[b];
    });

    auto completes = [&](NodeId c) {
      scratch.clear();
      int stubs = residual[v] - 1;
      for (NodeId w = 0; w < n; ++w) {
        if (w != v) scratch.push_back(residual[w]);
      }
      auto slot = [v](NodeId w) { return w < v ? w : w - 1; };
      --scratch[slot(c)];
      for (auto w : witness) {
        if (stubs == 0) break;
        if (w == c || taken[w]) continue;
        --scratch[slot(w)];
        --stubs;
      }
      return stubs == 0 && satisfies_erdos_gallai(scratch);
    };

    for (auto c : candidates) {
      if (residual[v] == 0) break;
      if (!completes(c)) continue;
      edges.push_back(make_edge(v, c));
      --residual[v];
      --residual[c];
      taken[c] = 1;
    }
    for (auto c : candidates) taken[c] = 0;
    if (residual[v] != 0) throw std::logic_error("build_slice: construction stalled");
  }

  std::sort(edges.begin(), edges.end());
  return edges;
}

EdgeList havel_hakimi(std::span<const int> target) { return build_slice(target, {}); }

TemporalGraph build_temporal(const DegreeMatrix& target, const TemporalGraph& original,
                             std::size_t threads) {
  if (target.num_nodes() != original.num_nodes() || target.num_slices() != original.num_slices()) {
    throw std::invalid_argument("build_temporal: target and original differ in shape");
  }
  std::vector<EdgeList> slices(target.num_slices());
  parallel_for(target.num_slices(), threads, [&](std::size_t t) {
    slices[t] = build_slice(target.column(t), original.slice(t));
  });
  return TemporalGraph(target.num_nodes(), std::move(slices));
}

}  // namespace tganon
