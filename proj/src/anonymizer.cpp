#include "tganon/anonymizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tganon/min_cost_flow.hpp"
#include "tganon/parallel.hpp"

namespace tganon {
namespace {

void check_assignment_inputs(const DegreeMatrix& d, const MedianMatrix& p, AnonymityLevel k) {
  if (k.value() > d.num_nodes()) {
    throw std::invalid_argument("k = " + std::to_string(k.value()) + " exceeds n = " +
                                std::to_string(d.num_nodes()));
  }
  if (p.empty()) throw std::invalid_argument("median matrix has no rows");
  if (p.size() * k.value() > d.num_nodes()) {
    throw std::invalid_argument("m * k exceeds the number of nodes");
  }
  for (const auto& row : p) {
    if (row.size() != d.num_slices()) throw std::invalid_argument("median width differs from T");
  }
}

// Nodes ordered by increasing l1 distance to `median`, ties by node index.
std::vector<std::uint32_t> nearest_order(const DegreeMatrix& d, const DegreeVector& median) {
  const std::size_t n = d.num_nodes();
  std::vector<std::int64_t> dist(n);
  for (std::size_t i = 0; i < n; ++i) dist[i] = l1_distance(d.row(i), median);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  });
  return order;
}

// Above this many (median, node) pairs the greedy pass re-sorts per
// permutation instead of caching every median's node order.
constexpr std::size_t kGreedyCacheLimit = 8'000'000;

struct RestartResult {
  AnonymityGrouping grouping;
  MedianMatrix medians;
  std::int64_t cost = 0;
  RestartTrace trace;
};

RestartResult run_restart(const DegreeMatrix& d, const AnonymizerConfig& cfg, AnonymityGrouping start,
                          std::mt19937_64& rng) {
  RestartResult r;
  r.grouping = std::move(start);
  r.medians = group_medians(d, r.grouping);
  r.cost = assignment_cost(d, r.medians, r.grouping);
  r.trace.cost_trace.push_back(r.cost);

  for (std::size_t it = 1; it <= cfg.inner_iters; ++it) {
    r.trace.iterations = it;
    Assignment candidate = cfg.assignment_mode == AssignmentMode::exact
                               ? exact_assignment(d, r.medians, cfg.k)
                               : greedy_assignment(d, r.medians, cfg.k, cfg.greedy_perms, rng);
    // The current grouping is itself a valid assignment for the current
    // medians, so a costlier candidate is rejected and the run ends there.
    // Equal-cost moves are kept: they shift the medians off cost plateaus.
    if (candidate.cost > r.cost || candidate.grouping == r.grouping) {
      r.trace.converged = true;
      break;
    }
    r.grouping = std::move(candidate.grouping);
    r.medians = group_medians(d, r.grouping);
    r.cost = assignment_cost(d, r.medians, r.grouping);
    r.trace.cost_trace.push_back(r.cost);
  }
  r.trace.final_cost = r.cost;
  return r;
}

}  // namespace

std::vector<std::size_t> AnonymityGrouping::group_sizes() const {
  std::vector<std::size_t> sizes(num_groups, 0);
  for (auto g : assignment) {
    if (g != kUnassigned) ++sizes.at(g);
  }
  return sizes;
}

std::vector<std::vector<std::size_t>> AnonymityGrouping::members() const {
  std::vector<std::vector<std::size_t>> out(num_groups);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != kUnassigned) out.at(assignment[i]).push_back(i);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> AnonymityGrouping::indicator() const {
  std::vector<std::vector<std::uint8_t>> s(assignment.size(), std::vector<std::uint8_t>(num_groups, 0));
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != kUnassigned) s[i][assignment[i]] = 1;
  }
  return s;
}

bool AnonymityGrouping::complete() const {
  return std::none_of(assignment.begin(), assignment.end(),
                      [](std::size_t g) { return g == kUnassigned; });
}

void AnonymityGrouping::validate(AnonymityLevel k) const {
  if (!complete()) throw std::logic_error("grouping leaves nodes unassigned");
  for (auto g : assignment) {
    if (g >= num_groups) throw std::logic_error("group index out of range");
  }
  for (auto size : group_sizes()) {
    if (size < k.value()) throw std::logic_error("group smaller than k");
  }
}

std::size_t group_count(std::size_t num_nodes, AnonymityLevel k) {
  if (k.value() > num_nodes) {
    throw std::invalid_argument("k = " + std::to_string(k.value()) + " exceeds n = " +
                                std::to_string(num_nodes));
  }
  return num_nodes / k.value();
}

void AnonymizerConfig::validate(std::size_t num_nodes) const {
  if (k.value() > num_nodes) {
    throw std::invalid_argument("k = " + std::to_string(k.value()) + " exceeds n = " +
                                std::to_string(num_nodes));
  }
  if (restarts == 0) throw std::invalid_argument("restarts must be >= 1");
  if (inner_iters == 0) throw std::invalid_argument("inner_iters must be >= 1");
  if (greedy_perms == 0) throw std::invalid_argument("greedy_perms must be >= 1");
}

std::int64_t l1_distance(std::span<const int> a, std::span<const int> b) {
  std::int64_t total = 0;
  for (std::size_t t = 0; t < a.size(); ++t) total += std::abs(a[t] - b[t]);
  return total;
}

DegreeVector set_median(const std::vector<DegreeVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("set_median of an empty set");
  const std::size_t width = vectors.front().size();
  DegreeVector median(width);
  std::vector<int> column(vectors.size());
  for (std::size_t t = 0; t < width; ++t) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != width) throw std::invalid_argument("set_median: ragged input");
      column[i] = vectors[i][t];
    }
    const auto mid = column.begin() + static_cast<std::ptrdiff_t>((column.size() - 1) / 2);
    std::nth_element(column.begin(), mid, column.end());
    median[t] = *mid;
  }
  return median;
}

MedianMatrix group_medians(const DegreeMatrix& d, const AnonymityGrouping& grouping) {
  MedianMatrix medians;
  medians.reserve(grouping.num_groups);
  for (const auto& members : grouping.members()) {
    std::vector<DegreeVector> rows;
    rows.reserve(members.size());
    for (auto i : members) rows.emplace_back(d.row(i).begin(), d.row(i).end());
    medians.push_back(set_median(rows));
  }
  return medians;
}

std::int64_t assignment_cost(const DegreeMatrix& d, const MedianMatrix& p,
                             const AnonymityGrouping& grouping) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < grouping.assignment.size(); ++i) {
    const auto g = grouping.assignment[i];
    if (g != AnonymityGrouping::kUnassigned) total += l1_distance(d.row(i), p.at(g));
  }
  return total;
}

AnonymityGrouping assign_residual(const DegreeMatrix& d, const MedianMatrix& p,
                                  AnonymityGrouping partial) {
  for (std::size_t i = 0; i < partial.assignment.size(); ++i) {
    if (partial.assignment[i] != AnonymityGrouping::kUnassigned) continue;
    std::size_t best = 0;
    std::int64_t best_dist = l1_distance(d.row(i), p.at(0));
    for (std::size_t j = 1; j < p.size(); ++j) {
      const auto dist = l1_distance(d.row(i), p[j]);
      if (dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    partial.assignment[i] = best;
  }
  return partial;
}

Assignment greedy_assignment(const DegreeMatrix& d, const MedianMatrix& p, AnonymityLevel k,
                             std::size_t perms, std::mt19937_64& rng) {
  check_assignment_inputs(d, p, k);
  if (perms == 0) throw std::invalid_argument("greedy_assignment needs at least one permutation");
  const std::size_t n = d.num_nodes();
  const std::size_t m = p.size();

  std::vector<std::vector<std::uint32_t>> cached;
  if (m * n <= kGreedyCacheLimit) {
    cached.reserve(m);
    for (const auto& median : p) cached.push_back(nearest_order(d, median));
  }

  std::vector<std::size_t> median_order(m);
  std::iota(median_order.begin(), median_order.end(), 0);
  Assignment best;
  bool have_best = false;

  for (std::size_t round = 0; round < perms; ++round) {
    std::shuffle(median_order.begin(), median_order.end(), rng);
    AnonymityGrouping grouping{m, std::vector<std::size_t>(n, AnonymityGrouping::kUnassigned)};
    for (auto j : median_order) {
      std::vector<std::uint32_t> fresh;
      if (cached.empty()) fresh = nearest_order(d, p[j]);
      const auto& order = cached.empty() ? fresh : cached[j];
      std::size_t taken = 0;
      for (auto node : order) {
        if (taken == k.value()) break;
        if (grouping.assignment[node] == AnonymityGrouping::kUnassigned) {
          grouping.assignment[node] = j;
          ++taken;
        }
      }
    }
    grouping = assign_residual(d, p, std::move(grouping));
    const auto cost = assignment_cost(d, p, grouping);
    if (!have_best || cost < best.cost) {
      best = {std::move(grouping), cost};
      have_best = true;
    }
  }
  return best;
}

Assignment exact_assignment(const DegreeMatrix& d, const MedianMatrix& p, AnonymityLevel k) {
  check_assignment_inputs(d, p, k);
  const std::size_t n = d.num_nodes();
  const std::size_t m = p.size();
  if (m * n > kExactAssignmentLimit) {
    throw std::length_error("exact_assignment: instance with m * n = " + std::to_string(m * n) +
                            " exceeds the size guard");
  }
  const std::size_t residual = n - m * k.value();

  // Vertices: source, n nodes, m groups, sink. Each group has a lower-bound
  // arc of capacity k at cost 0 and an overflow arc priced above any possible
  // assignment-cost difference, so the optimum fills every group to k first.
  const std::size_t source = 0;
  const std::size_t sink = n + m + 1;
  MinCostFlow flow(n + m + 2);

  std::int64_t max_cost = 0;
  std::vector<std::int64_t> cost(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cost[i * m + j] = l1_distance(d.row(i), p[j]);
      max_cost = std::max(max_cost, cost[i * m + j]);
    }
  }
  const std::int64_t overflow_price = max_cost * static_cast<std::int64_t>(n) + 1;

  std::vector<std::size_t> node_arcs(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    flow.add_arc(source, 1 + i, 1, 0);
    for (std::size_t j = 0; j < m; ++j) node_arcs[i * m + j] = flow.add_arc(1 + i, 1 + n + j, 1, cost[i * m + j]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    flow.add_arc(1 + n + j, sink, static_cast<std::int64_t>(k.value()), 0);
    if (residual > 0) flow.add_arc(1 + n + j, sink, static_cast<std::int64_t>(residual), overflow_price);
  }
  const auto result = flow.solve(source, sink, static_cast<std::int64_t>(n));
  if (result.flow != static_cast<std::int64_t>(n)) throw std::logic_error("exact_assignment: infeasible flow");

  Assignment out{{m, std::vector<std::size_t>(n, AnonymityGrouping::kUnassigned)}, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (flow.flow_on(node_arcs[i * m + j]) > 0) {
        out.grouping.assignment[i] = j;
        out.cost += cost[i * m + j];
        break;
      }
    }
  }
  return out;
}

AnonymityGrouping initial_partition(std::size_t num_nodes, AnonymityLevel k, std::mt19937_64& rng) {
  const std::size_t m = group_count(num_nodes, k);
  std::vector<std::size_t> nodes(num_nodes);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  AnonymityGrouping grouping{m, std::vector<std::size_t>(num_nodes)};
  const std::size_t dealt = m * k.value();
  for (std::size_t pos = 0; pos < num_nodes; ++pos) {
    grouping.assignment[nodes[pos]] = pos < dealt ? pos % m : (pos - dealt) % m;
  }
  return grouping;
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  return std::mt19937_64(seq);
}

AnonymityGrouping sorted_partition(const DegreeMatrix& d, AnonymityLevel k) {
  const std::size_t n = d.num_nodes();
  const std::size_t m = group_count(n, k);
  std::vector<std::int64_t> total(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int v : d.row(i)) total[i] += v;
  }
  std::vector<std::size_t> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::sort(nodes.begin(), nodes.end(), [&](std::size_t a, std::size_t b) {
    if (total[a] != total[b]) return total[a] < total[b];
    const auto ra = d.row(a), rb = d.row(b);
    if (!std::equal(ra.begin(), ra.end(), rb.begin())) {
      return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    }
    return a < b;
  });
  AnonymityGrouping grouping{m, std::vector<std::size_t>(n)};
  for (std::size_t pos = 0; pos < n; ++pos) grouping.assignment[nodes[pos]] = std::min(pos / k.value(), m - 1);
  return grouping;
}

AnonymizationOutcome degree_anonymization(const DegreeMatrix& d, const AnonymizerConfig& cfg) {
  cfg.validate(d.num_nodes());
  const std::size_t runs = cfg.restarts + (cfg.sorted_start ? 1 : 0);
  std::vector<RestartResult> results(runs);
  parallel_for(runs, cfg.threads, [&](std::size_t r) {
    auto rng = restart_rng(cfg.seed, r);
    auto start = r < cfg.restarts ? initial_partition(d.num_nodes(), cfg.k, rng) : sorted_partition(d, cfg.k);
    results[r] = run_restart(d, cfg, std::move(start), rng);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].cost < results[best].cost) best = r;
  }

  AnonymizationOutcome out;
  out.best_restart = best;
  out.cost = results[best].cost;
  out.grouping = results[best].grouping;
  out.medians = results[best].medians;
  out.anonymized = DegreeMatrix(d.num_nodes(), d.num_slices());
  for (std::size_t i = 0; i < d.num_nodes(); ++i) {
    const auto& median = out.medians[out.grouping.assignment[i]];
    for (std::size_t t = 0; t < d.num_slices(); ++t) out.anonymized.set(i, t, median[t]);
  }
  out.restarts.reserve(results.size());
  for (auto& r : results) out.restarts.push_back(std::move(r.trace));
  return out;
}

double normalized_cost(const DegreeMatrix& d, const DegreeMatrix& d_anon) {
  const auto diff = degree_l1_distance(d, d_anon);
  const auto n = static_cast<double>(d.num_nodes());
  if (d.num_nodes() < 2 || d.num_slices() == 0) return 0.0;
  return static_cast<double>(diff) / (static_cast<double>(d.num_slices()) * n * (n - 1.0));
}

}  // namespace tganon
