#include "tganon/realizability.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tganon/parallel.hpp"

namespace tganon {
namespace {

// Hard cap on re-linearization rounds. Every round lowers at least one group
// by one, so this is only reached on a bug.
constexpr std::size_t kMaxOuterIterations = 100;

std::vector<int> sorted_desc(std::span<const int> seq) {
  std::vector<int> s(seq.begin(), seq.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

// b[j] = j(j-1) + sum_{i>j} min(s_i, j) for j = 0..n (1-based prefix length),
// with b[0] = 0. `s` must be sorted non-increasingly with entries in [0, n-1].
std::vector<std::int64_t> erdos_gallai_rhs(const std::vector<int>& s) {
  const std::size_t n = s.size();
  std::vector<std::int64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + s[i];
  // at_least[v] = #{i : s_i >= v}
  std::vector<std::size_t> at_least(n + 2, 0);
  for (int v : s) ++at_least[static_cast<std::size_t>(v)];
  for (std::size_t v = n; v-- > 0;) at_least[v] += at_least[v + 1];

  std::vector<std::int64_t> b(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t big = at_least[std::min(j, n + 1)];
    const std::size_t capped = big > j ? big - j : 0;  // i > j with s_i >= j
    const std::size_t tail_start = std::max(j, big);   // 0-based first index with s_i < j past j
    const auto jj = static_cast<std::int64_t>(j);
    b[j] = jj * (jj - 1) + static_cast<std::int64_t>(capped) * jj + suffix[tail_start];
  }
  return b;
}

bool erdos_gallai_sorted(const std::vector<int>& s) {
  const auto b = erdos_gallai_rhs(s);
  std::int64_t prefix = 0;
  for (std::size_t j = 1; j <= s.size(); ++j) {
    prefix += s[j - 1];
    if (prefix > b[j]) return false;
  }
  return true;
}

void check_profile(const GroupDegreeProfile& p, std::size_t n) {
  if (p.delta.size() != p.sizes.size()) throw std::invalid_argument("profile: delta/sizes length mismatch");
  if (p.num_nodes() != n) throw std::invalid_argument("profile: group sizes do not sum to n");
  for (std::size_t j = 0; j < p.delta.size(); ++j) {
    if (p.sizes[j] == 0) throw std::invalid_argument("profile: empty group");
    if (p.delta[j] < 0 || static_cast<std::size_t>(p.delta[j]) >= std::max<std::size_t>(n, 1)) {
      throw std::invalid_argument("profile: group degree outside [0, n-1]");
    }
  }
}

bool profile_realizable(const GroupDegreeProfile& p) {
  return p.degree_sum() % 2 == 0 && erdos_gallai_sorted(p.expand());
}

}  // namespace

bool satisfies_erdos_gallai(std::span<const int> seq) {
  for (int v : seq) {
    if (v < 0 || static_cast<std::size_t>(v) >= seq.size()) return false;
  }
  return erdos_gallai_sorted(sorted_desc(seq));
}

bool is_realizable(std::span<const int> seq) {
  std::int64_t sum = 0;
  for (int v : seq) {
    if (v < 0 || static_cast<std::size_t>(v) >= seq.size()) {
      throw std::invalid_argument("degree " + std::to_string(v) + " outside [0, n-1] for n = " +
                                  std::to_string(seq.size()));
    }
    sum += v;
  }
  return sum % 2 == 0 && erdos_gallai_sorted(sorted_desc(seq));
}

std::vector<std::size_t> GroupDegreeProfile::ordering() const {
  std::vector<std::size_t> order(delta.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return delta[a] > delta[b]; });
  return order;
}

std::vector<int> GroupDegreeProfile::expand() const {
  std::vector<int> seq;
  seq.reserve(num_nodes());
  for (auto g : ordering()) seq.insert(seq.end(), sizes[g], delta[g]);
  return seq;
}

std::size_t GroupDegreeProfile::num_nodes() const {
  return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

std::int64_t GroupDegreeProfile::degree_sum() const {
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < delta.size(); ++j) sum += static_cast<std::int64_t>(sizes[j]) * delta[j];
  return sum;
}

std::int64_t repair_cost(const GroupDegreeProfile& before, const GroupDegreeProfile& after) {
  if (before.sizes != after.sizes) throw std::invalid_argument("repair_cost: group sizes differ");
  std::int64_t cost = 0;
  for (std::size_t j = 0; j < before.delta.size(); ++j) {
    cost += static_cast<std::int64_t>(before.sizes[j]) * std::abs(after.delta[j] - before.delta[j]);
  }
  return cost;
}

GroupDegreeProfile enforce_realizability(const GroupDegreeProfile& profile, std::size_t n,
                                         EnforceStats* stats) {
  check_profile(profile, n);
  GroupDegreeProfile current = profile;
  std::size_t rounds = 0;

  while (true) {
    const auto order = current.ordering();
    const auto seq = current.expand();
    if (erdos_gallai_sorted(seq)) break;
    if (++rounds > kMaxOuterIterations) {
      throw std::logic_error("enforce_realizability did not converge");
    }

    // Per-position form of the inequalities: position p may carry at most
    // b[p] - b[p-1]. Their prefix sums give back the original inequalities.
    const auto b = erdos_gallai_rhs(seq);
    std::vector<std::int64_t> violation(current.delta.size(), 0);
    std::size_t pos = 0;
    for (auto g : order) {
      for (std::size_t c = 0; c < current.sizes[g]; ++c, ++pos) {
        const std::int64_t excess = seq[pos] - (b[pos + 1] - b[pos]);
        if (excess > 0) violation[g] += excess;
      }
    }
    for (std::size_t g = 0; g < current.delta.size(); ++g) {
      if (violation[g] == 0) continue;
      const auto size = static_cast<std::int64_t>(current.sizes[g]);
      const auto cut = (violation[g] + size - 1) / size;
      current.delta[g] = static_cast<int>(std::max<std::int64_t>(0, current.delta[g] - cut));
    }
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
      auto& lower = current.delta[order[idx]];
      lower = std::min(lower, current.delta[order[idx - 1]]);
    }
  }
  if (stats) stats->outer_iterations = rounds;
  return current;
}

GroupDegreeProfile fix_parity(const GroupDegreeProfile& profile, std::size_t n) {
  check_profile(profile, n);
  if (profile.degree_sum() % 2 == 0) return profile;

  std::vector<std::size_t> odd;
  for (std::size_t g = 0; g < profile.delta.size(); ++g) {
    if ((static_cast<std::int64_t>(profile.sizes[g]) * profile.delta[g]) % 2 != 0) odd.push_back(g);
  }
  if (odd.empty()) throw std::logic_error("odd degree sum without an odd group");
  std::sort(odd.begin(), odd.end(), [&](std::size_t a, std::size_t b) {
    if (profile.sizes[a] != profile.sizes[b]) return profile.sizes[a] < profile.sizes[b];
    if (profile.delta[a] != profile.delta[b]) return profile.delta[a] < profile.delta[b];
    return a < b;
  });

  // Both directions move `size` units, so a feasible decrease always wins
  // the tie.
  for (auto g : odd) {
    for (int step : {-1, +1}) {
      const int value = profile.delta[g] + step;
      if (value < 0 || static_cast<std::size_t>(value) >= n) continue;
      GroupDegreeProfile candidate = profile;
      candidate.delta[g] = value;
      if (profile_realizable(candidate)) return candidate;
    }
  }

  // No single +-1 move works: lower the preferred group, restore the
  // inequalities and try again. The degree sum strictly drops each time.
  GroupDegreeProfile lowered = profile;
  lowered.delta[odd.front()] -= 1;
  return fix_parity(enforce_realizability(lowered, n), n);
}

RepairResult repair_degree_matrix(const DegreeMatrix& d_anon, const AnonymityGrouping& grouping,
                                  std::size_t threads) {
  const std::size_t n = d_anon.num_nodes();
  if (grouping.assignment.size() != n || !grouping.complete()) {
    throw std::invalid_argument("repair_degree_matrix: grouping does not cover every node");
  }
  const auto members = grouping.members();
  for (const auto& group : members) {
    if (group.empty()) throw std::invalid_argument("repair_degree_matrix: empty group");
  }

  RepairResult result;
  result.repaired = d_anon;
  result.column_costs.assign(d_anon.num_slices(), 0);
  std::vector<std::uint8_t> repaired(d_anon.num_slices(), 0), parity(d_anon.num_slices(), 0);
  std::vector<GroupDegreeProfile> fixed(d_anon.num_slices());

  parallel_for(d_anon.num_slices(), threads, [&](std::size_t t) {
    if (is_realizable(d_anon.column(t))) return;
    GroupDegreeProfile profile;
    for (const auto& group : members) {
      const int value = d_anon.at(group.front(), t);
      for (auto i : group) {
        if (d_anon.at(i, t) != value) {
          throw std::invalid_argument("repair_degree_matrix: group not degree-uniform in slice " +
                                      std::to_string(t));
        }
      }
      profile.delta.push_back(value);
      profile.sizes.push_back(group.size());
    }
    auto enforced = enforce_realizability(profile, n);
    parity[t] = enforced.degree_sum() % 2 != 0;
    fixed[t] = fix_parity(enforced, n);
    result.column_costs[t] = repair_cost(profile, fixed[t]);
    repaired[t] = 1;
  });

  for (std::size_t t = 0; t < d_anon.num_slices(); ++t) {
    if (!repaired[t]) continue;
    ++result.columns_repaired;
    result.parity_fixes += parity[t];
    result.total_cost += result.column_costs[t];
    for (std::size_t g = 0; g < members.size(); ++g) {
      for (auto i : members[g]) result.repaired.set(i, t, fixed[t].delta[g]);
    }
  }
  return result;
}

}  // namespace tganon
