#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "tganon/anonymizer.hpp"
#include "tganon/constructor.hpp"
#include "tganon/io.hpp"
#include "tganon/metrics.hpp"
#include "tganon/pipeline.hpp"
#include "tganon/realizability.hpp"
#include "tganon/synthgen.hpp"

namespace props {
namespace {

using namespace tganon;
using CaseFn = std::function<std::string(gen::Rng&)>;

template <typename... Args>
std::string say(const Args&... args) {
  std::ostringstream s;
  (s << ... << args);
  return s.str();
}

template <typename T>
std::string str(const std::vector<T>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

Property per_case(std::string name, CaseFn fn) {
  return {name, [fn](std::size_t cases, std::uint64_t seed) {
            Outcome o;
            o.cases = cases;
            for (std::size_t i = 0; i < cases; ++i) {
              auto rng = case_rng(seed, i);
              std::string message;
              try {
                message = fn(rng);
              } catch (const std::exception& e) {
                message = say("unexpected exception: ", e.what());
              }
              if (!message.empty() && o.failures++ == 0) o.first_failure = say("case ", i, ": ", message);
            }
            return o;
          }};
}

std::vector<int> expand(const GroupDegreeProfile& p) {
  std::vector<int> seq;
  for (std::size_t j = 0; j < p.delta.size(); ++j) seq.insert(seq.end(), p.sizes[j], p.delta[j]);
  return seq;
}

AnonymizerConfig small_config(gen::Rng& rng, std::size_t k) {
  AnonymizerConfig cfg;
  cfg.k = AnonymityLevel(k);
  cfg.restarts = gen::uniform(rng, 1, 3);
  cfg.inner_iters = gen::uniform(rng, 1, 10);
  cfg.greedy_perms = gen::uniform(rng, 1, 4);
  cfg.seed = rng();
  cfg.assignment_mode = gen::uniform(rng, 0, 1) ? AssignmentMode::exact : AssignmentMode::greedy;
  cfg.sorted_start = gen::uniform(rng, 0, 1) == 1;
  return cfg;
}

DegreeMatrix any_matrix(gen::Rng& rng, std::size_t n, std::size_t slices) {
  return gen::uniform(rng, 0, 1) ? gen::clustered_matrix(rng, n, slices) : gen::random_matrix(rng, n, slices, 6);
}

// ---- graph_core ------------------------------------------------------------

std::string column_sums_even(gen::Rng& rng) {
  const auto g = gen::random_graph(rng, gen::uniform(rng, 1, 15), gen::uniform(rng, 1, 4));
  const auto d = degree_matrix(g);
  for (std::size_t t = 0; t < g.num_slices(); ++t) {
    long sum = 0;
    for (int v : d.column(t)) sum += v;
    if (sum % 2 != 0 || sum != 2 * static_cast<long>(g.slice(t).size())) return say("slice ", t, " sums to ", sum);
    if (d.column(t) != oracle::degrees({g.slice(t).begin(), g.slice(t).end()}, g.num_nodes())) {
      return say("slice ", t, " degrees differ from the oracle");
    }
  }
  return {};
}

std::string k_anonymity_monotone(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 12);
  const auto d = any_matrix(rng, n, gen::uniform(rng, 1, 3));
  if (!is_k_anonymous(d, AnonymityLevel(1))) return "k = 1 rejected";
  const auto rows = d.rows();
  std::size_t smallest_class = n;
  for (const auto& r : rows) {
    smallest_class = std::min<std::size_t>(smallest_class, static_cast<std::size_t>(std::count(rows.begin(), rows.end(), r)));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    if (is_k_anonymous(d, AnonymityLevel(k)) != (k <= smallest_class)) return say("wrong answer for k = ", k);
  }
  return {};
}

std::string edit_count_lower_bound(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 12), slices = gen::uniform(rng, 1, 3);
  const auto g = gen::random_graph(rng, n, slices), h = gen::random_graph(rng, n, slices);
  const auto edits = edge_edit_count(g, h);
  std::size_t naive = 0;
  for (std::size_t t = 0; t < slices; ++t) {
    std::set<Edge> a(g.slice(t).begin(), g.slice(t).end()), b(h.slice(t).begin(), h.slice(t).end());
    for (const auto& e : a) naive += !b.count(e);
    for (const auto& e : b) naive += !a.count(e);
  }
  if (edits != naive) return say("edit count ", edits, " vs symmetric difference ", naive);
  const double bound = degree_distance(degree_matrix(g), degree_matrix(h));
  if (static_cast<double>(edits) < bound) return say("edits ", edits, " below bound ", bound);
  if (edge_edit_count(g, g) != 0) return "self distance not zero";
  return {};
}

std::string edgelist_round_trip(gen::Rng& rng) {
  const auto g = gen::random_graph(rng, gen::uniform(rng, 1, 15), gen::uniform(rng, 1, 4));
  std::stringstream s;
  write_temporal_edgelist(s, g);
  if (!(read_temporal_edgelist(s) == g)) return "round trip changed the graph";
  return {};
}

std::string degree_csv_round_trip(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 15);
  const auto d = gen::random_matrix(rng, n, gen::uniform(rng, 1, 4), 20);
  std::stringstream s;
  write_degree_csv(s, d);
  if (!(read_degree_csv(s) == d)) return "round trip changed the matrix";
  return {};
}

// ---- anonymizer ------------------------------------------------------------

std::string anonymization_k_anonymous(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 20);
  const auto d = any_matrix(rng, n, gen::uniform(rng, 1, 3));
  const std::size_t k = gen::uniform(rng, 1, n);
  const auto cfg = small_config(rng, k);
  const auto out = degree_anonymization(d, cfg);
  if (!is_k_anonymous(out.anonymized, cfg.k)) return say("not ", k, "-anonymous");
  out.grouping.validate(cfg.k);
  if (out.grouping.num_groups != n / k) return say("group count ", out.grouping.num_groups);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = out.anonymized.row(i);
    if (!std::equal(row.begin(), row.end(), out.medians[out.grouping.assignment[i]].begin())) {
      return say("row ", i, " differs from its median");
    }
  }
  if (out.cost != degree_l1_distance(d, out.anonymized)) return "reported cost is not the l1 distance";
  return {};
}

std::string cost_non_increasing(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 2, 20);
  const auto d = any_matrix(rng, n, gen::uniform(rng, 1, 3));
  auto cfg = small_config(rng, gen::uniform(rng, 1, n));
  const auto out = degree_anonymization(d, cfg);
  for (std::size_t r = 0; r < out.restarts.size(); ++r) {
    const auto& trace = out.restarts[r].cost_trace;
    for (std::size_t i = 1; i < trace.size(); ++i) {
      if (trace[i] > trace[i - 1]) return say("restart ", r, " cost rose: ", str(trace));
    }
    if (trace.back() != out.restarts[r].final_cost) return "final cost differs from trace";
  }
  return {};
}

std::string exact_not_worse_than_greedy(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 2, 10);
  const auto d = any_matrix(rng, n, gen::uniform(rng, 1, 3));
  const AnonymityLevel k(gen::uniform(rng, 1, n));
  const auto p = group_medians(d, initial_partition(n, k, rng));
  const auto exact = exact_assignment(d, p, k);
  const auto greedy = greedy_assignment(d, p, k, gen::uniform(rng, 1, 5), rng);
  exact.grouping.validate(k);
  greedy.grouping.validate(k);
  if (exact.cost > greedy.cost) return say("exact ", exact.cost, " > greedy ", greedy.cost);
  if (exact.cost != assignment_cost(d, p, exact.grouping)) return "exact cost misreported";
  const auto best = oracle::best_assignment_cost(d.rows(), p, k.value());
  if (exact.cost != best) return say("exact ", exact.cost, " vs enumeration ", best);
  return {};
}

std::string greedy_group_sizes(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 30);
  const auto d = any_matrix(rng, n, gen::uniform(rng, 1, 3));
  const AnonymityLevel k(gen::uniform(rng, 1, n));
  const auto grouping = initial_partition(n, k, rng);
  const auto p = group_medians(d, grouping);
  const auto a = greedy_assignment(d, p, k, gen::uniform(rng, 1, 4), rng);
  const std::size_t residual = n - p.size() * k.value();
  for (auto size : a.grouping.group_sizes()) {
    if (size < k.value() || size > k.value() + residual) return say("group size ", size);
  }
  for (auto size : grouping.group_sizes()) {
    if (size < k.value()) return say("initial group size ", size);
  }
  return {};
}

std::string set_median_optimal(gen::Rng& rng) {
  const std::size_t count = gen::uniform(rng, 1, 7), width = gen::uniform(rng, 1, 3);
  oracle::Rows rows(count, std::vector<int>(width));
  for (auto& r : rows) {
    for (auto& v : r) v = static_cast<int>(gen::uniform(rng, 0, 8));
  }
  const auto median = set_median(rows);
  for (std::size_t t = 0; t < width; ++t) {
    int lo = rows[0][t], hi = rows[0][t];
    for (const auto& r : rows) lo = std::min(lo, r[t]), hi = std::max(hi, r[t]);
    if (median[t] < lo || median[t] > hi) return say("component ", t, " outside [", lo, ", ", hi, "]");
  }
  const auto cost = oracle::l1_sum(rows, median);
  if (cost != oracle::box_median_cost(rows)) return say("median cost ", cost, " not minimal");
  return {};
}

std::string deterministic_across_threads(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 2, 20);
  const auto d = any_matrix(rng, n, gen::uniform(rng, 1, 3));
  auto cfg = small_config(rng, gen::uniform(rng, 1, n));
  cfg.restarts = gen::uniform(rng, 2, 4);
  cfg.threads = 1;
  const auto a = degree_anonymization(d, cfg);
  cfg.threads = 3;
  const auto b = degree_anonymization(d, cfg);
  if (!(a.anonymized == b.anonymized) || !(a.grouping == b.grouping) || a.cost != b.cost ||
      a.best_restart != b.best_restart) {
    return "outcome depends on the worker count";
  }
  return {};
}

// ---- realizability ---------------------------------------------------------

std::string realizable_matches_enumeration(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 6);
  std::vector<int> seq = gen::uniform(rng, 0, 1) ? gen::random_graphical(rng, n) : std::vector<int>(n);
  for (auto& v : seq) {
    if (gen::uniform(rng, 0, 1)) v = static_cast<int>(gen::uniform(rng, 0, n - 1));
  }
  if (is_realizable(seq) != oracle::graph_exists(seq)) return say("disagree on ", str(seq));
  return {};
}

std::string realizable_matches_direct(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 40);
  std::vector<int> seq = gen::random_graphical(rng, n);
  const std::size_t changes = gen::uniform(rng, 0, 3);
  for (std::size_t c = 0; c < changes; ++c) seq[gen::uniform(rng, 0, n - 1)] = static_cast<int>(gen::uniform(rng, 0, n - 1));
  if (is_realizable(seq) != oracle::erdos_gallai(seq)) return say("is_realizable disagrees on ", str(seq));
  if (satisfies_erdos_gallai(seq) != oracle::erdos_gallai(seq, false)) {
    return say("satisfies_erdos_gallai disagrees on ", str(seq));
  }
  return {};
}

std::string enforce_properties(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 2, 30);
  const auto p = gen::random_profile(rng, n, gen::uniform(rng, 1, n));
  const auto out = enforce_realizability(p, n);
  if (out.sizes != p.sizes) return "group sizes changed";
  if (!oracle::erdos_gallai(expand(out), false)) return say("output ", str(out.delta), " violates the inequalities");
  for (std::size_t a = 0; a < p.delta.size(); ++a) {
    if (out.delta[a] > p.delta[a] || out.delta[a] < 0) return say("group ", a, " raised or negative");
    for (std::size_t b = 0; b < p.delta.size(); ++b) {
      if (p.delta[a] > p.delta[b] && out.delta[a] < out.delta[b]) return "group order not preserved";
    }
  }
  if (!(enforce_realizability(out, n) == out)) return "not idempotent";
  if (oracle::erdos_gallai(expand(p), false) && !(out == p)) return "feasible input changed";
  return {};
}

std::string parity_properties(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 2, 30);
  const auto p = enforce_realizability(gen::random_profile(rng, n, gen::uniform(rng, 1, n)), n);
  const auto out = fix_parity(p, n);
  if (out.sizes != p.sizes) return "group sizes changed";
  if (!oracle::erdos_gallai(expand(out))) return say("output ", str(out.delta), " not graphical");
  if (p.degree_sum() % 2 == 0 && !(out == p)) return "even input changed";
  if (!(fix_parity(out, n) == out)) return "not idempotent";
  return {};
}

std::string repair_matrix_properties(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 2, 25), slices = gen::uniform(rng, 1, 4);
  const AnonymityLevel k(gen::uniform(rng, 1, n));
  auto grouping = initial_partition(n, k, rng);
  DegreeMatrix d(n, slices);
  for (std::size_t t = 0; t < slices; ++t) {
    // Mix in realizable columns so pass-through is exercised.
    const bool graphical = gen::uniform(rng, 0, 2) == 0;
    std::vector<int> group_degree(grouping.num_groups);
    for (auto& v : group_degree) v = graphical ? 0 : static_cast<int>(gen::uniform(rng, 0, n - 1));
    for (std::size_t i = 0; i < n; ++i) d.set(i, t, group_degree[grouping.assignment[i]]);
  }
  const auto r = repair_degree_matrix(d, grouping);
  std::size_t repaired = 0;
  for (std::size_t t = 0; t < slices; ++t) {
    const auto before = d.column(t), after = r.repaired.column(t);
    if (!oracle::erdos_gallai(after)) return say("column ", t, " not graphical");
    if (oracle::erdos_gallai(before) && before != after) return say("realizable column ", t, " changed");
    repaired += !oracle::erdos_gallai(before);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (grouping.assignment[i] != grouping.assignment[j]) continue;
      const auto a = r.repaired.row(i), b = r.repaired.row(j);
      if (!std::equal(a.begin(), a.end(), b.begin())) return "group no longer uniform";
    }
  }
  if (!is_k_anonymous(r.repaired, k)) return "lost k-anonymity";
  if (r.columns_repaired != repaired) return say("columns_repaired ", r.columns_repaired, " vs ", repaired);
  if (r.total_cost != degree_l1_distance(d, r.repaired)) return "total cost misreported";
  return {};
}

std::string heuristic_not_below_optimum(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 2, 8);
  const auto inst = gen::random_nonrealizable(rng, n, 1, std::min<std::size_t>(n, 4));
  const auto out = fix_parity(enforce_realizability(inst.profile, n), n);
  if (!oracle::erdos_gallai(expand(out))) return "heuristic output not graphical";
  const auto cost = repair_cost(inst.profile, out);
  const auto best = oracle::best_uniform_repair(inst.profile.delta, inst.profile.sizes);
  if (cost < best) return say("heuristic ", cost, " below optimum ", best);
  return {};
}

// ---- constructor -----------------------------------------------------------

std::string build_slice_exact(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 25);
  const auto target = gen::random_graphical(rng, n);
  const auto original = gen::random_slice(rng, n, gen::uniform_real(rng, 0.0, 1.0));
  const auto edges = build_slice(target, original);
  std::set<Edge> unique(edges.begin(), edges.end());
  if (unique.size() != edges.size()) return "duplicate edge";
  for (const auto& e : edges) {
    if (e.u == e.v || e.u >= n || e.v >= n) return "bad edge";
  }
  if (oracle::degrees(edges, n) != target) return say("degrees differ from target ", str(target));
  if (n <= 6) {
    const int best = oracle::max_overlap(target, original);
    if (static_cast<int>(edge_overlap(edges, original)) > best) return "overlap above the enumerated maximum";
  }
  return {};
}

std::string build_temporal_exact(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 20), slices = gen::uniform(rng, 1, 4);
  DegreeMatrix target(n, slices);
  for (std::size_t t = 0; t < slices; ++t) {
    const auto col = gen::random_graphical(rng, n);
    for (std::size_t i = 0; i < n; ++i) target.set(i, t, col[i]);
  }
  const auto original = gen::random_graph(rng, n, slices);
  const auto built = build_temporal(target, original);
  if (!(degree_matrix(built) == target)) return "degree matrix differs from target";
  return {};
}

Property overlap_vs_havel_hakimi() {
  return {"constructor.overlap_not_below_havel_hakimi", [](std::size_t cases, std::uint64_t seed) {
            Outcome o;
            o.cases = cases;
            std::size_t priority_total = 0, plain_total = 0, wins = 0, losses = 0;
            for (std::size_t i = 0; i < cases; ++i) {
              auto rng = case_rng(seed, i);
              const std::size_t n = gen::uniform(rng, 2, 20);
              const auto original = gen::random_slice(rng, n, gen::uniform_real(rng, 0.1, 0.7));
              // Target near the original: its degrees, perturbed by a second graph.
              auto target = oracle::degrees(original, n);
              if (gen::uniform(rng, 0, 1)) target = gen::random_graphical(rng, n);
              const auto a = edge_overlap(build_slice(target, original), original);
              const auto b = edge_overlap(havel_hakimi(target), original);
              priority_total += a;
              plain_total += b;
              wins += a > b;
              losses += a < b;
            }
            // Checked over the corpus, not per instance.
            if (priority_total < plain_total) {
              o.failures = 1;
              o.first_failure = say("total overlap ", priority_total, " < ", plain_total);
            }
            o.note = say("overlap priority=", priority_total, " plain=", plain_total, " wins=", wins,
                         " losses=", losses);
            return o;
          }};
}

std::string pipeline_edit_bound(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 2, 16), slices = gen::uniform(rng, 1, 3);
  const auto g = gen::random_graph(rng, n, slices);
  const auto cfg = small_config(rng, gen::uniform(rng, 1, n));
  const auto r = run_pipeline(g, cfg);
  if (!(degree_matrix(r.graph) == r.repair.repaired)) return "constructed degrees differ from target";
  if (!is_k_anonymous(degree_matrix(r.graph), cfg.k)) return "output not k-anonymous";
  const auto edits = edge_edit_count(g, r.graph);
  const double bound = 0.5 * static_cast<double>(degree_l1_distance(r.original_degrees, r.repair.repaired));
  if (static_cast<double>(edits) < bound) return say("edits ", edits, " below ", bound);
  return {};
}

// ---- metrics ---------------------------------------------------------------

std::string pagerank_properties(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 20);
  const auto edges = gen::random_slice(rng, n, gen::uniform_real(rng, 0.0, 0.8));
  const double damping = gen::uniform_real(rng, 0.5, 0.95);
  const auto pr = pagerank(edges, n, damping);
  const auto ref = oracle::pagerank(edges, n, damping);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pr[i] < 0.0) return "negative entry";
    if (std::abs(pr[i] - ref[i]) > 1e-8) return say("node ", i, ": ", pr[i], " vs ", ref[i]);
    sum += pr[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) return say("sums to ", sum);
  return {};
}

std::string correlation_properties(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 12);
  const auto g = gen::random_graph(rng, n, gen::uniform(rng, 2, 4));
  for (bool zero : {false, true}) {
    const double c = temporal_correlation(g, zero ? IsolatedTerms::count_as_zero : IsolatedTerms::exclude);
    if (c < 0.0 || c > 1.0 + 1e-12) return say("out of range: ", c);
    const double ref = oracle::temporal_correlation(g, zero);
    if (std::abs(c - ref) > 1e-12) return say(c, " vs oracle ", ref);
  }
  return {};
}

std::string correlation_relabel_invariant(gen::Rng& rng) {
  const std::size_t n = gen::uniform(rng, 1, 12);
  const auto g = gen::random_graph(rng, n, gen::uniform(rng, 2, 4));
  const auto perm = gen::permutation(rng, n);
  std::vector<EdgeList> slices;
  for (std::size_t t = 0; t < g.num_slices(); ++t) {
    EdgeList s;
    for (const auto& e : g.slice(t)) s.push_back(make_edge(perm[e.u], perm[e.v]));
    slices.push_back(std::move(s));
  }
  const TemporalGraph h(n, std::move(slices));
  if (std::abs(temporal_correlation(g) - temporal_correlation(h)) > 1e-12) return "changed under relabeling";
  return {};
}

std::string cosine_self(gen::Rng& rng) {
  std::vector<double> u(gen::uniform(rng, 1, 20));
  for (auto& x : u) x = gen::uniform_real(rng, -1.0, 1.0);
  u[0] = 0.5;  // never all zero
  if (std::abs(cosine_similarity(u, u) - 1.0) > 1e-12) return "cos(u, u) != 1";
  auto scaled = u;
  for (auto& x : scaled) x *= 3.5;
  if (std::abs(cosine_similarity(u, scaled) - 1.0) > 1e-12) return "not scale invariant";
  return {};
}

// ---- synthgen --------------------------------------------------------------

std::string synth_properties(gen::Rng& rng) {
  SynthParams p{gen::uniform(rng, 2, 15), gen::uniform(rng, 1, 5), gen::uniform_real(rng, 0.0, 1.0),
                gen::uniform_real(rng, 0.0, 1.0)};
  if (gen::uniform(rng, 0, 3) == 0) p.theta = 0.0;
  if (gen::uniform(rng, 0, 3) == 0) p.theta = 1.0;
  const auto seed = rng();
  std::mt19937_64 a(seed), b(seed);
  const auto g = generate(p, a);
  if (!(generate(p, b) == g)) return "not deterministic";
  if (g.num_nodes() != p.num_nodes || g.num_slices() != p.num_slices) return "wrong shape";
  for (std::size_t t = 1; t < g.num_slices(); ++t) {
    const auto prev = g.slice(t - 1), cur = g.slice(t);
    if (p.theta == 0.0 && !std::equal(prev.begin(), prev.end(), cur.begin(), cur.end())) return "theta 0 changed";
    if (p.theta == 1.0 && edge_overlap(prev, cur) != 0) return "theta 1 kept an edge";
    if (p.theta == 1.0 && prev.size() + cur.size() != p.num_nodes * (p.num_nodes - 1) / 2) {
      return "theta 1 is not the complement";
    }
  }
  if (p.theta == 0.0 && g.num_slices() >= 2) {
    const auto deg = slice_degrees(g.slice(0), g.num_nodes());
    if (std::count(deg.begin(), deg.end(), 0) == 0 && std::abs(temporal_correlation(g) - 1.0) > 1e-12) {
      return "static graph correlation not 1";
    }
  }
  return {};
}

std::vector<Property> build() {
  return {
      per_case("graph.column_sums_even", column_sums_even),
      per_case("graph.k_anonymity_monotone", k_anonymity_monotone),
      per_case("graph.edit_count_lower_bound", edit_count_lower_bound),
      per_case("graph.edgelist_round_trip", edgelist_round_trip),
      per_case("graph.degree_csv_round_trip", degree_csv_round_trip),
      per_case("anonymizer.output_k_anonymous", anonymization_k_anonymous),
      per_case("anonymizer.cost_non_increasing", cost_non_increasing),
      per_case("anonymizer.exact_not_worse_than_greedy", exact_not_worse_than_greedy),
      per_case("anonymizer.greedy_group_sizes", greedy_group_sizes),
      per_case("anonymizer.set_median_optimal", set_median_optimal),
      per_case("anonymizer.deterministic_across_threads", deterministic_across_threads),
      per_case("realizability.matches_enumeration", realizable_matches_enumeration),
      per_case("realizability.matches_direct_check", realizable_matches_direct),
      per_case("realizability.enforce_invariants", enforce_properties),
      per_case("realizability.parity_invariants", parity_properties),
      per_case("realizability.repair_matrix_invariants", repair_matrix_properties),
      per_case("realizability.heuristic_not_below_optimum", heuristic_not_below_optimum),
      per_case("constructor.build_slice_exact", build_slice_exact),
      per_case("constructor.build_temporal_exact", build_temporal_exact),
      overlap_vs_havel_hakimi(),
      per_case("constructor.pipeline_edit_bound", pipeline_edit_bound),
      per_case("metrics.pagerank_matches_linear_solve", pagerank_properties),
      per_case("metrics.temporal_correlation_matches_oracle", correlation_properties),
      per_case("metrics.temporal_correlation_relabel_invariant", correlation_relabel_invariant),
      per_case("metrics.cosine_self_similarity", cosine_self),
      per_case("synthgen.valid_and_deterministic", synth_properties),
  };
}

}  // namespace

const std::vector<Property>& all() {
  static const std::vector<Property> properties = build();
  return properties;
}

const Property& find(const std::string& name) {
  for (const auto& p : all()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("no property named " + name);
}

gen::Rng case_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return gen::Rng(seq);
}

}  // namespace props
