#include "experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "tganon/io.hpp"
#include "tganon/parallel.hpp"
#include "tganon/pipeline.hpp"
#include "tganon/synthgen.hpp"

namespace tganon::experiments {
namespace {

const std::vector<double> kDefaultThetas = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};

template <typename T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? fallback : given;
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.precision(std::numeric_limits<double>::max_digits10);
  return out;
}

double mean_iterations(const AnonymizationOutcome& outcome) {
  double total = 0.0;
  for (const auto& r : outcome.restarts) total += static_cast<double>(r.iterations);
  return outcome.restarts.empty() ? 0.0 : total / static_cast<double>(outcome.restarts.size());
}

SweepOptions sweep_from(const SuiteOptions& opts, std::vector<double> thetas, std::vector<std::size_t> ks) {
  SweepOptions s;
  s.num_nodes = opts.num_nodes;
  s.num_slices = opts.num_slices;
  s.p0 = opts.p0;
  s.thetas = or_default(opts.thetas, std::move(thetas));
  s.ks = or_default(opts.ks, std::move(ks));
  s.seeds = opts.seeds;
  s.first_seed = opts.first_seed;
  s.base = opts.base;
  s.damping = opts.damping;
  s.threads = opts.threads;
  return s;
}

// Groups consecutive records sharing (theta, k) and summarizes one field.
template <typename Field>
void write_grouped(std::ostream& out, const std::vector<RunRecord>& runs, Field field) {
  for (std::size_t begin = 0; begin < runs.size();) {
    std::size_t end = begin;
    std::vector<double> values;
    while (end < runs.size() && runs[end].theta == runs[begin].theta && runs[end].k == runs[begin].k) {
      values.push_back(field(runs[end]));
      ++end;
    }
    const auto s = summarize(values);
    out << runs[begin].theta << ',' << runs[begin].k << ',' << s.mean << ',' << s.std_error << '\n';
    begin = end;
  }
}

std::filesystem::path cost_suite(const SuiteOptions& opts, const SweepOptions& sweep, std::ostream& log) {
  log << opts.suite << ": " << sweep.thetas.size() << " theta x " << sweep.ks.size() << " k x " << sweep.seeds
      << " seeds\n";
  const auto runs = synthetic_sweep(sweep);
  const auto path = opts.out_dir / (opts.suite + ".csv");
  auto out = open_csv(path);
  out << "theta,k,mean_cost,stderr\n";
  write_grouped(out, runs, [](const RunRecord& r) { return r.normalized_cost; });
  return path;
}

std::filesystem::path utility_suite(const SuiteOptions& opts, std::ostream& log) {
  auto sweep = sweep_from(opts, {0.05, 0.1, 0.3, 0.5}, {2, 5, 10});
  sweep.with_utility = true;
  log << "utility: " << sweep.thetas.size() << " theta x " << sweep.ks.size() << " k x " << sweep.seeds
      << " seeds\n";
  const auto runs = synthetic_sweep(sweep);
  const auto path = opts.out_dir / "utility.csv";
  auto out = open_csv(path);
  out << "theta,k,mean_pr_cosine,stderr,mean_edge_edits,edits_stderr\n";
  for (std::size_t begin = 0; begin < runs.size();) {
    std::size_t end = begin;
    std::vector<double> cosine, edits;
    while (end < runs.size() && runs[end].theta == runs[begin].theta && runs[end].k == runs[begin].k) {
      cosine.push_back(runs[end].mean_pr_cosine);
      edits.push_back(static_cast<double>(runs[end].edge_edits));
      ++end;
    }
    const auto c = summarize(cosine);
    const auto e = summarize(edits);
    out << runs[begin].theta << ',' << runs[begin].k << ',' << c.mean << ',' << c.std_error << ',' << e.mean
        << ',' << e.std_error << '\n';
    begin = end;
  }
  return path;
}

std::filesystem::path resolution_suite(const SuiteOptions& opts, std::ostream& log) {
  const auto widths = or_default(opts.buckets, {1, 2, 4, 8});
  const auto ks = or_default(opts.ks, {2, 5});
  const double theta = opts.thetas.empty() ? 0.1 : opts.thetas.front();
  const std::size_t fine_slices = opts.input ? 0 : std::max<std::size_t>(opts.num_slices, 24);

  // One fine-grained graph per seed (or the user graph for every seed).
  std::vector<TemporalGraph> fine;
  if (opts.input) {
    fine.assign(opts.seeds, load_temporal_edgelist(*opts.input));
  } else {
    for (std::size_t s = 0; s < opts.seeds; ++s) {
      auto rng = corpus_rng(opts.first_seed + s, theta);
      fine.push_back(generate({opts.num_nodes, fine_slices, theta, opts.p0}, rng));
    }
  }
  log << "resolution: " << widths.size() << " widths x " << ks.size() << " k x " << opts.seeds << " seeds\n";

  struct Job {
    std::size_t width, k, seed;
  };
  std::vector<Job> jobs;
  for (auto w : widths) {
    if (w == 0) throw std::invalid_argument("bucket width must be >= 1");
    for (auto k : ks) {
      for (std::size_t s = 0; s < opts.seeds; ++s) jobs.push_back({w, k, s});
    }
  }
  std::vector<double> cost(jobs.size());
  std::vector<std::size_t> slices(jobs.size());
  parallel_for(jobs.size(), opts.threads, [&](std::size_t i) {
    const auto g = rebucket(fine[jobs[i].seed], jobs[i].width);
    AnonymizerConfig cfg = opts.base;
    cfg.k = AnonymityLevel(jobs[i].k);
    cfg.seed = opts.first_seed + jobs[i].seed;
    cfg.threads = 1;
    const auto d = degree_matrix(g);
    cost[i] = normalized_cost(d, degree_anonymization(d, cfg).anonymized);
    slices[i] = g.num_slices();
  });

  const auto path = opts.out_dir / "resolution.csv";
  auto out = open_csv(path);
  out << "bucket_width,slices,k,mean_cost,stderr\n";
  for (std::size_t begin = 0; begin < jobs.size(); begin += opts.seeds) {
    const auto s = summarize({cost.begin() + static_cast<std::ptrdiff_t>(begin),
                              cost.begin() + static_cast<std::ptrdiff_t>(begin + opts.seeds)});
    out << jobs[begin].width << ',' << slices[begin] << ',' << jobs[begin].k << ',' << s.mean << ','
        << s.std_error << '\n';
  }
  return path;
}

std::filesystem::path realizability_suite(const SuiteOptions& opts, std::ostream& log) {
  constexpr std::size_t kNodes = 10;
  log << "realizability-cdf: " << opts.instances << " sequences on " << kNodes << " nodes\n";
  std::mt19937_64 rng = corpus_rng(opts.first_seed, -1.0);
  std::vector<RepairInstance> instances;
  for (std::size_t i = 0; i < opts.instances; ++i) {
    instances.push_back(random_nonrealizable_profile(kNodes, 2, 5, rng));
  }
  std::vector<std::int64_t> heuristic(instances.size()), optimal(instances.size());
  parallel_for(instances.size(), opts.threads, [&](std::size_t i) {
    const auto& p = instances[i].profile;
    heuristic[i] = repair_cost(p, heuristic_repair(p, kNodes));
    optimal[i] = optimal_group_repair_cost(p, kNodes);
  });
  const auto path = opts.out_dir / "realizability-cdf.csv";
  auto out = open_csv(path);
  out << "instance,k,groups,heuristic_cost,optimal_cost,ratio\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    out << i << ',' << instances[i].k << ',' << instances[i].profile.delta.size() << ',' << heuristic[i] << ','
        << optimal[i] << ',' << static_cast<double>(heuristic[i]) / static_cast<double>(optimal[i]) << '\n';
  }
  return path;
}

std::filesystem::path greedy_vs_exact_suite(const SuiteOptions& opts, std::ostream& log) {
  const auto sizes = or_default(opts.sizes, {25, 50, 100, 200});
  const auto ks = or_default(opts.ks, {2, 5});
  const double theta = opts.thetas.empty() ? 0.1 : opts.thetas.front();
  for (auto n : sizes) {
    if (n > 200) throw std::invalid_argument("greedy-vs-exact is limited to n <= 200");
  }
  log << "greedy-vs-exact: " << sizes.size() << " sizes x " << ks.size() << " k x " << opts.seeds << " seeds\n";

  struct Job {
    std::size_t n, k, seed;
    AssignmentMode mode;
  };
  std::vector<Job> jobs;
  for (auto n : sizes) {
    for (auto k : ks) {
      for (auto mode : {AssignmentMode::greedy, AssignmentMode::exact}) {
        for (std::size_t s = 0; s < opts.seeds; ++s) jobs.push_back({n, k, s, mode});
      }
    }
  }
  std::vector<double> cost(jobs.size()), iters(jobs.size());
  parallel_for(jobs.size(), opts.threads, [&](std::size_t i) {
    const auto& job = jobs[i];
    auto rng = corpus_rng(opts.first_seed + job.seed, theta);
    const auto g = generate({job.n, opts.num_slices, theta, opts.p0}, rng);
    AnonymizerConfig cfg = opts.base;
    cfg.k = AnonymityLevel(job.k);
    cfg.seed = opts.first_seed + job.seed;
    cfg.assignment_mode = job.mode;
    cfg.threads = 1;
    const auto d = degree_matrix(g);
    const auto outcome = degree_anonymization(d, cfg);
    cost[i] = normalized_cost(d, outcome.anonymized);
    iters[i] = mean_iterations(outcome);
  });

  const auto path = opts.out_dir / "greedy-vs-exact.csv";
  auto out = open_csv(path);
  out << "n,k,mode,mean_cost,stderr,mean_iterations,iterations_stderr\n";
  for (std::size_t begin = 0; begin < jobs.size(); begin += opts.seeds) {
    const auto span_of = [&](const std::vector<double>& v) {
      return std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(begin),
                                 v.begin() + static_cast<std::ptrdiff_t>(begin + opts.seeds));
    };
    const auto c = summarize(span_of(cost));
    const auto it = summarize(span_of(iters));
    out << jobs[begin].n << ',' << jobs[begin].k << ','
        << (jobs[begin].mode == AssignmentMode::exact ? "exact" : "greedy") << ',' << c.mean << ','
        << c.std_error << ',' << it.mean << ',' << it.std_error << '\n';
  }
  return path;
}

}  // namespace

std::mt19937_64 corpus_rng(std::uint64_t seed, double theta) {
  const auto bits = std::bit_cast<std::uint64_t>(theta);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(bits), static_cast<std::uint32_t>(bits >> 32)};
  return std::mt19937_64(seq);
}

Summary summarize(const std::vector<double>& values) {
  Summary s;
  if (values.empty()) return s;
  const double count = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / count;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_error = std::sqrt(ss / (count - 1.0)) / std::sqrt(count);
  }
  return s;
}

std::vector<RunRecord> synthetic_sweep(const SweepOptions& opts) {
  if (opts.seeds == 0) throw std::invalid_argument("need at least one seed");
  std::vector<TemporalGraph> graphs;
  for (double theta : opts.thetas) {
    for (std::size_t s = 0; s < opts.seeds; ++s) {
      auto rng = corpus_rng(opts.first_seed + s, theta);
      graphs.push_back(generate({opts.num_nodes, opts.num_slices, theta, opts.p0}, rng));
    }
  }

  std::vector<RunRecord> runs;
  std::vector<std::size_t> graph_of;
  for (std::size_t ti = 0; ti < opts.thetas.size(); ++ti) {
    for (auto k : opts.ks) {
      for (std::size_t s = 0; s < opts.seeds; ++s) {
        RunRecord r;
        r.theta = opts.thetas[ti];
        r.k = k;
        r.seed = opts.first_seed + s;
        runs.push_back(r);
        graph_of.push_back(ti * opts.seeds + s);
      }
    }
  }

  parallel_for(runs.size(), opts.threads, [&](std::size_t i) {
    RunRecord& r = runs[i];
    const TemporalGraph& g = graphs[graph_of[i]];
    AnonymizerConfig cfg = opts.base;
    cfg.k = AnonymityLevel(r.k);
    cfg.seed = r.seed;
    cfg.threads = 1;
    const auto result = run_pipeline(g, cfg);
    r.normalized_cost = normalized_cost(result.original_degrees, result.anonymization.anonymized);
    r.mean_iterations = mean_iterations(result.anonymization);
    if (opts.with_utility) {
      const auto rows = utility_report(g, result.graph, opts.damping);
      double total = 0.0;
      for (const auto& row : rows) {
        total += row.pr_cosine;
        r.edge_edits += row.edge_edits;
      }
      r.mean_pr_cosine = total / static_cast<double>(rows.size());
    }
  });
  return runs;
}

RepairInstance random_nonrealizable_profile(std::size_t num_nodes, std::size_t k_min, std::size_t k_max,
                                            std::mt19937_64& rng) {
  if (k_min < 1 || k_min > k_max || k_max > num_nodes) throw std::invalid_argument("bad k range");
  std::uniform_int_distribution<std::size_t> pick_k(k_min, k_max);
  std::uniform_int_distribution<int> pick_degree(0, static_cast<int>(num_nodes) - 1);
  while (true) {
    RepairInstance inst;
    inst.k = pick_k(rng);
    const std::size_t m = num_nodes / inst.k;
    std::uniform_int_distribution<std::size_t> pick_group(0, m - 1);
    inst.profile.sizes.assign(m, inst.k);
    for (std::size_t r = 0; r < num_nodes - m * inst.k; ++r) ++inst.profile.sizes[pick_group(rng)];
    for (std::size_t j = 0; j < m; ++j) inst.profile.delta.push_back(pick_degree(rng));
    if (!is_realizable(inst.profile.expand())) return inst;
  }
}

std::int64_t optimal_group_repair_cost(const GroupDegreeProfile& profile, std::size_t num_nodes) {
  const std::size_t m = profile.delta.size();
  std::vector<int> candidate(m, 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  GroupDegreeProfile trial = profile;
  while (true) {
    trial.delta = candidate;
    const auto cost = repair_cost(profile, trial);
    if (cost < best && is_realizable(trial.expand())) best = cost;
    std::size_t pos = 0;
    while (pos < m && candidate[pos] == static_cast<int>(num_nodes) - 1) candidate[pos++] = 0;
    if (pos == m) break;
    ++candidate[pos];
  }
  return best;
}

GroupDegreeProfile heuristic_repair(const GroupDegreeProfile& profile, std::size_t num_nodes) {
  return fix_parity(enforce_realizability(profile, num_nodes), num_nodes);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"correlation", "k-sweep", "resolution",
                                                 "utility", "realizability-cdf", "greedy-vs-exact"};
  return names;
}

std::filesystem::path run_suite(const SuiteOptions& opts, std::ostream& log) {
  if (opts.seeds == 0) throw std::invalid_argument("need at least one seed");
  std::filesystem::create_directories(opts.out_dir);
  if (opts.suite == "correlation") return cost_suite(opts, sweep_from(opts, kDefaultThetas, {2, 5, 10}), log);
  if (opts.suite == "k-sweep") return cost_suite(opts, sweep_from(opts, {0.1}, {2, 3, 5, 10, 15, 20}), log);
  if (opts.suite == "resolution") return resolution_suite(opts, log);
  if (opts.suite == "utility") return utility_suite(opts, log);
  if (opts.suite == "realizability-cdf") return realizability_suite(opts, log);
  if (opts.suite == "greedy-vs-exact") return greedy_vs_exact_suite(opts, log);
  throw std::invalid_argument("unknown suite '" + opts.suite + "'");
}

}  // namespace tganon::experiments
