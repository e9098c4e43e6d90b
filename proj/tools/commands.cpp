#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tganon/io.hpp"
#include "tganon/parallel.hpp"
#include "tganon/pipeline.hpp"
#include "tganon/realizability.hpp"
#include "tganon/synthgen.hpp"

namespace tganon::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::vector<double> kDefaultThetas = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  auto out = open_output(path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

const char* mode_name(AssignmentMode mode) { return mode == AssignmentMode::exact ? "exact" : "greedy"; }

Json verify_json(const VerifyReport& r, std::size_t k) {
  Json rows = Json::array();
  for (const auto& [degrees, nodes] : r.offending_rows) rows.push_back({{"degrees", degrees}, {"nodes", nodes}});
  return {{"k", k},
          {"pass", r.pass()},
          {"k_anonymous", r.k_anonymous},
          {"all_realizable", r.all_realizable()},
          {"slice_realizable", r.slice_realizable},
          {"edge_edits", r.edge_edits},
          {"normalized_cost", r.normalized_cost},
          {"degree_distance", r.degree_distance},
          {"unique_nodes", r.unique_nodes},
          {"offending_rows", rows}};
}

std::string theta_tag(double theta) {
  std::ostringstream s;
  s << theta;
  return s.str();
}

}  // namespace

std::size_t worker_count(std::size_t requested) {
  std::size_t workers = resolve_thread_count(requested);
  if (const char* env = std::getenv("TGANON_THREADS")) {
    std::size_t cap = 0;
    const std::string text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0) workers = std::min(workers, cap);
  }
  return workers;
}

LoadedInput load_input(const InputOptions& in) {
  if (in.bucket == 0) throw std::invalid_argument("--bucket must be >= 1");
  LoadedInput loaded;
  if (in.labeled) {
    std::ifstream stream(in.path);
    if (!stream) throw std::runtime_error("cannot open " + in.path.string());
    auto labeled = read_labeled_events(stream);
    loaded.graph = std::move(labeled.graph);
    loaded.labels = std::move(labeled.labels);
  } else {
    loaded.graph = load_temporal_edgelist(in.path);
  }
  if (in.bucket > 1) loaded.graph = rebucket(loaded.graph, in.bucket);
  return loaded;
}

bool VerifyReport::all_realizable() const {
  for (bool ok : slice_realizable) {
    if (!ok) return false;
  }
  return true;
}

VerifyReport verify(const TemporalGraph& original, const TemporalGraph& anonymized, AnonymityLevel k) {
  if (original.num_nodes() != anonymized.num_nodes() || original.num_slices() != anonymized.num_slices()) {
    throw std::invalid_argument("original and anonymized graphs differ in shape");
  }
  VerifyReport r;
  const auto d = degree_matrix(original);
  const auto published = degree_matrix(anonymized);
  r.k_anonymous = is_k_anonymous(published, k);
  for (std::size_t t = 0; t < published.num_slices(); ++t) {
    r.slice_realizable.push_back(is_realizable(published.column(t)));
  }
  r.edge_edits = edge_edit_count(original, anonymized);
  r.normalized_cost = normalized_cost(d, published);
  r.degree_distance = degree_distance(d, published);

  std::map<DegreeVector, std::vector<std::size_t>> by_row;
  for (std::size_t i = 0; i < published.num_nodes(); ++i) {
    const auto row = published.row(i);
    by_row[DegreeVector(row.begin(), row.end())].push_back(i);
  }
  for (auto& [row, nodes] : by_row) {
    if (nodes.size() == 1) ++r.unique_nodes;
    if (nodes.size() < k.value()) r.offending_rows.emplace_back(row, nodes);
  }
  return r;
}

int cmd_anonymize(const AnonymizeOptions& opts, std::ostream& out, std::ostream& err) {
  LoadedInput input;
  AnonymizerConfig cfg = opts.cfg;
  try {
    input = load_input(opts.input);
    cfg.threads = worker_count(cfg.threads);
    cfg.validate(input.graph.num_nodes());
  } catch (const ParseError& e) {
    err << "error: " << opts.input.path.string() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto& g = input.graph;
  const auto result = run_pipeline(g, cfg);

  std::filesystem::create_directories(opts.out_dir);
  const auto graph_path = opts.out_dir / "anonymized.tel";
  const auto degrees_path = opts.out_dir / "degrees.csv";
  const auto grouping_path = opts.out_dir / "grouping.csv";
  const auto report_path = opts.out_dir / "report.json";
  const auto manifest_path = opts.out_dir / "manifest.json";
  const auto labels_path = opts.out_dir / "labels.txt";

  save_temporal_edgelist(graph_path, result.graph);
  {
    auto f = open_output(degrees_path);
    write_degree_csv(f, result.repair.repaired);
  }
  {
    auto f = open_output(grouping_path);
    f << "node,group\n";
    for (std::size_t i = 0; i < g.num_nodes(); ++i) f << i << ',' << result.anonymization.grouping.assignment[i] << '\n';
  }
  if (!input.labels.empty()) {
    auto f = open_output(labels_path);
    write_labels(f, input.labels);
  }

  // Check what was actually written, not the in-memory result.
  const auto written = load_temporal_edgelist(graph_path);
  const auto check = verify(g, written, cfg.k);
  const bool matches_target = degree_matrix(written) == result.repair.repaired;
  const bool ok = check.pass() && matches_target;

  Json restarts = Json::array();
  for (const auto& r : result.anonymization.restarts) {
    restarts.push_back({{"iterations", r.iterations}, {"converged", r.converged}, {"final_cost", r.final_cost}});
  }
  Json outputs = {{"graph", graph_path.filename().string()},
                  {"degrees", degrees_path.filename().string()},
                  {"grouping", grouping_path.filename().string()}};
  if (!input.labels.empty()) outputs["labels"] = labels_path.filename().string();

  Json report = {
      {"input", opts.input.path.string()},
      {"labeled", opts.input.labeled},
      {"bucket", opts.input.bucket},
      {"num_nodes", g.num_nodes()},
      {"num_slices", g.num_slices()},
      {"k", cfg.k.value()},
      {"config",
       {{"restarts", cfg.restarts},
        {"inner_iters", cfg.inner_iters},
        {"greedy_perms", cfg.greedy_perms},
        {"seed", cfg.seed},
        {"assignment", mode_name(cfg.assignment_mode)}}},
      {"anonymization",
       {{"cost", result.anonymization.cost},
        {"normalized_cost", normalized_cost(result.original_degrees, result.anonymization.anonymized)},
        {"num_groups", result.anonymization.grouping.num_groups},
        {"best_restart", result.anonymization.best_restart},
        {"restarts", restarts}}},
      {"repair",
       {{"columns_repaired", result.repair.columns_repaired},
        {"parity_fixes", result.repair.parity_fixes},
        {"total_cost", result.repair.total_cost},
        {"column_costs", result.repair.column_costs}}},
      {"final",
       {{"cost", degree_l1_distance(result.original_degrees, result.repair.repaired)},
        {"normalized_cost", check.normalized_cost},
        {"edge_edits", check.edge_edits},
        {"edit_lower_bound", check.degree_distance}}},
      {"verification",
       {{"pass", ok},
        {"k_anonymous", check.k_anonymous},
        {"all_realizable", check.all_realizable()},
        {"matches_target", matches_target},
        {"unique_nodes", check.unique_nodes}}},
      {"outputs", outputs},
  };
  write_json(report_path, report);

  Json manifest = report;
  manifest["outputs"]["report"] = report_path.filename().string();
  manifest["threads"] = cfg.threads;
  manifest["timings"] = {{"anonymize_seconds", result.timings.anonymize_seconds},
                         {"repair_seconds", result.timings.repair_seconds},
                         {"construct_seconds", result.timings.construct_seconds}};
  write_json(manifest_path, manifest);

  out << "k=" << cfg.k.value() << " cost=" << report["final"]["cost"]
      << " normalized=" << report["final"]["normalized_cost"] << " edits=" << check.edge_edits
      << " verify=" << (ok ? "pass" : "FAIL") << '\n';
  if (!ok) {
    err << "error: anonymized graph failed verification\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto original = load_input(opts.original);
    const auto anonymized = load_input(opts.anonymized);
    const AnonymityLevel k(opts.k);
    const auto report = verify(original.graph, anonymized.graph, k);
    out << verify_json(report, opts.k).dump(2) << '\n';
    return report.pass() ? kExitOk : kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_synth(const SynthOptions& opts, std::ostream& out, std::ostream& err) {
  const auto thetas = opts.thetas.empty() ? kDefaultThetas : opts.thetas;
  try {
    for (double theta : thetas) SynthParams{opts.num_nodes, opts.num_slices, theta, opts.p0}.validate();
    std::filesystem::create_directories(opts.out_dir);
    for (double theta : thetas) {
      for (auto seed : opts.seeds) {
        auto rng = experiments::corpus_rng(seed, theta);
        const auto g = generate({opts.num_nodes, opts.num_slices, theta, opts.p0}, rng);
        const auto path = opts.out_dir / ("synth_theta" + theta_tag(theta) + "_seed" + std::to_string(seed) + ".tel");
        save_temporal_edgelist(path, g);
        out << path.string() << '\n';
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_experiment(const experiments::SuiteOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    auto resolved = opts;
    resolved.threads = worker_count(opts.threads);
    const auto path = experiments::run_suite(resolved, err);
    out << path.string() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace tganon::cli
