#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using tganon::AnonymizerConfig;
using tganon::AssignmentMode;

struct ConfigFlags {
  std::size_t k = 2;
  std::size_t restarts = 20;
  std::size_t inner_iters = 50;
  std::size_t greedy_perms = 10;
  std::uint64_t seed = 0;
  AssignmentMode mode = AssignmentMode::greedy;
  std::size_t threads = 0;

  AnonymizerConfig config() const {
    AnonymizerConfig cfg;
    cfg.k = tganon::AnonymityLevel(k);
    cfg.restarts = restarts;
    cfg.inner_iters = inner_iters;
    cfg.greedy_perms = greedy_perms;
    cfg.seed = seed;
    cfg.assignment_mode = mode;
    cfg.threads = threads;
    return cfg;
  }
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f, bool with_k) {
  if (with_k) cmd->add_option("--k", f.k, "Anonymity level")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--restarts", f.restarts, "Random initial partitions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--inner-iters", f.inner_iters, "Cap on assignment/update alternations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--greedy-perms", f.greedy_perms, "Median orders tried by the greedy assignment")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  const std::map<std::string, AssignmentMode> modes = {{"greedy", AssignmentMode::greedy},
                                                      {"exact", AssignmentMode::exact}};
  cmd->add_option("--assignment", f.mode, "Assignment step: greedy or exact")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->default_str("greedy");
  cmd->add_option("--threads", f.threads, "Workers (0 = all cores; TGANON_THREADS caps it)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-degree anonymization of time-varying graphs"};
  app.require_subcommand(1);

  // anonymize
  tganon::cli::AnonymizeOptions anon;
  ConfigFlags anon_flags;
  auto* anonymize = app.add_subcommand("anonymize", "Anonymize a temporal edge list");
  anonymize->add_option("input", anon.input.path, "Input graph")->required();
  add_config_flags(anonymize, anon_flags, true);
  anonymize->add_option("--out-dir", anon.out_dir, "Output directory")->capture_default_str();
  anonymize->add_option("--bucket", anon.input.bucket, "Merge this many consecutive slices on load")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  anonymize->add_flag("--labeled", anon.input.labeled, "Input is a 't u v' event stream with string labels");

  // verify
  tganon::cli::VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check an anonymized graph against its original");
  verify->add_option("original", ver.original.path, "Original graph")->required();
  verify->add_option("anonymized", ver.anonymized.path, "Anonymized graph")->required();
  verify->add_option("--k", ver.k, "Anonymity level")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--bucket", ver.original.bucket, "Bucket width applied to the original")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_flag("--labeled", ver.original.labeled, "Original is a labeled event stream");

  // synth
  tganon::cli::SynthOptions syn;
  std::size_t synth_seed_count = 1;
  std::uint64_t synth_first_seed = 0;
  auto* synth = app.add_subcommand("synth", "Generate synthetic graphs");
  synth->add_option("--nodes", syn.num_nodes, "Node count")->capture_default_str();
  synth->add_option("--slices", syn.num_slices, "Slice count")->capture_default_str();
  synth->add_option("--p0", syn.p0, "Edge probability of the first slice")->capture_default_str();
  synth->add_option("--theta", syn.thetas, "Flip probabilities (default 0.0, 0.05, ..., 0.5)");
  synth->add_option("--seeds", synth_seed_count, "Graphs per theta")->capture_default_str();
  synth->add_option("--seed", synth_first_seed, "First seed")->capture_default_str();
  synth->add_option("--out-dir", syn.out_dir, "Output directory")->capture_default_str();

  // experiment
  tganon::experiments::SuiteOptions exp;
  ConfigFlags exp_flags;
  auto* experiment = app.add_subcommand("experiment", "Run an experiment suite and write CSV");
  experiment->add_option("suite", exp.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(tganon::experiments::suite_names()));
  add_config_flags(experiment, exp_flags, false);
  experiment->add_option("--k", exp.ks, "Anonymity levels (suite default when omitted)");
  experiment->add_option("--theta", exp.thetas, "Flip probabilities (suite default when omitted)");
  experiment->add_option("--seeds", exp.seeds, "Repetitions per point")->capture_default_str();
  experiment->add_option("--nodes", exp.num_nodes, "Synthetic node count")->capture_default_str();
  experiment->add_option("--slices", exp.num_slices, "Synthetic slice count")->capture_default_str();
  experiment->add_option("--p0", exp.p0, "Edge probability of the first slice")->capture_default_str();
  experiment->add_option("--sizes", exp.sizes, "Node counts for greedy-vs-exact");
  experiment->add_option("--bucket", exp.buckets, "Bucket widths for resolution");
  experiment->add_option("--input", exp.input, "Graph for the resolution suite instead of synthetic data");
  experiment->add_option("--instances", exp.instances, "Sequences for realizability-cdf")->capture_default_str();
  experiment->add_option("--damping", exp.damping, "PageRank damping")->capture_default_str();
  experiment->add_option("--out-dir", exp.out_dir, "Output directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*anonymize) {
      anon.cfg = anon_flags.config();
      return tganon::cli::cmd_anonymize(anon, std::cout, std::cerr);
    }
    if (*verify) return tganon::cli::cmd_verify(ver, std::cout, std::cerr);
    if (*synth) {
      syn.seeds.clear();
      for (std::size_t s = 0; s < synth_seed_count; ++s) syn.seeds.push_back(synth_first_seed + s);
      return tganon::cli::cmd_synth(syn, std::cout, std::cerr);
    }
    exp.base = exp_flags.config();
    exp.first_seed = exp_flags.seed;
    exp.threads = exp_flags.threads;
    return tganon::cli::cmd_experiment(exp, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tganon::cli::kExitInternal;
  }
}
