#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "experiments.hpp"
#include "tganon/anonymizer.hpp"
#include "tganon/graph.hpp"

namespace tganon::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;   // bad arguments or unreadable input
inline constexpr int kExitInternal = 3;

/// Worker count: `requested` (0 = hardware), capped by TGANON_THREADS when
/// that variable holds a positive integer.
std::size_t worker_count(std::size_t requested);

struct InputOptions {
  std::filesystem::path path;
  /// Input is a `t u v` event stream with string labels.
  bool labeled = false;
  /// Merge this many consecutive slices on load; 1 keeps them.
  std::size_t bucket = 1;
};

struct LoadedInput {
  TemporalGraph graph;
  std::vector<std::string> labels;  ///< empty unless labeled
};
LoadedInput load_input(const InputOptions& in);

struct AnonymizeOptions {
  InputOptions input;
  AnonymizerConfig cfg;
  std::filesystem::path out_dir = ".";
};

/// Writes anonymized.tel, degrees.csv, grouping.csv, report.json and
/// manifest.json (plus labels.txt for labeled input) into out_dir, then
/// re-verifies the written graph.
int cmd_anonymize(const AnonymizeOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  InputOptions original;
  InputOptions anonymized;
  std::size_t k = 2;
};

struct VerifyReport {
  bool k_anonymous = false;
  std::vector<bool> slice_realizable;
  std::size_t edge_edits = 0;
  double normalized_cost = 0.0;
  double degree_distance = 0.0;
  std::size_t unique_nodes = 0;
  /// Temporal degree vectors shared by fewer than k nodes, with their nodes.
  std::vector<std::pair<DegreeVector, std::vector<std::size_t>>> offending_rows;

  bool all_realizable() const;
  bool pass() const { return k_anonymous && all_realizable(); }
};

/// Throws std::invalid_argument if the graphs differ in shape.
VerifyReport verify(const TemporalGraph& original, const TemporalGraph& anonymized, AnonymityLevel k);

/// Prints the report as JSON; exit code 1 when it does not pass.
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct SynthOptions {
  std::size_t num_nodes = 100;
  std::size_t num_slices = 10;
  double p0 = 0.1;
  std::vector<double> thetas;  ///< empty = 0.0, 0.05, ..., 0.5
  std::vector<std::uint64_t> seeds = {0};
  std::filesystem::path out_dir = ".";
};

/// One file per (theta, seed): synth_theta<theta>_seed<seed>.tel.
int cmd_synth(const SynthOptions& opts, std::ostream& out, std::ostream& err);

int cmd_experiment(const experiments::SuiteOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace tganon::cli
