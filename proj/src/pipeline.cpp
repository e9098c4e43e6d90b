#include "tganon/pipeline.hpp"

#include <chrono>

#include "tganon/constructor.hpp"

namespace tganon {
namespace {

template <typename Fn>
double timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

PipelineResult run_pipeline(const TemporalGraph& original, const AnonymizerConfig& cfg) {
  PipelineResult r;
  r.original_degrees = degree_matrix(original);
  r.timings.anonymize_seconds = timed([&] { r.anonymization = degree_anonymization(r.original_degrees, cfg); });
  r.timings.repair_seconds = timed([&] {
    r.repair = repair_degree_matrix(r.anonymization.anonymized, r.anonymization.grouping, cfg.threads);
  });
  r.timings.construct_seconds = timed([&] { r.graph = build_temporal(r.repair.repaired, original, cfg.threads); });
  return r;
}

}  // namespace tganon
