#pragma once

#include "tganon/anonymizer.hpp"
#include "tganon/graph.hpp"
#include "tganon/realizability.hpp"

namespace tganon {

struct StageTimings {
  double anonymize_seconds = 0.0;
  double repair_seconds = 0.0;
  double construct_seconds = 0.0;
};

struct PipelineResult {
  DegreeMatrix original_degrees;
  AnonymizationOutcome anonymization;
  RepairResult repair;
  TemporalGraph graph;
  StageTimings timings;
};

/// Degree anonymization, per-slice realizability repair, then construction
/// of the anonymized graph against the original slices.
PipelineResult run_pipeline(const TemporalGraph& original, const AnonymizerConfig& cfg);

}  // namespace tganon
