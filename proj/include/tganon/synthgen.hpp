#pragma once

#include <cstddef>
#include <random>

#include "tganon/graph.hpp"

namespace tganon {

struct SynthParams {
  std::size_t num_nodes = 100;
  std::size_t num_slices = 10;
  /// Per-step probability that a node pair flips between absent and present.
  double theta = 0.1;
  /// Edge probability of the first slice.
  double p0 = 0.1;

  void validate() const;
};

/// Time-varying graph whose edge states persist for geometrically
/// distributed durations: slice 0 is G(n, p0), and in every later slice each
/// pair independently flips state with probability theta. theta = 0 repeats
/// slice 0; theta = 1 alternates between slice 0 and its complement.
TemporalGraph generate(const SynthParams& params, std::mt19937_64& rng);

}  // namespace tganon
