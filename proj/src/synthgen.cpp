#include "tganon/synthgen.hpp"

#include <stdexcept>
#include <vector>

namespace tganon {

void SynthParams::validate() const {
  if (num_nodes < 2) throw std::invalid_argument("synthgen: n must be >= 2");
  if (num_slices < 1) throw std::invalid_argument("synthgen: T must be >= 1");
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("synthgen: theta must be in [0, 1]");
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("synthgen: p0 must be in [0, 1]");
}

TemporalGraph generate(const SynthParams& params, std::mt19937_64& rng) {
  params.validate();
  const std::size_t n = params.num_nodes;
  std::bernoulli_distribution initial(params.p0);
  std::bernoulli_distribution flip(params.theta);

  std::vector<char> present(n * (n - 1) / 2);
  for (auto& state : present) state = initial(rng);

  std::vector<EdgeList> slices(params.num_slices);
  for (std::size_t t = 0; t < params.num_slices; ++t) {
    if (t > 0) {
      for (auto& state : present) state ^= static_cast<char>(flip(rng));
    }
    std::size_t pair = 0;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v, ++pair) {
        if (present[pair]) slices[t].push_back({u, v});
      }
    }
  }
  return TemporalGraph(n, std::move(slices));
}

}  // namespace tganon
