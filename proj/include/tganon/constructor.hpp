#pragma once

#include <cstddef>
#include <span>

#include "tganon/graph.hpp"

namespace tganon {

/// Realizes `target` (indexed by node) as a simple graph, preferring edges of
/// `original`.
///
/// Vertices are saturated one at a time in decreasing residual-degree order.
/// Each vertex's partners are tried by (edge in original first, larger
/// residual degree, lower index), and a partner is only accepted if the
/// remaining residual sequence still admits a completion, so construction
/// never gets stuck on a realizable target. Deterministic; no randomness.
///
/// Throws std::invalid_argument if `target` is not realizable or an original
/// edge is out of range.
EdgeList build_slice(std::span<const int> target, std::span<const Edge> original);

/// Plain Havel–Hakimi realization, ignoring any original graph.
EdgeList havel_hakimi(std::span<const int> target);

/// Builds every slice of `target` independently against the matching slice of
/// `original`. Node identities are kept across slices.
TemporalGraph build_temporal(const DegreeMatrix& target, const TemporalGraph& original,
                             std::size_t threads = 1);

}  // namespace tganon
