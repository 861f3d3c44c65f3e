#pragma once

#include <optional>

#include "cyclepack/graph.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

/// Exact check for a partition into r triangles and s quadrilaterals.
///
/// Plain backtracking, independent of the exchange and solver code: triangles
/// are chosen first, then quadrilaterals, each anchored at its smallest vertex
/// and picked in ascending anchor order so every partition is visited once.
/// Throws GraphError when the order is not 3r + 4s.
std::optional<Packing> exact_partition(const Graph& g, std::size_t r, std::size_t s);

}  // namespace cyclepack
