#pragma once

#include <cstdint>

#include "cyclepack/graph.hpp"

namespace cyclepack {

enum class GeneratorKind { UniformRandom, ConditionFiltered };

/// Random graph recipe. The generator is std::mt19937_64 seeded with `seed`
/// (its output sequence is fixed by the C++ standard); pairs (a, b), a < b, are
/// visited in lexicographic order and an edge is added when
/// (next_u64 >> 11) * 2^-53 < p. Identical specs give identical graphs.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::UniformRandom;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  /// Condition parameters for ConditionFiltered: require sigma2 >= n + r.
  std::size_t r = 0;
  std::size_t s = 0;
  /// Samples drawn before giving up (ConditionFiltered).
  int max_attempts = 200;
  /// After max_attempts, repeatedly join the non-adjacent pair with the
  /// smallest degree sum until the bound holds. This biases the output toward
  /// graphs sitting exactly at the bound. When false, exhausting the attempts
  /// throws GraphError instead.
  bool augment = true;
};

Graph random_graph(const GeneratorSpec& spec);

}  // namespace cyclepack
