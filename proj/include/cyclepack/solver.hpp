#pragma once

// Partition pipeline: initial packing of r triangles and s - 1 quadrilaterals,
// refinement of the four-vertex remainder until it induces at least four edges,
// then absorption of that remainder into a final quadrilateral.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclepack/graph.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

struct SearchBudget {
  /// Node limit for the exact backtracking stage of initial_packing.
  std::uint64_t node_limit = 50'000'000;
  /// Randomized greedy passes tried before backtracking.
  int restarts = 16;
  std::uint64_t seed = 1;
};

/// One exchange-lemma invocation: which lemma, on which cycle, and the
/// cross-edge count measured against the lemma's threshold at call time.
struct LemmaCall {
  std::string lemma;
  bool on_quadrilateral = false;
  std::size_t cycle_index = 0;
  std::int64_t measured = 0;
  std::int64_t threshold = 0;
};

struct SolveTrace {
  std::vector<Potential> potentials;
  std::vector<LemmaCall> calls;
};

/// r triangles, s - 1 quadrilaterals and a four-vertex remainder. Greedy
/// harvesting first, then seeded randomized greedy passes, then budgeted exact
/// backtracking. Throws SolverError (stage "initial", kind "not-found") when no
/// such packing is found; the ledger says whether the budget ran out.
Packing initial_packing(const Graph& g, std::size_t r, std::size_t s,
                        const SearchBudget& budget = {});

/// Drives the remainder to at least four induced edges. Each loop iteration
/// strictly increases the potential (stage, packed edge count); the trace, when
/// given, receives the starting potential and one entry per iteration.
Packing refine_remainder(const Graph& g, Packing p, SolveTrace* trace = nullptr);

/// Turns a refined packing into a full partition of r triangles and s
/// quadrilaterals.
Packing absorb_remainder(const Graph& g, Packing p, SolveTrace* trace = nullptr);

/// initial_packing, refine_remainder, absorb_remainder, then verify_packing.
/// Stage failures surface as SolverError tagged with the stage name.
Packing solve(const Graph& g, std::size_t r, std::size_t s, const SearchBudget& budget = {},
              SolveTrace* trace = nullptr);

}  // namespace cyclepack
