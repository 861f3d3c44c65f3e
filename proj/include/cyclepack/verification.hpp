#pragma once

// Batch harnesses: exhaustive lemma-gadget sweeps and the labeled-graph sweep
// that runs the solver against the exact oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/gadgets.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/solver.hpp"

namespace cyclepack {

struct LemmaSweep {
  Lemma lemma = Lemma::P3P2;
  std::uint64_t configurations = 0;
  std::uint64_t witnessed = 0;
  std::uint64_t improved = 0;  ///< c4p4max only
  std::vector<std::uint32_t> failed_patterns;
  std::vector<std::string> failure_details;

  bool complete() const { return configurations == witnessed; }
};

/// Every admissible pattern when `exhaustive`, otherwise an evenly strided
/// sample of at most `sample_limit` of them.
LemmaSweep sweep_lemma(Lemma lemma, bool exhaustive, std::size_t sample_limit = 64);

/// Checks applied to one solve run on a qualifying graph.
struct RunCheck {
  bool oracle_found = false;
  bool solved = false;
  bool refine_dense = false;     ///< refinement ended with >= 4 remainder edges
  bool trace_monotone = false;   ///< strictly increasing, within the length bound
  bool thresholds_met = false;   ///< every lemma call met its threshold
  std::size_t trace_length = 0;  ///< refinement portion of the trace
  std::size_t lemma_calls = 0;
  std::string failure;

  bool ok() const { return oracle_found && solved && refine_dense && trace_monotone && thresholds_met; }
};

/// Solve + oracle + trace checks on a single graph (assumed to satisfy the
/// order and degree-sum conditions).
RunCheck check_instance(const Graph& g, std::size_t r, std::size_t s,
                        const SearchBudget& budget = {});

struct TheoremSweep {
  std::uint64_t graphs = 0;
  std::uint64_t qualifying = 0;  ///< sigma2 >= n + r
  std::uint64_t oracle_found = 0;
  std::uint64_t solved = 0;
  std::uint64_t refine_dense = 0;
  std::uint64_t trace_monotone = 0;
  std::uint64_t thresholds_met = 0;
  std::uint64_t lemma_calls = 0;
  std::size_t longest_trace = 0;
  std::vector<std::uint64_t> failed_codes;  ///< enumeration cursors of failures
  std::vector<std::string> failure_details;

  bool clean() const {
    return oracle_found == qualifying && solved == qualifying && refine_dense == qualifying &&
           trace_monotone == qualifying && thresholds_met == qualifying;
  }
};

/// All labeled graphs of order n = 3r + 4s (n <= 8), sharded over `workers`
/// threads by cursor range.
TheoremSweep sweep_theorem(int n, std::size_t r, std::size_t s, unsigned workers = 1);

}  // namespace cyclepack
