#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/cycle.hpp"
#include "cyclepack/graph.hpp"

namespace cyclepack {

/// Disjoint triangles and quadrilaterals plus the uncovered remainder.
struct Packing {
  std::vector<Cycle> triangles;
  std::vector<Cycle> quadrilaterals;
  VertexSet remainder;

  std::size_t cycle_count() const { return triangles.size() + quadrilaterals.size(); }
};

/// Remainder structure levels, ordered by how close the packing is to a full
/// partition.
enum class Stage : int {
  Sparse = 0,        ///< no two independent edges in the remainder
  Matching = 1,      ///< two independent edges, no P4
  Path = 2,          ///< remainder is exactly a P4
  Dense = 3,         ///< remainder induces at least four edges, no C4
  Partitioned = 4,   ///< remainder contains a C4, or is empty
};

/// Lexicographic progress measure: remainder stage, then the total number of
/// edges induced inside the packing's cycles.
struct Potential {
  Stage stage = Stage::Sparse;
  std::size_t m_value = 0;

  friend auto operator<=>(const Potential&, const Potential&) = default;
};

Stage remainder_stage(const Graph& g, const VertexSet& remainder);
std::size_t packed_edge_count(const Graph& g, const Packing& p);
Potential potential(const Graph& g, const Packing& p);

/// Upper bound on packed_edge_count for r triangles and q quadrilaterals.
constexpr std::size_t max_packed_edges(std::size_t r, std::size_t q) { return 3 * r + 6 * q; }

/// Disjointness, cover, and cycle validity; nullopt when all hold.
std::optional<std::string> packing_violation(const Graph& g, const Packing& p);

/// Full partition check: exactly r triangles, s quadrilaterals, empty
/// remainder, plus everything packing_violation checks.
std::optional<std::string> verify_packing(const Graph& g, const Packing& p, std::size_t r,
                                          std::size_t s);

/// Intermediate-shape check: r triangles, s - 1 quadrilaterals, four-vertex
/// remainder.
std::optional<std::string> verify_partial_packing(const Graph& g, const Packing& p, std::size_t r,
                                                  std::size_t s);

struct ConditionReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  DegreeSum sigma2;
  bool order_ok = false;  ///< n == 3r + 4s
  bool sigma_ok = false;  ///< sigma2 >= n + r
  bool ratio_ok = false;  ///< r >= 2s - 2

  bool all_ok() const { return order_ok && sigma_ok && ratio_ok; }
};

ConditionReport check_conditions(const Graph& g, std::size_t r, std::size_t s);

}  // namespace cyclepack
