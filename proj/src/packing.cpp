#include "cyclepack/packing.hpp"

#include <algorithm>

#include "cyclepack/errors.hpp"

namespace cyclepack {

namespace {

bool has_independent_edges(const Graph& g, const VertexSet& d) {
  const auto& v = d.members();
  // The three perfect matchings of a 4-set.
  const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& m : pairs)
    if (g.adjacent(v[m[0]], v[m[1]]) && g.adjacent(v[m[2]], v[m[3]])) return true;
  return false;
}

}  // namespace

Stage remainder_stage(const Graph& g, const VertexSet& remainder) {
  if (remainder.empty()) return Stage::Partitioned;
  if (remainder.size() != 4) throw GraphError("remainder must be empty or have four vertices");
  if (find_cycle(g, remainder, 4)) return Stage::Partitioned;
  const std::size_t edges = induced_edge_count(g, remainder);
  if (edges >= 4) return Stage::Dense;
  if (edges == 3 && find_path4(g, remainder)) return Stage::Path;
  if (has_independent_edges(g, remainder)) return Stage::Matching;
  return Stage::Sparse;
}

std::size_t packed_edge_count(const Graph& g, const Packing& p) {
  std::size_t total = 0;
  for (const auto& c : p.triangles) total += induced_edge_count(g, c.vertex_set());
  for (const auto& c : p.quadrilaterals) total += induced_edge_count(g, c.vertex_set());
  return total;
}

Potential potential(const Graph& g, const Packing& p) {
  return Potential{remainder_stage(g, p.remainder), packed_edge_count(g, p)};
}

std::optional<std::string> packing_violation(const Graph& g, const Packing& p) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  auto mark = [&](Vertex v) -> std::optional<std::string> {
    if (!g.has_vertex(v)) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]++) return "not disjoint: vertex " + std::to_string(v) + " used twice";
    return std::nullopt;
  };
  for (const auto& c : p.triangles) {
    if (c.length() != 3) return "triangle list holds a cycle of length " + std::to_string(c.length());
    if (auto why = cycle_violation(g, c)) return why;
    for (Vertex v : c.vertices())
      if (auto why = mark(v)) return why;
  }
  for (const auto& c : p.quadrilaterals) {
    if (c.length() != 4)
      return "quadrilateral list holds a cycle of length " + std::to_string(c.length());
    if (auto why = cycle_violation(g, c)) return why;
    for (Vertex v : c.vertices())
      if (auto why = mark(v)) return why;
  }
  for (Vertex v : p.remainder)
    if (auto why = mark(v)) return why;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v]) return "not a cover: vertex " + std::to_string(v) + " unused";
  return std::nullopt;
}

std::optional<std::string> verify_packing(const Graph& g, const Packing& p, std::size_t r,
                                          std::size_t s) {
  if (p.triangles.size() != r)
    return "expected " + std::to_string(r) + " triangles, found " + std::to_string(p.triangles.size());
  if (p.quadrilaterals.size() != s)
    return "expected " + std::to_string(s) + " quadrilaterals, found " +
           std::to_string(p.quadrilaterals.size());
  if (!p.remainder.empty()) return "remainder is not empty";
  return packing_violation(g, p);
}

std::optional<std::string> verify_partial_packing(const Graph& g, const Packing& p, std::size_t r,
                                                  std::size_t s) {
  if (s == 0) return "partial packing needs s >= 1";
  if (p.triangles.size() != r)
    return "expected " + std::to_string(r) + " triangles, found " + std::to_string(p.triangles.size());
  if (p.quadrilaterals.size() != s - 1)
    return "expected " + std::to_string(s - 1) + " quadrilaterals, found " +
           std::to_string(p.quadrilaterals.size());
  if (p.remainder.size() != 4) return "remainder must have four vertices";
  return packing_violation(g, p);
}

ConditionReport check_conditions(const Graph& g, std::size_t r, std::size_t s) {
  ConditionReport report;
  report.n = static_cast<std::size_t>(g.order());
  report.r = r;
  report.s = s;
  report.sigma2 = sigma2(g);
  report.order_ok = report.n == 3 * r + 4 * s;
  report.sigma_ok = report.sigma2.at_least(static_cast<std::int64_t>(report.n + r));
  report.ratio_ok = r + 2 >= 2 * s;
  return report;
}

}  // namespace cyclepack
