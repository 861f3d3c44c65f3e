#include "cyclepack/oracle.hpp"

#include <vector>

#include "cyclepack/errors.hpp"

namespace cyclepack {

namespace {

class PartitionOracle {
 public:
  PartitionOracle(const Graph& g, std::size_t r, std::size_t s)
      : g_(g), r_(r), s_(s), used_(static_cast<std::size_t>(g.order()), false) {}

  std::optional<Packing> run() {
    if (pick_triangle(0, 0)) return result_;
    return std::nullopt;
  }

 private:
  bool free(Vertex v) const { return !used_[v]; }

  void take(std::initializer_list<Vertex> vs, bool value) {
    for (Vertex v : vs) used_[v] = value;
  }

  // Triangles are stored with their smallest vertex first and chosen with
  // strictly increasing anchors.
  bool pick_triangle(std::size_t placed, Vertex min_anchor) {
    if (placed == r_) return pick_quadrilateral(0, 0);
    const int n = g_.order();
    for (Vertex a = min_anchor; a < n; ++a) {
      if (!free(a)) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        if (!free(b) || !g_.adjacent(a, b)) continue;
        for (Vertex c = b + 1; c < n; ++c) {
          if (!free(c) || !g_.adjacent(a, c) || !g_.adjacent(b, c)) continue;
          take({a, b, c}, true);
          result_.triangles.push_back(Cycle{a, b, c});
          if (pick_triangle(placed + 1, a + 1)) return true;
          result_.triangles.pop_back();
          take({a, b, c}, false);
        }
      }
    }
    return false;
  }

  // Quadrilateral a-b-c-d with a smallest and b < d (one orientation each).
  bool pick_quadrilateral(std::size_t placed, Vertex min_anchor) {
    const int n = g_.order();
    if (placed == s_) {
      for (Vertex v = 0; v < n; ++v)
        if (free(v)) return false;
      return true;
    }
    for (Vertex a = min_anchor; a < n; ++a) {
      if (!free(a)) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        if (!free(b) || !g_.adjacent(a, b)) continue;
        for (Vertex d = b + 1; d < n; ++d) {
          if (!free(d) || !g_.adjacent(a, d)) continue;
          for (Vertex c = a + 1; c < n; ++c) {
            if (c == b || c == d || !free(c)) continue;
            if (!g_.adjacent(b, c) || !g_.adjacent(c, d)) continue;
            take({a, b, c, d}, true);
            result_.quadrilaterals.push_back(Cycle{a, b, c, d});
            if (pick_quadrilateral(placed + 1, a + 1)) return true;
            result_.quadrilaterals.pop_back();
            take({a, b, c, d}, false);
          }
        }
      }
      // Quadrilaterals must cover everything left, so the smallest free
      // vertex anchors the next one.
      return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t r_;
  std::size_t s_;
  std::vector<bool> used_;
  Packing result_;
};

}  // namespace

std::optional<Packing> exact_partition(const Graph& g, std::size_t r, std::size_t s) {
  if (static_cast<std::size_t>(g.order()) != 3 * r + 4 * s) {
    throw GraphError("exact_partition: order " + std::to_string(g.order()) + " is not 3r + 4s");
  }
  return PartitionOracle(g, r, s).run();
}

}  // namespace cyclepack
