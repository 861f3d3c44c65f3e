#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

/// Triangle or quadrilateral given as a cyclic vertex sequence. Construction
/// checks shape only; whether the edges exist is a property of a host graph
/// (see cycle_violation).
class Cycle {
 public:
  explicit Cycle(std::vector<Vertex> vertices);
  Cycle(std::initializer_list<Vertex> vertices) : Cycle(std::vector<Vertex>(vertices)) {}

  std::size_t length() const { return vertices_.size(); }
  bool is_triangle() const { return vertices_.size() == 3; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  VertexSet vertex_set() const { return VertexSet(vertices_); }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Ordered path on four vertices.
using Path4 = std::array<Vertex, 4>;

/// nullopt when every consecutive pair (cyclically) is an edge of g.
std::optional<std::string> cycle_violation(const Graph& g, const Cycle& c);
bool is_cycle_in(const Graph& g, const Cycle& c);

/// True when the sequence has distinct in-range vertices joined by edges.
bool is_path_in(const Graph& g, std::span<const Vertex> path);

/// Lexicographically smallest k-cycle sequence inside u (k is 3 or 4).
std::optional<Cycle> find_cycle(const Graph& g, const VertexSet& u, int k);

/// Lexicographically smallest ordered 4-vertex path inside u.
std::optional<Path4> find_path4(const Graph& g, const VertexSet& u);

std::string to_string(const Cycle& c);

}  // namespace cyclepack
