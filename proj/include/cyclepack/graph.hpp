#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclepack {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids. Range against a host graph is
/// checked by the operations that take one.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  bool disjoint_from(const VertexSet& other) const;
  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// sigma_2 value: a nonnegative integer, or infinite for complete graphs.
class DegreeSum {
 public:
  static DegreeSum infinite() { return DegreeSum{}; }
  static DegreeSum finite(std::int64_t value);

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  std::int64_t value() const;
  bool at_least(std::int64_t bound) const { return !value_ || *value_ >= bound; }
  std::string to_string() const;

  friend bool operator==(const DegreeSum&, const DegreeSum&) = default;

 private:
  std::optional<std::int64_t> value_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws GraphError on self-loops, duplicate edges, or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int a, int b);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex a, Vertex b) const {
    return adj_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  /// Neighbors in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  /// All edges in ascending (u, v) order.
  std::vector<Edge> edges() const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  VertexSet vertex_set() const;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> neighbors_;
};

std::size_t degree(const Graph& g, Vertex v);

/// d(v, S) = |N(v) ∩ S|; v must lie outside S.
std::size_t degree_toward(const Graph& g, Vertex v, const VertexSet& s);

/// e(L, M) for disjoint L and M.
std::size_t cross_edge_count(const Graph& g, const VertexSet& l, const VertexSet& m);

/// Number of edges with both endpoints in u, i.e. e(G[u]).
std::size_t induced_edge_count(const Graph& g, const VertexSet& u);

DegreeSum sigma2(const Graph& g);

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

/// G[u], relabeled so that the i-th smallest id of u becomes vertex i.
Graph induced_subgraph(const Graph& g, const VertexSet& u);

}  // namespace cyclepack
