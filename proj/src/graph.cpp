#include "cyclepack/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cyclepack/errors.hpp"

namespace cyclepack {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(g.order()));
  }
}

void require_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) require_vertex(g, v);
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw GraphError("vertex set contains a duplicate id");
  }
  if (!members_.empty() && members_.front() < 0) {
    throw GraphError("vertex set contains a negative id");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  VertexSet result;
  result.members_ = std::move(out);
  return result;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  VertexSet result;
  result.members_ = std::move(out);
  return result;
}

DegreeSum DegreeSum::finite(std::int64_t value) {
  if (value < 0) throw std::invalid_argument("degree sum must be nonnegative");
  DegreeSum d;
  d.value_ = value;
  return d;
}

std::int64_t DegreeSum::value() const {
  if (!value_) throw std::logic_error("degree sum is infinite");
  return *value_;
}

std::string DegreeSum::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("infinite");
}

Graph::Graph(int n) {
  if (n < 0) throw GraphError("graph order must be nonnegative");
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  neighbors_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    require_vertex(*this, e.u);
    require_vertex(*this, e.v);
    auto& cell = adj_[static_cast<std::size_t>(e.u) * n_ + e.v];
    if (cell) {
      throw GraphError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    cell = 1;
    adj_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
    ++m_;
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return Graph(n, edges);
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, edges);
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = a; y < a + b; ++y) edges.emplace_back(x, y);
  return Graph(a + b, edges);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  require_vertex(*this, v);
  return neighbors_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b : neighbors_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

VertexSet Graph::vertex_set() const {
  std::vector<Vertex> all(n_);
  for (Vertex v = 0; v < n_; ++v) all[v] = v;
  return VertexSet(std::move(all));
}

std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

std::size_t degree_toward(const Graph& g, Vertex v, const VertexSet& s) {
  require_vertex(g, v);
  require_members(g, s);
  if (s.contains(v)) {
    throw GraphError("degree_toward: vertex " + std::to_string(v) + " lies inside the target set");
  }
  std::size_t count = 0;
  for (Vertex w : s)
    if (g.adjacent(v, w)) ++count;
  return count;
}

std::size_t cross_edge_count(const Graph& g, const VertexSet& l, const VertexSet& m) {
  require_members(g, l);
  require_members(g, m);
  if (!l.disjoint_from(m)) throw GraphError("cross_edge_count: sets overlap");
  std::size_t count = 0;
  for (Vertex a : l)
    for (Vertex b : m)
      if (g.adjacent(a, b)) ++count;
  return count;
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& u) {
  require_members(g, u);
  std::size_t count = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (g.adjacent(u[i], u[j])) ++count;
  return count;
}

DegreeSum sigma2(const Graph& g) {
  const int n = g.order();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  bool found = false;
  for (Vertex a = 0; a < n; ++a) {
    const auto da = static_cast<std::int64_t>(g.neighbors(a).size());
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      found = true;
      best = std::min(best, da + static_cast<std::int64_t>(g.neighbors(b).size()));
    }
  }
  return found ? DegreeSum::finite(best) : DegreeSum::infinite();
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw GraphError("min_degree of the empty graph");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, degree(g, v));
  return best;
}

std::size_t max_degree(const Graph& g) {
  if (g.order() == 0) throw GraphError("max_degree of the empty graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, degree(g, v));
  return best;
}

Graph induced_subgraph(const Graph& g, const VertexSet& u) {
  require_members(g, u);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (g.adjacent(u[i], u[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<int>(u.size()), edges);
}

}  // namespace cyclepack
