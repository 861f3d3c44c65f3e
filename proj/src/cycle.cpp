#include "cyclepack/cycle.hpp"

#include <algorithm>

#include "cyclepack/errors.hpp"

namespace cyclepack {

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() != 3 && vertices_.size() != 4) {
    throw GraphError("cycle must have 3 or 4 vertices, got " + std::to_string(vertices_.size()));
  }
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("cycle repeats a vertex");
  }
  if (sorted.front() < 0) throw GraphError("cycle contains a negative id");
}

std::optional<std::string> cycle_violation(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices();
  for (Vertex v : vs) {
    if (!g.has_vertex(v)) return "vertex " + std::to_string(v) + " out of range";
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i];
    Vertex b = vs[(i + 1) % vs.size()];
    if (!g.adjacent(a, b)) {
      return "missing edge " + std::to_string(a) + "-" + std::to_string(b) + " in cycle " +
             to_string(c);
    }
  }
  return std::nullopt;
}

bool is_cycle_in(const Graph& g, const Cycle& c) { return !cycle_violation(g, c); }

bool is_path_in(const Graph& g, std::span<const Vertex> path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.has_vertex(path[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (path[i] == path[j]) return false;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

namespace {

// Depth-first extension in ascending id order; the first completed sequence
// is the lexicographically smallest one.
bool extend(const Graph& g, const VertexSet& u, std::vector<Vertex>& seq, std::size_t k,
            bool closed) {
  if (seq.size() == k) return !closed || g.adjacent(seq.back(), seq.front());
  for (Vertex w : g.neighbors(seq.back())) {
    if (!u.contains(w) || std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
    seq.push_back(w);
    if (extend(g, u, seq, k, closed)) return true;
    seq.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Cycle> find_cycle(const Graph& g, const VertexSet& u, int k) {
  if (k != 3 && k != 4) throw GraphError("find_cycle: k must be 3 or 4");
  for (Vertex v : u)
    if (!g.has_vertex(v)) throw GraphError("find_cycle: vertex out of range");
  if (u.size() < static_cast<std::size_t>(k)) return std::nullopt;
  std::vector<Vertex> seq;
  for (Vertex start : u) {
    seq.assign(1, start);
    if (extend(g, u, seq, static_cast<std::size_t>(k), true)) return Cycle(seq);
  }
  return std::nullopt;
}

std::optional<Path4> find_path4(const Graph& g, const VertexSet& u) {
  for (Vertex v : u)
    if (!g.has_vertex(v)) throw GraphError("find_path4: vertex out of range");
  std::vector<Vertex> seq;
  for (Vertex start : u) {
    seq.assign(1, start);
    if (extend(g, u, seq, 4, false)) return Path4{seq[0], seq[1], seq[2], seq[3]};
  }
  return std::nullopt;
}

std::string to_string(const Cycle& c) {
  std::string out;
  for (Vertex v : c.vertices()) {
    out += std::to_string(v);
    out += '-';
  }
  out += std::to_string(c[0]);
  return out;
}

}  // namespace cyclepack
