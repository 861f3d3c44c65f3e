#include "cyclepack/generators.hpp"

#include <random>
#include <vector>

#include "cyclepack/errors.hpp"

namespace cyclepack {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Edge> sample_edges(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (unit(rng) < p) edges.emplace_back(a, b);
  return edges;
}

Graph augment_to_bound(int n, std::vector<Edge> edges, std::int64_t bound) {
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u) * n + e.v] = adj[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    ++deg[e.u];
    ++deg[e.v];
  }
  while (true) {
    std::int64_t best = -1;
    Edge pick;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        if (adj[static_cast<std::size_t>(a) * n + b]) continue;
        const std::int64_t sum = deg[a] + deg[b];
        if (best < 0 || sum < best) {
          best = sum;
          pick = Edge(a, b);
        }
      }
    if (best < 0 || best >= bound) break;
    adj[static_cast<std::size_t>(pick.u) * n + pick.v] = adj[static_cast<std::size_t>(pick.v) * n + pick.u] = 1;
    ++deg[pick.u];
    ++deg[pick.v];
    edges.push_back(pick);
  }
  return Graph(n, edges);
}

}  // namespace

Graph random_graph(const GeneratorSpec& spec) {
  if (spec.n < 0) throw GraphError("random_graph: negative order");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw GraphError("random_graph: p must lie in [0, 1]");
  std::mt19937_64 rng(spec.seed);
  if (spec.kind == GeneratorKind::UniformRandom) return Graph(spec.n, sample_edges(spec.n, spec.p, rng));

  const auto bound = static_cast<std::int64_t>(spec.n) + static_cast<std::int64_t>(spec.r);
  std::vector<Edge> last;
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    last = sample_edges(spec.n, spec.p, rng);
    Graph g(spec.n, last);
    if (sigma2(g).at_least(bound)) return g;
  }
  if (!spec.augment) {
    throw GraphError("random_graph: no sample met sigma2 >= " + std::to_string(bound) + " in " +
                     std::to_string(spec.max_attempts) + " attempts");
  }
  if (spec.max_attempts <= 0) last = sample_edges(spec.n, spec.p, rng);
  return augment_to_bound(spec.n, std::move(last), bound);
}

}  // namespace cyclepack
