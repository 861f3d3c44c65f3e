#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

#include "cyclepack/cycle.hpp"
#include "cyclepack/enumerate.hpp"
#include "cyclepack/errors.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/graph.hpp"

namespace cyclepack {
namespace {

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

Graph gnp(int n, double p, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return random_graph(spec);
}

// Random subset of [0, n) drawn independently per vertex.
VertexSet random_subset(int n, std::mt19937_64& rng, const VertexSet& avoid = {}) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (!avoid.contains(v) && rng() % 2) out.push_back(v);
  return VertexSet(out);
}

TEST(GraphTest, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(-1), GraphError);
}

TEST(GraphTest, Degree) {
  EXPECT_EQ(degree(Graph::complete(4), 0), 3u);
  EXPECT_EQ(degree(Graph(5), 2), 0u);
  EXPECT_EQ(degree(Graph::path(3), 1), 2u);
  EXPECT_THROW(degree(Graph::path(3), 3), GraphError);
  EXPECT_EQ(min_degree(paw()), 1u);
  EXPECT_EQ(max_degree(paw()), 3u);
}

TEST(GraphTest, DegreeToward) {
  const Graph k4 = Graph::complete(4);
  EXPECT_EQ(degree_toward(k4, 0, VertexSet{1, 2, 3}), 3u);
  EXPECT_EQ(degree_toward(k4, 0, VertexSet{}), 0u);
  EXPECT_THROW(degree_toward(k4, 0, VertexSet{0, 1}), GraphError);
}

TEST(GraphTest, DegreeTowardMatchesPerEdgeCount) {
  const Graph g = gnp(8, 0.5, 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex v = static_cast<Vertex>(rng() % 8);
    std::vector<Vertex> members;
    for (Vertex w = 0; w < 8; ++w)
      if (w != v && rng() % 2) members.push_back(w);
    const VertexSet s(members);
    std::size_t expected = 0;
    for (const Edge& e : g.edges())
      if ((e.u == v && s.contains(e.v)) || (e.v == v && s.contains(e.u))) ++expected;
    EXPECT_EQ(degree_toward(g, v, s), expected);
  }
}

TEST(GraphTest, CrossEdgeCount) {
  const Graph k23 = Graph::complete_bipartite(2, 3);
  EXPECT_EQ(cross_edge_count(k23, VertexSet{0, 1}, VertexSet{2, 3, 4}), 6u);
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(cross_edge_count(two_triangles, VertexSet{0, 1, 2}, VertexSet{3, 4, 5}), 0u);
  EXPECT_THROW(cross_edge_count(k23, VertexSet{0, 1}, VertexSet{1, 2}), GraphError);
}

TEST(GraphTest, CrossEdgeCountIsSumOfDegreeToward) {
  const Graph g = gnp(10, 0.4, 7);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const VertexSet l = random_subset(10, rng);
    const VertexSet m = random_subset(10, rng, l);
    std::size_t sum = 0;
    for (Vertex v : l) sum += degree_toward(g, v, m);
    EXPECT_EQ(cross_edge_count(g, l, m), sum);
  }
}

TEST(GraphTest, Sigma2Examples) {
  EXPECT_TRUE(sigma2(Graph::complete(4)).is_infinite());
  EXPECT_EQ(sigma2(Graph::cycle(5)), DegreeSum::finite(4));
  EXPECT_EQ(sigma2(Graph::path(3)), DegreeSum::finite(2));
  EXPECT_TRUE(DegreeSum::infinite().at_least(std::numeric_limits<std::int64_t>::max()));
  EXPECT_EQ(DegreeSum::infinite().to_string(), "infinite");
  EXPECT_THROW(DegreeSum::infinite().value(), std::logic_error);
}

std::optional<std::int64_t> brute_sigma2(const Graph& g) {
  std::optional<std::int64_t> best;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < g.order(); ++b) {
      if (a == b || g.adjacent(a, b)) continue;
      std::int64_t da = 0;
      std::int64_t db = 0;
      for (Vertex w = 0; w < g.order(); ++w) {
        da += g.adjacent(a, w);
        db += g.adjacent(b, w);
      }
      if (!best || da + db < *best) best = da + db;
    }
  return best;
}

TEST(GraphTest, Sigma2MatchesBruteForceOnSmallGraphs) {
  for (int n = 0; n <= 6; ++n) {
    EnumerationStream stream(n);
    while (auto g = stream.next()) {
      const auto expected = brute_sigma2(*g);
      const DegreeSum got = sigma2(*g);
      ASSERT_EQ(got.is_infinite(), !expected.has_value());
      if (expected) ASSERT_EQ(got.value(), *expected);
    }
  }
  for (int n = 7; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const Graph g = gnp(n, 0.6, seed);
      const auto expected = brute_sigma2(g);
      const DegreeSum got = sigma2(g);
      ASSERT_EQ(got.is_infinite(), !expected.has_value());
      if (expected) ASSERT_EQ(got.value(), *expected);
    }
}

TEST(GraphTest, InducedSubgraph) {
  const Graph k3 = induced_subgraph(Graph::complete(5), VertexSet{0, 2, 4});
  EXPECT_EQ(k3.order(), 3);
  EXPECT_EQ(k3.size(), 3u);
  EXPECT_EQ(induced_subgraph(Graph(6), VertexSet{1, 3, 5}).size(), 0u);
  const Graph tri = induced_subgraph(paw(), VertexSet{0, 1, 2});
  EXPECT_EQ(tri.size(), 3u);
}

TEST(GraphTest, InducedSubgraphPreservesAdjacency) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gnp(9, 0.5, seed);
    const VertexSet u = random_subset(9, rng);
    const Graph h = induced_subgraph(g, u);
    ASSERT_EQ(static_cast<std::size_t>(h.order()), u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j)
        if (i != j) ASSERT_EQ(h.adjacent(i, j), g.adjacent(u[i], u[j]));
  }
}

TEST(FindCycleTest, Examples) {
  EXPECT_TRUE(find_cycle(Graph::complete(4), VertexSet{0, 1, 2, 3}, 4).has_value());
  EXPECT_EQ(*find_cycle(Graph::complete(4), VertexSet{0, 1, 2, 3}, 4), (Cycle{0, 1, 2, 3}));
  const Graph c7 = Graph::cycle(7);
  EXPECT_FALSE(find_cycle(c7, c7.vertex_set(), 3).has_value());
  EXPECT_FALSE(find_cycle(paw(), VertexSet{0, 1, 2, 3}, 4).has_value());
  EXPECT_EQ(*find_cycle(paw(), VertexSet{0, 1, 2, 3}, 3), (Cycle{0, 1, 2}));
  EXPECT_THROW(find_cycle(paw(), VertexSet{0, 1, 2, 3}, 5), GraphError);
}

TEST(FindCycleTest, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gnp(7, 0.35, seed);
    const VertexSet u = random_subset(7, rng);
    for (int k : {3, 4}) {
      // Smallest sequence by brute force over all ordered k-tuples.
      std::optional<std::vector<Vertex>> best;
      std::vector<Vertex> pool = u.members();
      if (pool.size() >= static_cast<std::size_t>(k)) {
        std::vector<Vertex> tuple(k);
        std::function<void(std::size_t)> go = [&](std::size_t depth) {
          if (depth == static_cast<std::size_t>(k)) {
            for (int i = 0; i < k; ++i)
              if (!g.adjacent(tuple[i], tuple[(i + 1) % k])) return;
            if (!best || tuple < *best) best = tuple;
            return;
          }
          for (Vertex v : pool) {
            if (std::find(tuple.begin(), tuple.begin() + depth, v) != tuple.begin() + depth) continue;
            tuple[depth] = v;
            go(depth + 1);
          }
        };
        go(0);
      }
      const auto got = find_cycle(g, u, k);
      ASSERT_EQ(got.has_value(), best.has_value());
      if (got) {
        EXPECT_EQ(got->vertices(), *best);
        EXPECT_TRUE(is_cycle_in(g, *got));
      }
    }
  }
}

TEST(FindPath4Test, Examples) {
  const Graph p4 = Graph::path(4);
  EXPECT_EQ(*find_path4(p4, p4.vertex_set()), (Path4{0, 1, 2, 3}));
  const Graph matching(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(find_path4(matching, matching.vertex_set()).has_value());
  const auto path = find_path4(paw(), VertexSet{0, 1, 2, 3});
  ASSERT_TRUE(path.has_value());
  EXPECT_TRUE(is_path_in(paw(), *path));
}

TEST(CycleTest, ShapeAndViolations) {
  EXPECT_THROW(Cycle({0, 1}), GraphError);
  EXPECT_THROW(Cycle({0, 1, 0}), GraphError);
  const Graph g = Graph::path(4);
  const auto why = cycle_violation(g, Cycle{0, 1, 2, 3});
  ASSERT_TRUE(why.has_value());
  EXPECT_NE(why->find("missing edge"), std::string::npos);
}

}  // namespace
}  // namespace cyclepack
