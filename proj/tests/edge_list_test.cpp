#include <gtest/gtest.h>

#include "cyclepack/edge_list.hpp"
#include "cyclepack/errors.hpp"
#include "cyclepack/generators.hpp"

namespace cyclepack {
namespace {

TEST(EdgeListTest, ParsesWithComments) {
  const Graph g = parse_edge_list("# triangle\n\n3 3\n0 1\n2 1\n0 2\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(EdgeListTest, EmptyGraph) {
  const Graph g = parse_edge_list("5 0\n");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(emit_edge_list(g), "5 0\n");
}

int error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("3\n"), 1);
  EXPECT_EQ(error_line("# c\n3 1\n0 3\n"), 3);
  EXPECT_EQ(error_line("3 1\n1 1\n"), 2);
  EXPECT_EQ(error_line("3 2\n0 1\n1 0\n"), 3);
  EXPECT_GT(error_line("3 2\n0 1\n"), 0);
  EXPECT_GT(error_line("3 1\n0 1\n1 2\n"), 0);
  EXPECT_EQ(error_line("x y\n"), 1);
}

TEST(EdgeListTest, CanonicalRoundTrip) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GeneratorSpec spec;
    spec.n = 9;
    spec.p = 0.45;
    spec.seed = seed;
    const Graph g = random_graph(spec);
    const std::string text = emit_edge_list(g);
    const Graph back = parse_edge_list(text);
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_EQ(emit_edge_list(back), text);
  }
}

TEST(EdgeListTest, EmitIsSorted) {
  const Graph g(4, {{2, 3}, {1, 0}, {0, 3}});
  EXPECT_EQ(emit_edge_list(g), "4 3\n0 1\n0 3\n2 3\n");
}

TEST(EdgeListTest, MissingFile) {
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.txt"), std::runtime_error);
}

}  // namespace
}  // namespace cyclepack
