#include <gtest/gtest.h>

#include "cyclepack/gadgets.hpp"
#include "cyclepack/verification.hpp"

namespace cyclepack {
namespace {

std::uint64_t count(Lemma lemma, std::optional<int> threshold = std::nullopt) {
  GadgetStream stream(lemma, threshold);
  std::uint64_t total = 0;
  while (stream.next()) ++total;
  return total;
}

// Pattern counts derived by hand from the hypotheses.
TEST(GadgetStreamTest, AdmissibleCounts) {
  EXPECT_EQ(count(Lemma::C3Pair), 7u);
  EXPECT_EQ(count(Lemma::P3P2), 42u);
  EXPECT_EQ(count(Lemma::P3P3), 382u);
  EXPECT_EQ(count(Lemma::F4Quad), 299u);
  EXPECT_EQ(count(Lemma::F4Tri7), 46u);
  EXPECT_EQ(count(Lemma::C4Edges), 26333u);  // sum_{k>=9} C(16,k)
  EXPECT_EQ(count(Lemma::C4P4Max), 26333u);
}

TEST(GadgetStreamTest, EmptyAboveMaximum) {
  for (Lemma lemma : all_lemmas()) {
    // f4tri also admits d(u3,T) >= 2 regardless of the cross-edge total.
    if (lemma == Lemma::F4Tri) continue;
    const int above = static_cast<int>(cross_pair_count(lemma)) + 1;
    EXPECT_EQ(count(lemma, above), 0u) << lemma_name(lemma);
  }
}

TEST(GadgetStreamTest, ThresholdIsMonotone) {
  for (Lemma lemma : {Lemma::P3P2, Lemma::C3Pair, Lemma::F4Tri7})
    EXPECT_GE(count(lemma, default_threshold(lemma) - 1), count(lemma));
}

TEST(GadgetTest, NamesRoundTrip) {
  for (Lemma lemma : all_lemmas()) {
    EXPECT_EQ(parse_lemma(lemma_name(lemma)), lemma);
    EXPECT_LE(gadget_order(lemma), 8u);
  }
  EXPECT_FALSE(parse_lemma("lemma9").has_value());
}

TEST(GadgetTest, PatternBitsAreCrossEdges) {
  const Gadget g = build_gadget(Lemma::C3Pair, 0b101);
  EXPECT_EQ(g.cross_edges, 2u);
  // C = 0-1-2, u = 3, v = 4: bit 0 is (0,3), bit 1 is (0,4), bit 2 is (1,3).
  EXPECT_EQ(g.graph.size(), 3u + 2u);
  EXPECT_TRUE(g.graph.adjacent(0, 3));
  EXPECT_FALSE(g.graph.adjacent(0, 4));
  EXPECT_TRUE(g.graph.adjacent(1, 3));
}

class LemmaSweepTest : public ::testing::TestWithParam<Lemma> {};

TEST_P(LemmaSweepTest, ExhaustivelyWitnessed) {
  const LemmaSweep sweep = sweep_lemma(GetParam(), true);
  EXPECT_GT(sweep.configurations, 0u);
  EXPECT_TRUE(sweep.complete()) << lemma_name(GetParam()) << ": " << sweep.witnessed << '/'
                                << sweep.configurations;
}

INSTANTIATE_TEST_SUITE_P(AllLemmas, LemmaSweepTest,
                         ::testing::Values(Lemma::P3P2, Lemma::P3P3, Lemma::C4Pair, Lemma::C3Pair,
                                           Lemma::C3Edges, Lemma::F4Quad, Lemma::F4Tri,
                                           Lemma::F4Tri7),
                         [](const auto& info) { return std::string(lemma_name(info.param)); });

TEST(LemmaSweepTest, SampleIsBounded) {
  const LemmaSweep sweep = sweep_lemma(Lemma::C4Edges, false, 64);
  EXPECT_LE(sweep.configurations, 64u);
  EXPECT_TRUE(sweep.complete());
}

}  // namespace
}  // namespace cyclepack
