#include <gtest/gtest.h>

#include "arkit/error.hpp"
#include "arkit/extremal.hpp"
#include "arkit/harness.hpp"
#include "arkit/matching.hpp"
#include "arkit/rainbow.hpp"
#include "arkit/structure.hpp"

namespace arkit {
namespace {

TEST(TuranMatching, Examples) {
  EXPECT_EQ(turan_matching(6, 2), 5);
  EXPECT_EQ(turan_matching(7, 3), 11);
  EXPECT_EQ(turan_matching(14, 7), 78);
  EXPECT_EQ(turan_matching(10, 3), 17);
}

TEST(TuranMatching, AgreesWithEnumerationOracle) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k) EXPECT_EQ(turan_matching(n, k), oracle_turan(n, k)) << n << "," << k;
}

TEST(TuranMatching, RejectsInvalidParameters) {
  EXPECT_THROW(turan_matching(5, 0), RangeError);
  EXPECT_THROW(turan_matching(5, 3), RangeError);
  EXPECT_THROW(turan_matching(kFormulaMaxN + 1, 2), RangeError);
}

TEST(TuranMatching, LargeValuesStayExact) {
  // k - 1 hub vertices: C(k-1, 2) + (k-1)(n-k+1), far above C(2k-1, 2).
  const std::int64_t n = kFormulaMaxN;
  EXPECT_EQ(turan_matching(n, 2), n - 1);
  EXPECT_EQ(turan_matching(n, 1000), 999LL * 998 / 2 + 999LL * (n - 999));
}

TEST(AntiRamseyMatching, Examples) {
  EXPECT_EQ(anti_ramsey_matching(4, 2), 4);
  EXPECT_EQ(anti_ramsey_matching(5, 2), 2);
  EXPECT_EQ(anti_ramsey_matching(14, 7), 58);
  EXPECT_EQ(anti_ramsey_matching(12, 6), turan_matching(12, 5) + 2);
  EXPECT_THROW(anti_ramsey_matching(5, 1), RangeError);
  EXPECT_THROW(anti_ramsey_matching(7, 4), RangeError);
}

TEST(AntiRamseyMatching, AgreesWithPartitionOracle) {
  for (int n = 4; n <= 5; ++n)
    for (int s = 2; 2 * s <= n; ++s) EXPECT_EQ(anti_ramsey_matching(n, s), oracle_anti_ramsey(n, s));
}

TEST(ThresholdG, Examples) {
  ThresholdValues a = threshold_g(40, 10);
  EXPECT_EQ(a.g1, 320);
  EXPECT_EQ(a.g2, 212);
  EXPECT_EQ(a.g, 320);
  EXPECT_EQ(a.regime, Regime::kG1Dominant);
  EXPECT_TRUE(a.in_range);

  ThresholdValues b = threshold_g(21, 8);
  EXPECT_EQ(b.g1, 124);
  EXPECT_EQ(b.g2, 127);
  EXPECT_EQ(b.g, 127);
  EXPECT_EQ(b.regime, Regime::kG2Dominant);

  EXPECT_FALSE(threshold_g(20, 8).in_range);
  EXPECT_THROW(threshold_g(5, 0), RangeError);
}

TEST(ThresholdG, SEqualsTwoCollapses) {
  for (int n = 9; n <= 200; ++n) {
    ThresholdValues t = threshold_g(n, 2);
    ASSERT_EQ(t.g1, n + 4);
    ASSERT_EQ(t.g2, n + 4);
    ASSERT_EQ(t.regime, Regime::kEqual);
  }
}

TEST(ThresholdG, RegimeMatchesConstructionBoundary) {
  // g1 >= g2 exactly when 2n >= 5s + 3, for in-range n.
  for (int s = 2; s <= 60; ++s)
    for (int n = 2 * s + 5; n <= 400; ++n) {
      ThresholdValues t = threshold_g(n, s);
      ASSERT_EQ(t.g1 >= t.g2, 2 * n >= 5 * s + 3) << n << "," << s;
    }
}

TEST(TuranGraph, Examples) {
  Graph star = construct_turan_graph(6, 1);
  EXPECT_EQ(star.edge_count(), 5u);
  EXPECT_EQ(brute_force_nu(star), 1);
  EXPECT_EQ(construct_turan_graph(7, 0).edge_count(), 0u);
  Graph g = construct_turan_graph(10, 2);
  EXPECT_EQ(static_cast<std::int64_t>(g.edge_count()), turan_matching(10, 3));
  EXPECT_EQ(matching_number(g), 2);
  EXPECT_THROW(construct_turan_graph(3, 4), RangeError);
}

TEST(Extremal, H1TwelveThree) {
  ColoredGraph h = construct_extremal_coloring(12, 3, ExtremalVariant::kH1);
  EXPECT_EQ(h.color_count(), 25u);
  EXPECT_EQ(static_cast<std::int64_t>(h.color_count()), threshold_g(12, 3).g - 1);
  EXPECT_EQ(max_rainbow_matching(h).best.size(), 4u);
  EXPECT_FALSE(find_mono_clique(h, 9).has_value());
  EXPECT_FALSE(find_mono_join(h, 3).has_value());
  // Layout: hub 0..1, triangle 2..4, independent 5..11.
  for (Vertex v = 1; v < 12; ++v) EXPECT_NE(h.color(0, v), 0u);
  EXPECT_NE(h.color(2, 3), 0u);
  EXPECT_EQ(h.color(2, 5), 0u);
  EXPECT_EQ(h.color(5, 6), 0u);
  EXPECT_EQ(h.color(0, 1), 1u);
}

TEST(Extremal, H2TwentyOneEight) {
  ColoredGraph h = construct_extremal_coloring(21, 8, ExtremalVariant::kH2);
  EXPECT_EQ(h.color_count(), 126u);
  EXPECT_EQ(h.color_classes().at(0).size(), 85u);
  // Layout: hub 0, clique 1..15, independent 16..20.
  EXPECT_NE(h.color(0, 20), 0u);
  EXPECT_NE(h.color(1, 15), 0u);
  EXPECT_EQ(h.color(15, 16), 0u);
}

TEST(Extremal, RegimeEnforcement) {
  EXPECT_TRUE(extremal_in_regime(12, 3, ExtremalVariant::kH1));
  EXPECT_FALSE(extremal_in_regime(12, 3, ExtremalVariant::kH2));
  EXPECT_TRUE(extremal_in_regime(21, 8, ExtremalVariant::kH2));
  EXPECT_FALSE(extremal_in_regime(21, 8, ExtremalVariant::kH1));
  EXPECT_TRUE(extremal_in_regime(25, 10, ExtremalVariant::kH2));
  EXPECT_FALSE(extremal_in_regime(10, 3, ExtremalVariant::kH1));
  EXPECT_THROW(construct_extremal_coloring(21, 8, ExtremalVariant::kH1), RangeError);
  EXPECT_THROW(construct_extremal_coloring(10, 3, ExtremalVariant::kH1), RangeError);
  EXPECT_NO_THROW(construct_extremal_coloring(21, 8, ExtremalVariant::kH1, true));
}

TEST(Extremal, EdgeCountIdentitiesUpTo400) {
  for (std::int64_t s = 1; s <= 200; ++s)
    for (std::int64_t n = 2 * s + 5; n <= 400; ++n) {
      ThresholdValues t = threshold_g(n, s);
      const std::int64_t f1 = choose2(s - 1) + (s - 1) * (n - s + 1) + 3;
      const std::int64_t f2 = choose2(2 * s - 1) + (n - 1);
      if (2 * n >= 5 * s + 3) ASSERT_EQ(f1, t.g1 - 2) << n << "," << s;
      if (2 * n <= 5 * s + 3) ASSERT_EQ(f2, t.g2 - 2) << n << "," << s;
    }
}

TEST(Extremal, ColourCountIsThresholdMinusOneAcrossRegimes) {
  for (int s = 2; s <= 12; ++s)
    for (int n = 2 * s + 5; n <= 45; ++n)
      for (ExtremalVariant v : {ExtremalVariant::kH1, ExtremalVariant::kH2}) {
        if (!extremal_in_regime(n, s, v)) continue;
        ColoredGraph h = construct_extremal_coloring(n, s, v);
        ASSERT_EQ(static_cast<std::int64_t>(h.color_count()), threshold_g(n, s).g - 1)
            << to_string(v) << "(" << n << "," << s << ")";
      }
}

TEST(RainbowPlusOne, Examples) {
  ColoredGraph h = rainbow_plus_one(10, construct_turan_graph(10, 2));
  EXPECT_EQ(h.color_count(), 18u);
  EXPECT_EQ(max_rainbow_matching(h).best.size(), 3u);
  EXPECT_FALSE(has_rainbow_matching(h, 4).found);

  EXPECT_EQ(rainbow_plus_one(6, Graph(6)).color_count(), 1u);

  Graph full(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) full.add_edge(u, v);
  EXPECT_EQ(rainbow_plus_one(6, full).color_count(), 15u);
  EXPECT_THROW(rainbow_plus_one(7, full), RangeError);
}

}  // namespace
}  // namespace arkit
