#include <gtest/gtest.h>

#include <set>

#include "arkit/error.hpp"
#include "arkit/extremal.hpp"
#include "arkit/matching.hpp"
#include "arkit/rainbow.hpp"
#include "support.hpp"

namespace arkit {
namespace {

ColoredGraph fully_rainbow(int n) {
  ColoredGraph h(n, 0);
  Color next = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) h.set_color(u, v, next++);
  return h;
}

TEST(MaxRainbow, MonochromaticAndFullyRainbow) {
  EXPECT_EQ(max_rainbow_matching(ColoredGraph(9, 4)).best.size(), 1u);
  EXPECT_EQ(max_rainbow_matching(fully_rainbow(8)).best.size(), 4u);
  EXPECT_EQ(max_rainbow_matching(fully_rainbow(7)).best.size(), 3u);
  EXPECT_EQ(max_rainbow_matching(ColoredGraph(1, 0)).best.size(), 0u);
}

TEST(MaxRainbow, H1TwelveThree) {
  ColoredGraph h = construct_extremal_coloring(12, 3, ExtremalVariant::kH1);
  RainbowResult r = max_rainbow_matching(h);
  EXPECT_EQ(r.status, SearchStatus::kExact);
  EXPECT_EQ(r.best.size(), 4u);
  EXPECT_TRUE(r.best.validates(h));
  EXPECT_EQ(testing::exhaustive_rainbow(h), 4);
}

TEST(MaxRainbow, AgreesWithExhaustiveEnumeration) {
  Rng rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const std::uint64_t palette = 1 + rng.below(choose2(n) + 2);
    ColoredGraph h = testing::random_coloring(rng, n, palette);
    RainbowResult r = max_rainbow_matching(h);
    ASSERT_EQ(r.status, SearchStatus::kExact);
    ASSERT_TRUE(r.best.validates(h));
    ASSERT_EQ(static_cast<int>(r.best.size()), testing::exhaustive_rainbow(h)) << serialize(h);
  }
}

TEST(MaxRainbow, RespectsTrivialUpperBounds) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(14));
    ColoredGraph h = testing::random_coloring(rng, n, 1 + rng.below(8));
    const std::size_t size = max_rainbow_matching(h).best.size();
    EXPECT_LE(size, static_cast<std::size_t>(n / 2));
    EXPECT_LE(size, h.color_count());
  }
}

TEST(HasRainbow, H2TwentyOneEight) {
  ColoredGraph h = construct_extremal_coloring(21, 8, ExtremalVariant::kH2);
  RainbowDecision ten = has_rainbow_matching(h, 10);
  EXPECT_EQ(ten.status, SearchStatus::kExact);
  EXPECT_FALSE(ten.found);
  RainbowDecision nine = has_rainbow_matching(h, 9);
  ASSERT_TRUE(nine.found);
  EXPECT_EQ(nine.certificate->size(), 9u);
  EXPECT_TRUE(nine.certificate->validates(h));
}

TEST(HasRainbow, ZeroIsTrivialAndNegativeIsRejected) {
  RainbowDecision d = has_rainbow_matching(ColoredGraph(5, 0), 0);
  EXPECT_TRUE(d.found);
  ASSERT_TRUE(d.certificate.has_value());
  EXPECT_EQ(d.certificate->size(), 0u);
  EXPECT_THROW(has_rainbow_matching(ColoredGraph(5, 0), -1), RangeError);
}

TEST(HasRainbow, MonotoneAndConsistentWithMaximum) {
  Rng rng(10);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(11));
    ColoredGraph h = testing::random_coloring(rng, n, 1 + rng.below(12));
    const int best = static_cast<int>(max_rainbow_matching(h).best.size());
    for (int k = 0; k <= n / 2 + 1; ++k) {
      RainbowDecision d = has_rainbow_matching(h, k);
      ASSERT_EQ(d.status, SearchStatus::kExact);
      ASSERT_EQ(d.found, k <= best) << "k=" << k << "\n" << serialize(h);
      if (d.found) {
        ASSERT_EQ(static_cast<int>(d.certificate->size()), k);
        ASSERT_TRUE(d.certificate->validates(h));
      }
    }
  }
}

TEST(Budget, ExhaustedBudgetIsInconclusiveNeverWrong) {
  Rng rng(11);
  int inconclusive = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ColoredGraph h = testing::random_coloring(rng, 12, 3 + rng.below(6));
    SearchBudget tiny;
    tiny.node_limit = 1;
    const int exact = testing::exhaustive_rainbow(h);
    RainbowResult r = max_rainbow_matching(h, tiny);
    ASSERT_TRUE(r.best.validates(h));
    if (r.status == SearchStatus::kExact) {
      ASSERT_EQ(static_cast<int>(r.best.size()), exact);
    } else {
      ++inconclusive;
      ASSERT_LE(static_cast<int>(r.best.size()), exact);
    }
    RainbowDecision d = has_rainbow_matching(h, exact + 1, tiny);
    ASSERT_FALSE(d.found);
  }
  EXPECT_GT(inconclusive, 0);
}

TEST(Budget, ZeroTimeLimitNeverReportsAWrongNegative) {
  ColoredGraph h = construct_extremal_coloring(40, 10, ExtremalVariant::kH1);
  h.set_color(39, 38, h.max_color() + 1);
  SearchBudget none;
  none.time_limit = std::chrono::milliseconds(0);
  RainbowDecision d = has_rainbow_matching(h, 12, none);
  if (!d.found) EXPECT_EQ(d.status, SearchStatus::kInconclusive);
}

TEST(Certificate, ValidationRejectsBadCertificates) {
  ColoredGraph h = fully_rainbow(6);
  RainbowCertificate ok{Matching{{{0, 1}, {2, 3}}}, {h.color(0, 1), h.color(2, 3)}};
  EXPECT_TRUE(ok.validates(h));
  RainbowCertificate overlapping{Matching{{{0, 1}, {1, 2}}}, {h.color(0, 1), h.color(1, 2)}};
  EXPECT_FALSE(overlapping.validates(h));
  RainbowCertificate wrong_color{Matching{{{0, 1}}}, {h.color(0, 2)}};
  EXPECT_FALSE(wrong_color.validates(h));
  ColoredGraph mono(6, 1);
  RainbowCertificate repeated{Matching{{{0, 1}, {2, 3}}}, {1, 1}};
  EXPECT_FALSE(repeated.validates(mono));
}

TEST(Representative, Examples) {
  RepresentativeSubgraph mono = representative_subgraph(ColoredGraph(4, 0), RepresentativePolicy::kLexicographic);
  EXPECT_EQ(mono.graph.edges(), (std::vector<Edge>{{0, 1}}));

  RepresentativeSubgraph all = representative_subgraph(fully_rainbow(4), RepresentativePolicy::kLexicographic);
  EXPECT_EQ(all.graph.edge_count(), 6u);

  ColoredGraph h1 = construct_extremal_coloring(12, 3, ExtremalVariant::kH1);
  RepresentativeSubgraph rep = representative_subgraph(h1, RepresentativePolicy::kLexicographic);
  EXPECT_EQ(rep.graph.edge_count(), 25u);
  EXPECT_EQ(rep.chosen.at(0), Edge(2, 5));
  for (const auto& [color, edges] : h1.color_classes())
    if (color != 0) EXPECT_EQ(rep.chosen.at(color), edges.front());
}

TEST(Representative, SeededPolicyIsDeterministicAndOnePerClass) {
  Rng rng(12);
  ColoredGraph h = testing::random_coloring(rng, 12, 9);
  RepresentativeSubgraph a = representative_subgraph(h, RepresentativePolicy::kSeeded, 99);
  RepresentativeSubgraph b = representative_subgraph(h, RepresentativePolicy::kSeeded, 99);
  EXPECT_EQ(a.chosen, b.chosen);
  EXPECT_EQ(a.chosen.size(), h.color_count());
  EXPECT_EQ(a.graph.edge_count(), a.chosen.size());
  for (const auto& [color, e] : a.chosen) {
    EXPECT_EQ(h.color(e), color);
    EXPECT_TRUE(a.graph.has_edge(e.u, e.v));
  }
}

}  // namespace
}  // namespace arkit
