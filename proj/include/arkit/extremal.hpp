#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>

#include "arkit/colored_graph.hpp"

namespace arkit {

// Largest n accepted by the closed-form formulas (keeps every binomial
// comfortably inside int64).
inline constexpr std::int64_t kFormulaMaxN = 1'000'000'000;

// ex(n, M_k): the most edges an n-vertex graph can have without a matching
// of size k. Requires k >= 1 and n >= 2k.
std::int64_t turan_matching(std::int64_t n, std::int64_t k);

// ar(n, M_s) for s >= 2, n >= 2s.
std::int64_t anti_ramsey_matching(std::int64_t n, std::int64_t s);

enum class Regime { kG1Dominant, kG2Dominant, kEqual };

std::string_view to_string(Regime r);

struct ThresholdValues {
  std::int64_t g1 = 0;  // C(n,2) - C(n-s+1,2) + 5
  std::int64_t g2 = 0;  // C(2s-1,2) + n + 1
  std::int64_t g = 0;
  Regime regime = Regime::kEqual;
  // n >= 2s + 5; values outside are still computed, only flagged.
  bool in_range = false;
};

ThresholdValues threshold_g(std::int64_t n, std::int64_t s);

// Smallest n for which the stability statement is claimed.
inline std::int64_t theorem_min_n(std::int64_t s) {
  return std::max<std::int64_t>(2 * s + 5, 40);
}

// K_s joined to an independent set of n - s vertices; ids 0..s-1 are the clique.
Graph construct_turan_graph(int n, int s);

enum class ExtremalVariant { kH1, kH2 };

std::string_view to_string(ExtremalVariant v);

// H1 needs n >= 2s+5 and 2n >= 5s+3; H2 needs 2s+5 <= n and 2n <= 5s+3.
bool extremal_in_regime(int n, int s, ExtremalVariant variant);

// The rainbow-free tight colourings. The rainbow subgraph F gets colours
// 1..e(F) in lexicographic edge order and every other edge colour 0.
//   H1: F = K_{s-1} v (K_3 u empty_{n-s-2}); ids: hub 0..s-2, triangle
//       s-1..s+1, independent part after.
//   H2: F = K_1 v (K_{2s-1} u empty_{n-2s}); ids: hub 0, clique 1..2s-1,
//       independent part after.
// Out-of-regime requests throw RangeError unless `permissive` is set.
ColoredGraph construct_extremal_coloring(int n, int s, ExtremalVariant variant,
                                         bool permissive = false);

// Base edges get distinct colours 1..e(base) in lexicographic order; every
// other pair gets colour 0.
ColoredGraph rainbow_plus_one(int n, const Graph& base);

}  // namespace arkit
