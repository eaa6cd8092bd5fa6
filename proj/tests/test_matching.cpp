#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "arkit/error.hpp"
#include "arkit/matching.hpp"
#include "support.hpp"

namespace arkit {
namespace {

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// K_h joined to (K_c u empty_i): hub ids first, then the clique, then the rest.
Graph hub_graph(int h, int c, int i) {
  const int n = h + c + i;
  Graph g(n);
  for (Vertex u = 0; u < h; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  for (Vertex u = h; u < h + c; ++u)
    for (Vertex v = u + 1; v < h + c; ++v) g.add_edge(u, v);
  return g;
}

TEST(MaxMatching, SmallFamilies) {
  EXPECT_EQ(max_matching(testing::complete_graph(4)).size(), 2u);
  EXPECT_EQ(max_matching(hub_graph(1, 3, 7)).size(), 2u);
  EXPECT_EQ(max_matching(star(9)).size(), 1u);
  EXPECT_EQ(max_matching(Graph(0)).size(), 0u);
  EXPECT_EQ(max_matching(Graph(7)).size(), 0u);
  EXPECT_EQ(max_matching(testing::petersen()).size(), 5u);
  EXPECT_EQ(max_matching(cycle(9)).size(), 4u);
}

TEST(MaxMatching, EdgeListOverload) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
  Matching m = max_matching(4, edges);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(m.is_valid(4));
}

TEST(BruteForceNu, Examples) {
  EXPECT_EQ(brute_force_nu(Graph(5)), 0);
  EXPECT_EQ(brute_force_nu(testing::petersen()), 5);
  EXPECT_EQ(brute_force_nu(hub_graph(1, 3, 7)), 2);
  EXPECT_THROW(brute_force_nu(Graph(15)), TooLargeError);
}

TEST(MaxMatching, AgreesWithBruteForceOnRandomGraphs) {
  Rng rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    Graph g = testing::random_graph(rng, n, 1 + rng.below(9), 10);
    Matching m = max_matching(g);
    ASSERT_TRUE(m.is_valid_in(g));
    ASSERT_EQ(static_cast<int>(m.size()), brute_force_nu(g)) << serialize(g);
  }
}

TEST(MaxMatching, LargerSparseGraphsAreValidAndMaximumByBerge) {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_graph(rng, 60 + static_cast<int>(rng.below(60)), 1, 30);
    Matching m = max_matching(g);
    ASSERT_TRUE(m.is_valid_in(g));
    BergeWitness w = berge_witness(g);
    ASSERT_EQ(g.order() - 2 * static_cast<int>(m.size()), w.deficiency());
  }
}

TEST(FactorCritical, Examples) {
  EXPECT_TRUE(is_factor_critical(testing::complete_graph(3)));
  EXPECT_TRUE(is_factor_critical(cycle(5)));
  EXPECT_FALSE(is_factor_critical(star(3)));
  EXPECT_TRUE(is_factor_critical(Graph(1)));
  EXPECT_FALSE(is_factor_critical(Graph(3)));
}

TEST(GallaiEdmonds, Star) {
  GEDecomposition ge = gallai_edmonds(star(3));
  EXPECT_EQ(ge.D.to_vector(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(ge.A.to_vector(), (std::vector<Vertex>{0}));
  EXPECT_TRUE(ge.C.empty());
  EXPECT_EQ(ge.nu, 1);
}

TEST(GallaiEdmonds, PerfectMatchingAndFactorCritical) {
  GEDecomposition pm = gallai_edmonds(cycle(6));
  EXPECT_TRUE(pm.D.empty());
  EXPECT_TRUE(pm.A.empty());
  EXPECT_EQ(pm.C.size(), 6);

  GEDecomposition k3 = gallai_edmonds(testing::complete_graph(3));
  EXPECT_EQ(k3.D.size(), 3);
  EXPECT_TRUE(k3.A.empty());
  EXPECT_EQ(k3.components_of_D.size(), 1u);
}

TEST(GallaiEdmonds, MatchesAvoidableVertexDefinition) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(11));
    Graph g = testing::random_graph(rng, n, 1 + rng.below(5), 10);
    GEDecomposition ge = gallai_edmonds(g);
    const int nu = brute_force_nu(g);
    ASSERT_EQ(ge.nu, nu);
    VertexSet all = ge.D | ge.A | ge.C;
    ASSERT_EQ(all.size(), n);
    ASSERT_EQ(ge.D.intersection_size(ge.A) + ge.D.intersection_size(ge.C) +
                  ge.A.intersection_size(ge.C),
              0);
    for (Vertex v = 0; v < n; ++v) {
      Graph h = g;
      h.isolate(v);
      const bool avoidable = brute_force_nu(h) == nu;
      ASSERT_EQ(ge.D.contains(v), avoidable) << "vertex " << v << "\n" << serialize(g);
    }
    for (const auto& comp : ge.components_of_D) {
      VertexSet keep(n);
      for (Vertex v : comp) keep.insert(v);
      ASSERT_TRUE(is_factor_critical(g.induced(keep)));
    }
  }
}

TEST(BergeWitness, StarHasThreeSingletonComponents) {
  BergeWitness w = berge_witness(star(3));
  EXPECT_EQ(w.T, (std::vector<Vertex>{0}));
  EXPECT_EQ(w.q(), 3);
  EXPECT_EQ(w.k, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(w.deficiency(), 2);
  EXPECT_EQ(w.nu, 1);
}

TEST(BergeWitness, CompleteGraphHasNoDeficiency) {
  BergeWitness w = berge_witness(testing::complete_graph(6));
  EXPECT_TRUE(w.T.empty());
  EXPECT_EQ(w.q(), 0);
  EXPECT_EQ(w.nu, 3);
}

TEST(BergeWitness, HubOverTriangleAndIsolatedVertices) {
  BergeWitness w = berge_witness(hub_graph(2, 3, 5));
  EXPECT_EQ(w.T, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(w.q(), 6);
  std::vector<std::size_t> sizes;
  for (const auto& c : w.odd_components) sizes.push_back(c.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 1, 1, 1, 1, 1}));
  EXPECT_EQ(w.odd_components[0], (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(w.odd_components[1], (std::vector<Vertex>{5}));
  EXPECT_EQ(w.k, (std::vector<int>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(w.deficiency(), testing::reference_max_deficiency(hub_graph(2, 3, 5)));
}

TEST(BergeWitness, EqualityAndBruteForceMaximumOnRandomGraphs) {
  Rng rng(4);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    Graph g = testing::random_graph(rng, n, 1 + rng.below(6), 10);
    BergeWitness w = berge_witness(g);
    const int nu = static_cast<int>(max_matching(g).size());
    ASSERT_EQ(w.nu, nu);
    ASSERT_EQ(2 * nu, n - w.deficiency());
    ASSERT_EQ(w.deficiency(), testing::reference_max_deficiency(g)) << serialize(g);
    ASSERT_EQ(w.deficiency(), brute_force_max_deficiency(g));
    for (std::size_t i = 0; i + 1 < w.odd_components.size(); ++i) {
      const auto& a = w.odd_components[i];
      const auto& b = w.odd_components[i + 1];
      ASSERT_TRUE(a.size() > b.size() || (a.size() == b.size() && a.front() < b.front()));
    }
    for (std::size_t i = 0; i < w.odd_components.size(); ++i) {
      const auto& comp = w.odd_components[i];
      ASSERT_EQ(static_cast<int>(comp.size()), 2 * w.k[i] + 1);
      VertexSet keep(n);
      for (Vertex v : comp) keep.insert(v);
      ASSERT_TRUE(is_factor_critical(g.induced(keep)));
    }
  }
}

TEST(Components, OddCountsWithoutRemovedSet) {
  Graph g = hub_graph(2, 3, 5);
  VertexSet hub(10, {0, 1});
  EXPECT_EQ(odd_components_without(g, hub), 6);
  EXPECT_EQ(components_without(g, hub).size(), 6u);
  EXPECT_EQ(odd_components_without(g, VertexSet(10)), 0);
}

BipartiteInstance from_degrees(const std::vector<std::vector<int>>& adj, int b) {
  BipartiteInstance inst(static_cast<int>(adj.size()), b);
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (int j : adj[i]) inst.add_edge(static_cast<int>(i), j);
  return inst;
}

bool hall_condition_holds(const BipartiteInstance& inst) {
  for (std::uint32_t mask = 1; mask < (1U << inst.a); ++mask) {
    std::set<int> nbrs;
    for (int i = 0; i < inst.a; ++i)
      if (mask >> i & 1) nbrs.insert(inst.adjacency[i].begin(), inst.adjacency[i].end());
    if (static_cast<int>(nbrs.size()) < std::popcount(mask)) return false;
  }
  return true;
}

void expect_valid_outcome(const BipartiteInstance& inst, const HallOutcome& out) {
  if (const auto* cover = std::get_if<HallCovering>(&out)) {
    ASSERT_EQ(static_cast<int>(cover->partner.size()), inst.a);
    std::set<int> used;
    for (int i = 0; i < inst.a; ++i) {
      const int j = cover->partner[i];
      const auto& adj = inst.adjacency[i];
      ASSERT_NE(std::find(adj.begin(), adj.end(), j), adj.end());
      ASSERT_TRUE(used.insert(j).second);
    }
  } else {
    const auto& v = std::get<HallViolator>(out);
    std::set<int> nbrs;
    for (int i : v.subset) nbrs.insert(inst.adjacency[i].begin(), inst.adjacency[i].end());
    ASSERT_EQ(std::vector<int>(nbrs.begin(), nbrs.end()), v.neighbourhood);
    ASSERT_LT(v.neighbourhood.size(), v.subset.size());
  }
}

TEST(Hall, CompleteBipartite) {
  BipartiteInstance k33 = from_degrees({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, 3);
  HallOutcome out = hall_matching(k33);
  ASSERT_TRUE(std::holds_alternative<HallCovering>(out));
  expect_valid_outcome(k33, out);
}

TEST(Hall, TwoVerticesSharingOneNeighbour) {
  BipartiteInstance inst = from_degrees({{0}, {0}}, 3);
  HallOutcome out = hall_matching(inst);
  ASSERT_TRUE(std::holds_alternative<HallViolator>(out));
  const auto& v = std::get<HallViolator>(out);
  EXPECT_EQ(v.subset, (std::vector<int>{0, 1}));
  EXPECT_EQ(v.neighbourhood, (std::vector<int>{0}));
}

TEST(Hall, ExactlyOneOutcomeAgreesWithHallCondition) {
  Rng rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    const int a = 1 + static_cast<int>(rng.below(8));
    const int b = 1 + static_cast<int>(rng.below(9));
    BipartiteInstance inst(a, b);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (rng.below(10) < 3) inst.add_edge(i, j);
    HallOutcome out = hall_matching(inst);
    ASSERT_EQ(std::holds_alternative<HallCovering>(out), hall_condition_holds(inst));
    expect_valid_outcome(inst, out);
  }
}

TEST(Staircase, Examples) {
  BipartiteInstance minimal = from_degrees({{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}}, 4);
  EXPECT_TRUE(staircase_check(minimal));
  EXPECT_TRUE(std::holds_alternative<HallCovering>(hall_matching(minimal)));
  EXPECT_FALSE(staircase_check(from_degrees({{}, {0, 1}}, 2)));
  EXPECT_FALSE(staircase_check(from_degrees({{0, 1}, {0, 1}, {0, 1}}, 3)));
}

TEST(Staircase, RandomInstancesAreCovered) {
  Rng rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const int a = 1 + static_cast<int>(rng.below(10));
    const int b = a + static_cast<int>(rng.below(4));
    BipartiteInstance inst(a, b);
    for (int i = 0; i < a; ++i) {
      std::vector<int> pool(b);
      std::iota(pool.begin(), pool.end(), 0);
      const int d = i + 1 + static_cast<int>(rng.below(b - i));
      for (int k = 0; k < d; ++k) {
        std::size_t pick = k + rng.below(pool.size() - k);
        std::swap(pool[k], pool[pick]);
        inst.add_edge(i, pool[k]);
      }
    }
    ASSERT_TRUE(staircase_check(inst));
    HallOutcome out = hall_matching(inst);
    ASSERT_TRUE(std::holds_alternative<HallCovering>(out));
    expect_valid_outcome(inst, out);
  }
}

}  // namespace
}  // namespace arkit
