#pragma once

#include <span>
#include <variant>
#include <vector>

#include "arkit/colored_graph.hpp"

namespace arkit {

// Maximum matching via Edmonds' blossom algorithm.
Matching max_matching(const Graph& g);
// Same, for the graph on [0, n) whose edge set is `edges`.
Matching max_matching(int n, std::span<const Edge> edges);
int matching_number(const Graph& g);

// Exhaustive matching number over vertex subsets; n <= 14.
int brute_force_nu(const Graph& g);
inline constexpr int kBruteForceNuLimit = 14;

// True iff g has odd order and g - v has a perfect matching for every v.
bool is_factor_critical(const Graph& g);

// Connected components of g - removed, each sorted, listed by smallest id.
std::vector<std::vector<Vertex>> components_without(const Graph& g,
                                                    const VertexSet& removed);
// Number of odd-order components of g - removed.
int odd_components_without(const Graph& g, const VertexSet& removed);
// max over all S of odd(g - S) - |S|, by enumerating every S; n <= 20.
int brute_force_max_deficiency(const Graph& g);

struct GEDecomposition {
  VertexSet D;  // missed by some maximum matching
  VertexSet A;  // neighbours of D outside D
  VertexSet C;  // everything else
  std::vector<std::vector<Vertex>> components_of_D;
  int nu = 0;
};

// Built from the avoidable-vertex characterisation; the factor-critical and
// Berge-equality invariants are certified before returning.
GEDecomposition gallai_edmonds(const Graph& g);

struct BergeWitness {
  std::vector<Vertex> T;
  // Odd components of g - T, largest first; ties by smallest vertex id.
  std::vector<std::vector<Vertex>> odd_components;
  // k[i] with |odd_components[i]| = 2 k[i] + 1, non-increasing.
  std::vector<int> k;
  int nu = 0;

  int t() const { return static_cast<int>(T.size()); }
  int q() const { return static_cast<int>(odd_components.size()); }
  int deficiency() const { return q() - t(); }
};

BergeWitness berge_witness(const Graph& g);

// Bipartite graph with sides A = [0, a) and B = [0, b).
struct BipartiteInstance {
  int a = 0;
  int b = 0;
  std::vector<std::vector<int>> adjacency;  // adjacency[i]: B-neighbours of A-vertex i

  BipartiteInstance() = default;
  BipartiteInstance(int a_size, int b_size)
      : a(a_size), b(b_size), adjacency(a_size) {}

  void add_edge(int i, int j);
  int degree(int i) const { return static_cast<int>(adjacency[i].size()); }
};

struct HallCovering {
  std::vector<int> partner;  // partner[i]: B-vertex matched to A-vertex i
};

struct HallViolator {
  std::vector<int> subset;         // S subset of A
  std::vector<int> neighbourhood;  // N(S), with |N(S)| < |S|
};

using HallOutcome = std::variant<HallCovering, HallViolator>;

// A matching covering A, or a set S of A-vertices with |N(S)| < |S|.
HallOutcome hall_matching(const BipartiteInstance& b);

// With A indexed 1..a, true iff d(i) >= i for every i.
bool staircase_check(const BipartiteInstance& b);

}  // namespace arkit
