#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <cstdint>
#include <vector>

#include "arkit/colored_graph.hpp"
#include "arkit/random.hpp"

namespace arkit::testing {

// G(n, p) with p = num/den.
inline Graph random_graph(Rng& rng, int n, std::uint64_t num, std::uint64_t den) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.below(den) < num) g.add_edge(u, v);
  return g;
}

// Every pair gets a colour uniform in [0, palette).
inline ColoredGraph random_coloring(Rng& rng, int n, std::uint64_t palette) {
  ColoredGraph h(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) h.set_color(u, v, static_cast<Color>(rng.below(palette)));
  return h;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Independent reference: largest rainbow matching by plain recursion over
// edges in lexicographic order.
inline int exhaustive_rainbow(const ColoredGraph& h) {
  const int n = h.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  std::vector<char> used_vertex(n, 0);
  std::vector<Color> used_colors;
  int best = 0;
  auto rec = [&](auto&& self, std::size_t from, int size) -> void {
    best = std::max(best, size);
    if (size + (n - 2 * size) / 2 <= best) return;
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (used_vertex[e.u] || used_vertex[e.v]) continue;
      Color c = h.color(e);
      if (std::find(used_colors.begin(), used_colors.end(), c) != used_colors.end()) continue;
      used_vertex[e.u] = used_vertex[e.v] = 1;
      used_colors.push_back(c);
      self(self, i + 1, size + 1);
      used_colors.pop_back();
      used_vertex[e.u] = used_vertex[e.v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Independent reference for max over S of odd(G - S) - |S|.
inline int reference_max_deficiency(const Graph& g) {
  const int n = g.order();
  int best = -n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& e : g.edges())
      if (!(mask >> e.u & 1) && !(mask >> e.v & 1)) parent[find(e.u)] = find(e.v);
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v)
      if (!(mask >> v & 1)) ++size[find(v)];
    int odd = 0;
    for (int v = 0; v < n; ++v) odd += size[v] % 2;
    best = std::max(best, odd - std::popcount(mask));
  }
  return best;
}

}  // namespace arkit::testing
