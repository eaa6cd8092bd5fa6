#include "arkit/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "arkit/error.hpp"

namespace arkit {

namespace {

// Edmonds' algorithm with explicit blossom bases, O(V^3).
class Blossom {
 public:
  Blossom(int n, std::vector<std::vector<int>> adj)
      : n_(n), adj_(std::move(adj)), match_(n, -1), parent_(n), base_(n),
        used_(n), in_blossom_(n) {}

  Matching solve() {
    // Greedy warm start.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pv = parent_[u];
        int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    Matching m;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) m.edges.emplace_back(v, match_[v]);
    return m;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

Matching max_matching(int n, std::span<const Edge> edges) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return Blossom(n, std::move(adj)).solve();
}

Matching max_matching(const Graph& g) {
  auto edges = g.edges();
  return max_matching(g.order(), edges);
}

int matching_number(const Graph& g) {
  return static_cast<int>(max_matching(g).size());
}

int brute_force_nu(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceNuLimit)
    throw TooLargeError("brute_force_nu supports at most 14 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= 1U << e.v;
    nbr[e.v] |= 1U << e.u;
  }
  // best[mask]: largest matching inside the vertex subset mask.
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1U << v);
    int value = best[rest];
    for (std::uint32_t cand = nbr[v] & rest; cand != 0; cand &= cand - 1) {
      int w = std::countr_zero(cand);
      value = std::max(value, 1 + best[rest & ~(1U << w)]);
    }
    best[mask] = static_cast<std::int8_t>(value);
  }
  return best[(std::size_t{1} << n) - 1];
}

bool is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return false;
  for (Vertex v = 0; v < n; ++v) {
    Graph h = g;
    h.isolate(v);
    if (matching_number(h) != (n - 1) / 2) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> components_without(const Graph& g,
                                                    const VertexSet& removed) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || removed.contains(s)) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      (g.neighbors(comp[i]) - removed).for_each([&](Vertex w) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int odd_components_without(const Graph& g, const VertexSet& removed) {
  int odd = 0;
  for (const auto& c : components_without(g, removed))
    if (c.size() % 2 == 1) ++odd;
  return odd;
}

int brute_force_max_deficiency(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw TooLargeError("brute_force_max_deficiency supports n <= 20");
  int best = 0;  // S = empty set gives at least 0
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) s.insert(v);
    best = std::max(best, odd_components_without(g, s) - s.size());
  }
  return best;
}

GEDecomposition gallai_edmonds(const Graph& g) {
  const int n = g.order();
  GEDecomposition ge{VertexSet(n), VertexSet(n), VertexSet(n), {}, matching_number(g)};
  for (Vertex v = 0; v < n; ++v) {
    Graph h = g;
    h.isolate(v);
    if (matching_number(h) == ge.nu) ge.D.insert(v);
  }
  ge.D.for_each([&](Vertex v) { ge.A |= g.neighbors(v); });
  ge.A -= ge.D;
  ge.C = VertexSet::full(n) - ge.D - ge.A;
  ge.components_of_D = components_without(g, ge.C | ge.A);

  for (const auto& comp : ge.components_of_D) {
    VertexSet keep(n);
    for (Vertex v : comp) keep.insert(v);
    if (!is_factor_critical(g.induced(keep)))
      throw std::logic_error("gallai_edmonds: D-component is not factor-critical");
  }
  if (n - 2 * ge.nu != odd_components_without(g, ge.A) - ge.A.size())
    throw std::logic_error("gallai_edmonds: Berge equality fails for S = A");
  return ge;
}

BergeWitness berge_witness(const Graph& g) {
  GEDecomposition ge = gallai_edmonds(g);
  BergeWitness w;
  w.T = ge.A.to_vector();
  w.nu = ge.nu;
  for (auto& comp : components_without(g, ge.A))
    if (comp.size() % 2 == 1) w.odd_components.push_back(std::move(comp));
  std::stable_sort(w.odd_components.begin(), w.odd_components.end(),
                   [](const auto& x, const auto& y) {
                     if (x.size() != y.size()) return x.size() > y.size();
                     return x.front() < y.front();
                   });
  for (const auto& comp : w.odd_components)
    w.k.push_back(static_cast<int>(comp.size() - 1) / 2);
  if (g.order() - 2 * w.nu != w.deficiency())
    throw std::logic_error("berge_witness: deficiency mismatch");
  return w;
}

void BipartiteInstance::add_edge(int i, int j) {
  if (i < 0 || i >= a || j < 0 || j >= b)
    throw RangeError("bipartite edge endpoint out of range");
  auto& row = adjacency[i];
  if (std::find(row.begin(), row.end(), j) == row.end()) row.push_back(j);
}

HallOutcome hall_matching(const BipartiteInstance& inst) {
  std::vector<int> partner_a(inst.a, -1), partner_b(inst.b, -1);
  std::vector<int> visit_stamp(inst.b, -1);

  // Kuhn's augmenting-path search.
  auto augment = [&](auto&& self, int x, int stamp) -> bool {
    for (int y : inst.adjacency[x]) {
      if (visit_stamp[y] == stamp) continue;
      visit_stamp[y] = stamp;
      if (partner_b[y] == -1 || self(self, partner_b[y], stamp)) {
        partner_a[x] = y;
        partner_b[y] = x;
        return true;
      }
    }
    return false;
  };
  for (int x = 0; x < inst.a; ++x) augment(augment, x, x);

  auto unmatched = std::find(partner_a.begin(), partner_a.end(), -1);
  if (unmatched == partner_a.end()) return HallCovering{std::move(partner_a)};

  // Alternating reachability from a free A-vertex: every B-vertex reached is
  // matched back into the reached A-set, so |N(S)| = |S| - 1.
  int root = static_cast<int>(unmatched - partner_a.begin());
  std::vector<bool> in_s(inst.a, false), in_n(inst.b, false);
  std::vector<int> stack{root};
  in_s[root] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : inst.adjacency[x]) {
      if (in_n[y]) continue;
      in_n[y] = true;
      int z = partner_b[y];
      if (z != -1 && !in_s[z]) {
        in_s[z] = true;
        stack.push_back(z);
      }
    }
  }
  HallViolator v;
  for (int x = 0; x < inst.a; ++x)
    if (in_s[x]) v.subset.push_back(x);
  for (int y = 0; y < inst.b; ++y)
    if (in_n[y]) v.neighbourhood.push_back(y);
  return v;
}

bool staircase_check(const BipartiteInstance& b) {
  for (int i = 0; i < b.a; ++i)
    if (b.degree(i) < i + 1) return false;
  return true;
}

}  // namespace arkit
