#include "arkit/structure.hpp"

#include <algorithm>
#include <map>

#include "arkit/error.hpp"
#include "arkit/extremal.hpp"

namespace arkit {

bool MonoStructureCertificate::validates(const ColoredGraph& h) const {
  const int n = h.order();
  auto in_range = [&](const std::vector<Vertex>& vs) {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v >= 0 && v < n; });
  };
  if (kind == MonoKind::kClique) {
    if (clique_vertices.empty() || !in_range(clique_vertices)) return false;
    for (std::size_t i = 0; i < clique_vertices.size(); ++i)
      for (std::size_t j = i + 1; j < clique_vertices.size(); ++j) {
        if (clique_vertices[i] == clique_vertices[j]) return false;
        if (h.color(clique_vertices[i], clique_vertices[j]) != color) return false;
      }
    return true;
  }
  if (!in_range(a_set) || !in_range(b_set) || a_set.empty()) return false;
  if (a_set.size() + b_set.size() != static_cast<std::size_t>(n)) return false;
  if (b_set.size() % 2 == 0) return false;
  std::vector<bool> in_a(n, false), seen(n, false);
  for (Vertex v : a_set) in_a[v] = true;
  for (Vertex v : a_set) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  for (Vertex v : b_set) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  for (Vertex a : a_set)
    for (Vertex w = 0; w < n; ++w)
      if (w != a && h.color(a, w) != color) return false;
  return true;
}

namespace {

// Removes vertices whose degree inside `cand` is below q - 1.
void peel(const std::vector<VertexSet>& adj, VertexSet& cand, int q) {
  bool changed = true;
  while (changed) {
    changed = false;
    cand.for_each([&](Vertex v) {
      if (adj[v].intersection_size(cand) < q - 1) {
        cand.erase(v);
        changed = true;
      }
    });
  }
}

// Bounded search tree for a vertex cover of the complement inside `cand`:
// deletes at most |cand| - q vertices so that the rest is a clique.
bool cover_branch(const std::vector<VertexSet>& adj, VertexSet cand, int q,
                  VertexSet& out) {
  for (;;) {
    peel(adj, cand, q);
    const int size = cand.size();
    if (size < q) return false;
    const int budget = size - q;
    // A vertex with more than `budget` non-neighbours must go.
    Vertex forced = -1;
    Vertex branch_u = -1;
    Vertex branch_v = -1;
    cand.for_each([&](Vertex u) {
      if (forced != -1) return;
      VertexSet missing = cand - adj[u];
      missing.erase(u);
      int k = missing.size();
      if (k > budget) forced = u;
      else if (k > 0 && branch_u == -1) {
        branch_u = u;
        branch_v = missing.first();
      }
    });
    if (forced != -1) {
      cand.erase(forced);
      continue;
    }
    if (branch_u == -1) {
      out = cand;
      return true;
    }
    if (budget == 0) return false;
    VertexSet without_v = cand;
    without_v.erase(branch_v);
    if (cover_branch(adj, without_v, q, out)) return true;
    cand.erase(branch_u);
  }
}

// Depth-first clique search in increasing vertex order with a greedy
// colouring bound; the first clique found is the lexicographically smallest.
bool expand(const std::vector<VertexSet>& adj, std::vector<Vertex>& clique,
            VertexSet candidates, int q) {
  if (static_cast<int>(clique.size()) >= q) return true;
  if (static_cast<int>(clique.size()) + candidates.size() < q) return false;
  {
    // Greedy colouring: number of colour classes bounds the clique size.
    VertexSet uncolored = candidates;
    int colors_used = 0;
    while (!uncolored.empty()) {
      ++colors_used;
      VertexSet avail = uncolored;
      while (!avail.empty()) {
        Vertex v = avail.first();
        uncolored.erase(v);
        avail.erase(v);
        avail -= adj[v];
      }
    }
    if (static_cast<int>(clique.size()) + colors_used < q) return false;
  }
  while (!candidates.empty()) {
    if (static_cast<int>(clique.size()) + candidates.size() < q) return false;
    Vertex v = candidates.first();
    candidates.erase(v);
    clique.push_back(v);
    if (expand(adj, clique, candidates & adj[v], q)) return true;
    clique.pop_back();
  }
  return false;
}

constexpr int kCoverBranchLimit = 24;

}  // namespace

std::optional<MonoStructureCertificate> find_mono_clique(const ColoredGraph& h, int q) {
  const int n = h.order();
  if (q < 1 || q > n) throw RangeError("find_mono_clique requires 1 <= q <= n");
  if (q == 1) {
    MonoStructureCertificate cert;
    cert.color = n >= 2 ? h.color(0, 1) : 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) cert.color = std::min(cert.color, h.color(u, v));
    cert.clique_vertices = {0};
    return cert;
  }
  for (const auto& [color, edges] : h.color_classes()) {
    if (static_cast<std::int64_t>(edges.size()) < choose2(q)) continue;
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (const Edge& e : edges) {
      adj[e.u].insert(e.v);
      adj[e.v].insert(e.u);
    }
    VertexSet cand = VertexSet::full(n);
    peel(adj, cand, q);
    if (cand.size() < q) continue;

    std::vector<Vertex> found;
    if (cand.size() - q <= kCoverBranchLimit) {
      VertexSet clique(n);
      if (cover_branch(adj, cand, q, clique)) {
        found = clique.to_vector();
        found.resize(q);
      }
    } else {
      std::vector<Vertex> clique;
      if (expand(adj, clique, cand, q)) found = clique;
    }
    if (!found.empty()) {
      MonoStructureCertificate cert;
      cert.kind = MonoKind::kClique;
      cert.color = color;
      cert.clique_vertices = std::move(found);
      return cert;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Color, std::vector<Vertex>>> saturated_vertices(const ColoredGraph& h) {
  std::map<Color, std::vector<Vertex>> by_color;
  const int n = h.order();
  for (Vertex v = 0; v < n; ++v) {
    Vertex other = v == 0 ? 1 : 0;
    if (other >= n) continue;
    Color c = h.color(v, other);
    bool uniform = true;
    for (Vertex w = 0; w < n && uniform; ++w)
      if (w != v && h.color(v, w) != c) uniform = false;
    if (uniform) by_color[c].push_back(v);
  }
  return {by_color.begin(), by_color.end()};
}

std::optional<MonoStructureCertificate> find_mono_join(const ColoredGraph& h, int s) {
  const int n = h.order();
  if (s < 0 || n < 2 * s + 2) throw RangeError("find_mono_join requires n >= 2s + 2");
  const auto a_size = static_cast<std::size_t>(n - 2 * s - 1);
  for (auto& [color, members] : saturated_vertices(h)) {
    if (members.size() < a_size) continue;
    MonoStructureCertificate cert;
    cert.kind = MonoKind::kJoin;
    cert.color = color;
    cert.a_set.assign(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(a_size));
    std::vector<bool> in_a(n, false);
    for (Vertex v : cert.a_set) in_a[v] = true;
    for (Vertex v = 0; v < n; ++v)
      if (!in_a[v]) cert.b_set.push_back(v);
    return cert;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHypothesisFails: return "hypothesis-fails";
    case Verdict::kConclusionHolds: return "conclusion-holds";
    case Verdict::kCounterexample: return "counterexample";
    case Verdict::kOutOfRangeObservation: return "out-of-range-observation";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

TheoremReport theorem_verdict(const ColoredGraph& h, int s, VerdictMode mode,
                              const SearchBudget& budget) {
  const int n = h.order();
  if (s < 1) throw RangeError("theorem_verdict requires s >= 1");
  TheoremReport r;
  r.n = n;
  r.s = s;
  r.mode = mode;
  r.in_theorem_range = n >= theorem_min_n(s);
  if (mode == VerdictMode::kStrict && !r.in_theorem_range)
    throw RangeError("strict mode requires n >= max(2s+5, 40)");
  if (n < 2 * s + 2) throw RangeError("theorem_verdict requires n >= 2s + 2");

  r.color_count = h.color_count();
  r.g = threshold_g(n, s).g;
  r.hypothesis_colors = static_cast<std::int64_t>(r.color_count) >= r.g;

  RainbowDecision rainbow = has_rainbow_matching(h, s + 2, budget);
  r.search_nodes = rainbow.nodes;
  if (rainbow.found) {
    r.hypothesis_rainbow = false;
    r.rainbow_witness = rainbow.certificate;
  } else if (rainbow.status == SearchStatus::kExact) {
    r.hypothesis_rainbow = true;
  }

  r.clique = find_mono_clique(h, n - s);
  r.join = find_mono_join(h, s);

  if (!r.hypothesis_colors || r.hypothesis_rainbow == false) {
    r.verdict = Verdict::kHypothesisFails;
  } else if (r.clique || r.join) {
    r.verdict = Verdict::kConclusionHolds;
  } else if (!r.hypothesis_rainbow.has_value()) {
    r.verdict = Verdict::kInconclusive;
  } else {
    r.verdict = r.in_theorem_range ? Verdict::kCounterexample
                                   : Verdict::kOutOfRangeObservation;
  }
  return r;
}

}  // namespace arkit
