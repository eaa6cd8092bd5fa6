#include "arkit/harness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

#include "arkit/error.hpp"
#include "arkit/parallel.hpp"
#include "arkit/random.hpp"

namespace arkit {

namespace {

// Matching number of a graph on <= 8 vertices given by adjacency masks.
int tiny_nu(const std::array<std::uint8_t, 8>& adj, std::uint8_t free) {
  if (free == 0) return 0;
  int v = std::countr_zero(free);
  std::uint8_t rest = free & static_cast<std::uint8_t>(~(1U << v));
  int best = tiny_nu(adj, rest);
  for (std::uint8_t cand = adj[v] & rest; cand != 0; cand &= cand - 1) {
    int w = std::countr_zero(cand);
    best = std::max(best, 1 + tiny_nu(adj, rest & static_cast<std::uint8_t>(~(1U << w))));
  }
  return best;
}

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return edges;
}

}  // namespace

std::int64_t oracle_turan(int n, int k) {
  if (n > kOracleTuranMaxN) throw TooLargeError("oracle_turan supports n <= 7");
  if (n < 1 || k < 1) throw RangeError("oracle_turan requires n >= 1 and k >= 1");
  const auto edges = complete_edges(n);
  const int m = static_cast<int>(edges.size());
  const auto all = static_cast<std::uint8_t>((1U << n) - 1);
  std::array<std::uint8_t, 8> adj{};
  int best = 0;

  // Include/exclude each edge; including an edge that creates M_k is pruned
  // since every superset then contains M_k as well.
  std::function<void(int, int)> dfs = [&](int i, int count) {
    if (count + (m - i) <= best) return;
    if (i == m) {
      best = count;
      return;
    }
    const Edge& e = edges[i];
    adj[e.u] |= static_cast<std::uint8_t>(1U << e.v);
    adj[e.v] |= static_cast<std::uint8_t>(1U << e.u);
    if (tiny_nu(adj, all) < k) dfs(i + 1, count + 1);
    adj[e.u] &= static_cast<std::uint8_t>(~(1U << e.v));
    adj[e.v] &= static_cast<std::uint8_t>(~(1U << e.u));
    dfs(i + 1, count);
  };
  dfs(0, 0);
  return best;
}

bool rainbow_free_partition_exists(int n, int s, int classes) {
  if (n > kOracleAntiRamseyMaxN) throw TooLargeError("anti-Ramsey oracle supports n <= 5");
  if (s < 1 || 2 * s > n) throw RangeError("anti-Ramsey oracle requires 1 <= s <= n/2");
  const auto edges = complete_edges(n);
  const int m = static_cast<int>(edges.size());
  if (classes < 1 || classes > m) return false;

  // Every s-matching, as edge indices, grouped by its largest index so the
  // check after assigning edge i only inspects matchings completed at i.
  std::vector<std::vector<std::vector<int>>> completed_at(m);
  std::vector<int> current;
  std::function<void(int, std::uint32_t)> gather = [&](int start, std::uint32_t used) {
    if (static_cast<int>(current.size()) == s) {
      completed_at[current.back()].push_back(current);
      return;
    }
    for (int i = start; i < m; ++i) {
      std::uint32_t mask = (1U << edges[i].u) | (1U << edges[i].v);
      if (used & mask) continue;
      current.push_back(i);
      gather(i + 1, used | mask);
      current.pop_back();
    }
  };
  gather(0, 0);

  std::vector<int> label(m, 0);
  std::function<bool(int, int)> rgs = [&](int i, int used_labels) -> bool {
    if (i == m) return used_labels == classes;
    if (used_labels + (m - i) < classes) return false;
    const int top = std::min(used_labels, classes - 1);
    for (int c = 0; c <= top; ++c) {
      label[i] = c;
      bool rainbow = false;
      for (const auto& mt : completed_at[i]) {
        bool distinct = true;
        for (std::size_t a = 0; a < mt.size() && distinct; ++a)
          for (std::size_t b = a + 1; b < mt.size() && distinct; ++b)
            if (label[mt[a]] == label[mt[b]]) distinct = false;
        if (distinct) {
          rainbow = true;
          break;
        }
      }
      // A rainbow M_s already present persists in every completion.
      if (rainbow) continue;
      if (rgs(i + 1, std::max(used_labels, c + 1))) return true;
    }
    return false;
  };
  return rgs(0, 0);
}

int oracle_anti_ramsey(int n, int s) {
  if (n > kOracleAntiRamseyMaxN) throw TooLargeError("anti-Ramsey oracle supports n <= 5");
  if (s < 1 || 2 * s > n) throw RangeError("anti-Ramsey oracle requires 1 <= s <= n/2");
  const int m = static_cast<int>(choose2(n));
  for (int c = 1; c <= m; ++c)
    if (!rainbow_free_partition_exists(n, s, c)) return c;
  // C = m is the all-distinct colouring, which always has a rainbow M_s.
  throw std::logic_error("oracle_anti_ramsey: no colour count forces a rainbow M_s");
}

namespace {

VerdictMode mode_for(int n, int s) {
  return n >= theorem_min_n(s) ? VerdictMode::kStrict : VerdictMode::kPermissive;
}

void classify(ProbeReport& report) {
  for (const ProbeTrial& t : report.outcomes) {
    if (t.inconclusive) ++report.inconclusive;
    if (!t.verdict) continue;
    if (*t.verdict == Verdict::kCounterexample) report.counterexamples.push_back(t.index);
    if (*t.verdict == Verdict::kOutOfRangeObservation) report.observations.push_back(t.index);
  }
}

void fill_from_verdict(ProbeTrial& trial, const TheoremReport& r) {
  trial.evaluated = true;
  trial.color_count = r.color_count;
  if (r.hypothesis_rainbow) trial.rainbow_found = !*r.hypothesis_rainbow;
  trial.clique_found = r.conclusion_clique();
  trial.join_found = r.conclusion_join();
  trial.verdict = r.verdict;
  if (r.verdict == Verdict::kInconclusive) trial.inconclusive = true;
}

}  // namespace

ProbeReport recolor_boundary_probe(int n, int s, ExtremalVariant variant,
                                   const SearchBudget& budget) {
  if (!extremal_in_regime(n, s, variant))
    throw RangeError("boundary probe requires the construction's regime");
  const ColoredGraph base = construct_extremal_coloring(n, s, variant);
  const VerdictMode mode = mode_for(n, s);

  ProbeReport report;
  report.instance = std::string(to_string(variant)) + "(" + std::to_string(n) + "," +
                    std::to_string(s) + ") boundary recolouring";
  report.n = n;
  report.s = s;

  BaseCheck check;
  check.color_count = base.color_count();
  check.g = threshold_g(n, s).g;
  RainbowDecision rd = has_rainbow_matching(base, s + 2, budget);
  if (rd.found) check.rainbow_free = false;
  else if (rd.status == SearchStatus::kExact) check.rainbow_free = true;
  check.clique_absent = !find_mono_clique(base, n - s).has_value();
  check.join_absent = !find_mono_join(base, s).has_value();
  report.base = check;

  std::vector<Edge> zero_edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (base.color(u, v) == 0) zero_edges.emplace_back(u, v);
  const Color fresh = base.max_color() + 1;

  report.trials = zero_edges.size();
  report.outcomes.resize(zero_edges.size());
  parallel_for(zero_edges.size(), [&](std::size_t i) {
    ColoredGraph h = base;
    h.set_color(zero_edges[i].u, zero_edges[i].v, fresh);
    ProbeTrial& trial = report.outcomes[i];
    trial.index = i;
    trial.recolored = zero_edges[i];
    fill_from_verdict(trial, theorem_verdict(h, s, mode, budget));
  });
  classify(report);
  return report;
}

namespace {

struct StartingColoring {
  std::string name;
  ColoredGraph graph;
};

std::vector<StartingColoring> starting_colorings(int n, int s) {
  std::vector<StartingColoring> out;
  out.push_back({"h1", construct_extremal_coloring(n, s, ExtremalVariant::kH1, true)});
  out.push_back({"h2", construct_extremal_coloring(n, s, ExtremalVariant::kH2, true)});
  out.push_back({"rainbow-plus-one(turan)", rainbow_plus_one(n, construct_turan_graph(n, s))});
  Graph clique(n);
  for (Vertex u = 0; u <= 2 * s; ++u)
    for (Vertex v = u + 1; v <= 2 * s; ++v) clique.add_edge(u, v);
  out.push_back({"rainbow-plus-one(clique)", rainbow_plus_one(n, clique)});
  return out;
}

enum class Mutation { kSplit, kRecolor, kMerge };

// Applies one random mutation; returns false if none applies.
bool mutate(ColoredGraph& h, Rng& rng, Mutation& kind) {
  auto classes = h.color_classes();
  std::vector<Color> colors;
  for (const auto& [c, e] : classes) colors.push_back(c);
  const Color fresh = h.max_color() + 1;
  const std::uint64_t roll = rng.below(10);
  if (roll < 4) {
    kind = Mutation::kSplit;
    std::vector<Color> splittable;
    for (const auto& [c, e] : classes)
      if (e.size() >= 2) splittable.push_back(c);
    if (splittable.empty()) return false;
    const auto& edges = classes[splittable[rng.below(splittable.size())]];
    std::vector<Edge> moved;
    for (const Edge& e : edges)
      if (rng.coin()) moved.push_back(e);
    if (moved.empty() || moved.size() == edges.size())
      moved = {edges[rng.below(edges.size())]};
    for (const Edge& e : moved) h.set_color(e.u, e.v, fresh);
    return true;
  }
  if (roll < 8) {
    kind = Mutation::kRecolor;
    const int n = h.order();
    Vertex u = static_cast<Vertex>(rng.below(n));
    Vertex v = static_cast<Vertex>(rng.below(n - 1));
    if (v >= u) ++v;
    Color target = fresh;
    if (colors.size() > 1 && rng.coin()) {
      target = colors[rng.below(colors.size())];
      if (target == h.color(u, v)) target = fresh;
    }
    h.set_color(u, v, target);
    return true;
  }
  kind = Mutation::kMerge;
  if (colors.size() < 2) return false;
  std::size_t a = rng.below(colors.size());
  std::size_t b = rng.below(colors.size() - 1);
  if (b >= a) ++b;
  for (const Edge& e : classes[colors[b]]) h.set_color(e.u, e.v, colors[a]);
  return true;
}

}  // namespace

ProbeReport random_stability_search(int n, int s, std::size_t samples, std::uint64_t seed,
                                    const RandomSearchOptions& options) {
  if (s < 1) throw RangeError("random_stability_search requires s >= 1");
  if (!options.permissive && n < theorem_min_n(s))
    throw RangeError("strict mode requires n >= max(2s+5, 40)");
  if (n < 2 * s + 2) throw RangeError("random_stability_search requires n >= 2s + 2");
  const std::vector<StartingColoring> starts = starting_colorings(n, s);
  const VerdictMode mode = options.permissive ? VerdictMode::kPermissive : VerdictMode::kStrict;
  const std::int64_t g = threshold_g(n, s).g;
  SearchBudget budget;
  budget.node_limit = options.node_limit;

  ProbeReport report;
  report.instance = "random stability search n=" + std::to_string(n) +
                    " s=" + std::to_string(s) + " seed=" + std::to_string(seed);
  report.n = n;
  report.s = s;
  report.trials = samples;
  report.outcomes.resize(samples);

  parallel_for(samples, [&](std::size_t i) {
    ProbeTrial& trial = report.outcomes[i];
    trial.index = i;
    trial.seed = substream_seed(seed, i);
    Rng rng(trial.seed);
    const StartingColoring& start = starts[rng.below(starts.size())];
    trial.base = start.name;
    ColoredGraph current = start.graph;
    const int steps = 1 + static_cast<int>(rng.below(options.max_walk));
    for (int step = 0; step < steps; ++step) {
      ColoredGraph candidate = current;
      Mutation kind{};
      if (!mutate(candidate, rng, kind)) {
        ++trial.rejected_mutations;
        continue;
      }
      // Merging classes cannot create a rainbow matching.
      if (kind != Mutation::kMerge) {
        RainbowDecision d = has_rainbow_matching(candidate, s + 2, budget);
        if (d.status == SearchStatus::kInconclusive) trial.inconclusive = true;
        if (d.found || d.status == SearchStatus::kInconclusive) {
          ++trial.rejected_mutations;
          continue;
        }
      }
      current = std::move(candidate);
      ++trial.accepted_mutations;
    }
    trial.color_count = current.color_count();
    if (static_cast<std::int64_t>(trial.color_count) >= g)
      fill_from_verdict(trial, theorem_verdict(current, s, mode, budget));
  });
  classify(report);
  return report;
}

}  // namespace arkit
