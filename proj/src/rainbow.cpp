#include "arkit/rainbow.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "arkit/error.hpp"
#include "arkit/matching.hpp"
#include "arkit/random.hpp"

namespace arkit {

bool RainbowCertificate::validates(const ColoredGraph& h) const {
  if (colors.size() != edges.size()) return false;
  if (!edges.is_valid(h.order())) return false;
  std::set<Color> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (h.color(edges.edges[i]) != colors[i]) return false;
    if (!seen.insert(colors[i]).second) return false;
  }
  return true;
}

namespace {

// Depth-first branch and bound over colour classes.
//
// At every node the classes are restricted to edges with both ends still
// free. Classes with a single live edge impose no colour constraint beyond
// their own, so they are resolved exactly by one maximum matching; branching
// happens only on classes with two or more live edges, smallest first:
// "use edge e" for each live e, then "discard the class".
//
// Upper bound: for any size cut tau, a rainbow matching splits into a
// matching inside the union of classes of size <= tau plus at most one edge
// from each larger class (and those edges themselves form a matching).
class RainbowSearch {
 public:
  RainbowSearch(const ColoredGraph& h, const SearchBudget& budget)
      : n_(h.order()), budget_(budget) {
    for (auto& [color, edges] : h.color_classes()) {
      colors_.push_back(color);
      classes_.push_back(std::move(edges));
    }
    if (budget_.time_limit)
      deadline_ = std::chrono::steady_clock::now() + *budget_.time_limit;
  }

  // Searches for a rainbow matching of size >= target; target < 0 means
  // maximise.
  void run(int target) {
    target_ = target;
    goal_ = target < 0 ? std::numeric_limits<int>::max() : target;
    std::vector<int> active(classes_.size());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);
    dfs(VertexSet::full(n_), active, true);
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const RainbowCertificate& best() const { return best_; }

 private:
  struct LiveClass {
    int id;
    std::vector<Edge> edges;
  };

  int threshold() const {
    // A node is worth exploring only if it can beat this size.
    return target_ < 0 ? static_cast<int>(best_.size())
                       : std::max(static_cast<int>(best_.size()), target_ - 1);
  }

  bool out_of_budget() {
    if (budget_.node_limit && nodes_ > *budget_.node_limit) return true;
    if (deadline_ && (nodes_ & 63) == 0 &&
        std::chrono::steady_clock::now() > *deadline_)
      return true;
    return false;
  }

  void record(const Matching& singles_matching,
              const std::vector<std::pair<Edge, Color>>& single_edges) {
    RainbowCertificate cert;
    for (const auto& [e, c] : chosen_) {
      cert.edges.edges.push_back(e);
      cert.colors.push_back(c);
    }
    for (const Edge& e : singles_matching.edges) {
      auto it = std::find_if(single_edges.begin(), single_edges.end(),
                             [&](const auto& p) { return p.first == e; });
      cert.edges.edges.push_back(e);
      cert.colors.push_back(it->second);
    }
    best_ = std::move(cert);
  }

  int upper_bound(const std::vector<LiveClass>& live,
                  const std::vector<Edge>& singles, int singles_nu, int stop_at) {
    // live holds classes with >= 2 edges, sorted by size ascending.
    int bound = static_cast<int>(singles.size() + live.size());  // tau = 0
    if (bound <= stop_at) return bound;
    std::vector<Edge> small = singles;
    std::vector<Edge> large;
    for (const auto& c : live) large.insert(large.end(), c.edges.begin(), c.edges.end());
    std::size_t i = 0;
    int evaluated = 0;
    // tau = 1 uses the singles matching computed by the caller; then each
    // distinct live size (capped to keep nodes cheap).
    int small_nu = singles_nu;
    for (;;) {
      int remaining = static_cast<int>(live.size() - i);
      int large_nu = remaining;
      if (remaining > 1 && !large.empty())
        large_nu = std::min(remaining,
                            static_cast<int>(max_matching(n_, large).size()));
      bound = std::min(bound, small_nu + large_nu);
      if (bound <= stop_at || i == live.size() || ++evaluated >= kMaxCuts) break;
      std::size_t size = live[i].edges.size();
      while (i < live.size() && live[i].edges.size() == size) {
        small.insert(small.end(), live[i].edges.begin(), live[i].edges.end());
        ++i;
      }
      large.clear();
      for (std::size_t j = i; j < live.size(); ++j)
        large.insert(large.end(), live[j].edges.begin(), live[j].edges.end());
      small_nu = static_cast<int>(max_matching(n_, small).size());
    }
    return bound;
  }

  void dfs(const VertexSet& alive, const std::vector<int>& active, bool root) {
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    const int depth = static_cast<int>(chosen_.size());

    std::vector<std::pair<Edge, Color>> single_edges;
    std::vector<Edge> singles;
    std::vector<LiveClass> live;
    for (int id : active) {
      LiveClass lc{id, {}};
      for (const Edge& e : classes_[id])
        if (alive.contains(e.u) && alive.contains(e.v)) lc.edges.push_back(e);
      if (lc.edges.size() == 1) {
        singles.push_back(lc.edges.front());
        single_edges.emplace_back(lc.edges.front(), colors_[id]);
      } else if (lc.edges.size() > 1) {
        live.push_back(std::move(lc));
      }
    }

    // Every node yields a feasible rainbow matching: chosen edges plus a
    // maximum matching among single-edge classes.
    Matching singles_matching = max_matching(n_, singles);
    const int singles_nu = static_cast<int>(singles_matching.size());
    if (depth + singles_nu > static_cast<int>(best_.size()))
      record(singles_matching, single_edges);
    if (static_cast<int>(best_.size()) >= goal_) {
      done_ = true;
      return;
    }
    if (live.empty()) return;

    std::stable_sort(live.begin(), live.end(), [](const auto& a, const auto& b) {
      return a.edges.size() < b.edges.size();
    });
    const int bound =
        upper_bound(live, singles, singles_nu, threshold() - depth);
    if (root && target_ < 0) goal_ = std::min(goal_, depth + bound);
    if (depth + bound <= threshold()) return;

    const LiveClass& branch = live.front();
    std::vector<int> rest;
    rest.reserve(active.size());
    for (int id : active)
      if (id != branch.id) rest.push_back(id);

    for (const Edge& e : branch.edges) {
      VertexSet next = alive;
      next.erase(e.u);
      next.erase(e.v);
      chosen_.emplace_back(e, colors_[branch.id]);
      dfs(next, rest, false);
      chosen_.pop_back();
      if (done_ || aborted_) return;
      if (depth + bound <= threshold()) return;
    }
    dfs(alive, rest, false);
  }

  static constexpr int kMaxCuts = 8;

  int n_;
  SearchBudget budget_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<Color> colors_;
  std::vector<std::vector<Edge>> classes_;

  int target_ = -1;
  int goal_ = 0;
  bool done_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<std::pair<Edge, Color>> chosen_;
  RainbowCertificate best_;
};

}  // namespace

RainbowResult max_rainbow_matching(const ColoredGraph& h, const SearchBudget& budget) {
  RainbowSearch search(h, budget);
  search.run(-1);
  RainbowResult result;
  result.status = search.aborted() ? SearchStatus::kInconclusive : SearchStatus::kExact;
  result.best = search.best();
  result.nodes = search.nodes();
  return result;
}

RainbowDecision has_rainbow_matching(const ColoredGraph& h, int k,
                                     const SearchBudget& budget) {
  if (k < 0) throw RangeError("has_rainbow_matching: k must be non-negative");
  RainbowDecision decision;
  if (k == 0) {
    decision.found = true;
    decision.certificate = RainbowCertificate{};
    return decision;
  }
  RainbowSearch search(h, budget);
  search.run(k);
  decision.nodes = search.nodes();
  if (static_cast<int>(search.best().size()) >= k) {
    decision.found = true;
    RainbowCertificate cert = search.best();
    cert.edges.edges.resize(k);
    cert.colors.resize(k);
    decision.certificate = std::move(cert);
  } else if (search.aborted()) {
    decision.status = SearchStatus::kInconclusive;
  }
  return decision;
}

RepresentativeSubgraph representative_subgraph(const ColoredGraph& h,
                                               RepresentativePolicy policy,
                                               std::uint64_t seed) {
  RepresentativeSubgraph rep{Graph(h.order()), {}};
  Rng rng(seed);
  for (const auto& [color, edges] : h.color_classes()) {
    const Edge& pick = policy == RepresentativePolicy::kLexicographic
                           ? edges.front()
                           : edges[rng.below(edges.size())];
    rep.chosen.emplace(color, pick);
    rep.graph.add_edge(pick.u, pick.v);
  }
  return rep;
}

}  // namespace arkit
