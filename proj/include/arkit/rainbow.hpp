#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "arkit/colored_graph.hpp"

namespace arkit {

// Limits for exact searches. An exhausted budget yields kInconclusive and is
// never reported as a negative answer. Node limits are deterministic; time
// limits are not.
struct SearchBudget {
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::uint64_t> node_limit;
};

enum class SearchStatus { kExact, kInconclusive };

struct RainbowCertificate {
  Matching edges;
  std::vector<Color> colors;  // colors[i] is the colour of edges.edges[i]

  std::size_t size() const { return edges.size(); }
  // Disjoint edges, distinct colours, colours consistent with h.
  bool validates(const ColoredGraph& h) const;
};

struct RainbowResult {
  SearchStatus status = SearchStatus::kExact;
  // Maximum when status is kExact, otherwise the best found so far.
  RainbowCertificate best;
  std::uint64_t nodes = 0;
};

struct RainbowDecision {
  SearchStatus status = SearchStatus::kExact;
  bool found = false;
  std::optional<RainbowCertificate> certificate;  // exactly k edges when found
  std::uint64_t nodes = 0;
};

RainbowResult max_rainbow_matching(const ColoredGraph& h,
                                   const SearchBudget& budget = {});

// Does h contain a rainbow matching with k edges?
RainbowDecision has_rainbow_matching(const ColoredGraph& h, int k,
                                     const SearchBudget& budget = {});

enum class RepresentativePolicy { kLexicographic, kSeeded };

// One edge from every colour class.
struct RepresentativeSubgraph {
  Graph graph;
  std::map<Color, Edge> chosen;
};

RepresentativeSubgraph representative_subgraph(const ColoredGraph& h,
                                               RepresentativePolicy policy,
                                               std::uint64_t seed = 0);

}  // namespace arkit
