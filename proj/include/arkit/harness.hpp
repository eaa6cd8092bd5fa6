#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arkit/colored_graph.hpp"
#include "arkit/extremal.hpp"
#include "arkit/rainbow.hpp"
#include "arkit/structure.hpp"

namespace arkit {

inline constexpr int kOracleTuranMaxN = 7;
inline constexpr int kOracleAntiRamseyMaxN = 5;

// ex(n, M_k) by exhaustive search over edge subsets of K_n (n <= 7).
std::int64_t oracle_turan(int n, int k);

// Is there a partition of E(K_n) into exactly `classes` parts without a
// rainbow M_s? Restricted-growth-string enumeration (n <= 5).
bool rainbow_free_partition_exists(int n, int s, int classes);

// ar(n, M_s): smallest C such that every partition of E(K_n) into exactly C
// classes contains a rainbow M_s (n <= 5, 1 <= s, 2s <= n).
int oracle_anti_ramsey(int n, int s);

struct ProbeTrial {
  std::size_t index = 0;
  std::optional<Edge> recolored;  // boundary probe: the recoloured edge
  std::uint64_t seed = 0;         // random search: trial substream seed
  std::string base;               // random search: starting colouring
  int accepted_mutations = 0;
  int rejected_mutations = 0;
  std::size_t color_count = 0;
  bool evaluated = false;  // theorem_verdict was run
  std::optional<bool> rainbow_found;
  bool clique_found = false;
  bool join_found = false;
  std::optional<Verdict> verdict;
  bool inconclusive = false;
};

// Checks on the unmodified extremal colouring of a boundary probe.
struct BaseCheck {
  std::size_t color_count = 0;
  std::int64_t g = 0;
  std::optional<bool> rainbow_free;  // no rainbow M_{s+2}; empty if inconclusive
  bool clique_absent = false;
  bool join_absent = false;

  // g - 1 colours and neither hypothesis-side nor conclusion-side structure.
  bool tight() const {
    return static_cast<std::int64_t>(color_count) == g - 1 && rainbow_free == true &&
           clique_absent && join_absent;
  }
};

struct ProbeReport {
  std::string instance;
  int n = 0;
  int s = 0;
  std::size_t trials = 0;
  std::optional<BaseCheck> base;
  std::vector<ProbeTrial> outcomes;         // sorted by trial index
  std::vector<std::size_t> counterexamples;  // in-range violations
  std::vector<std::size_t> observations;     // out-of-range violations
  std::size_t inconclusive = 0;
};

// Verifies the tight colouring, then recolours each colour-0 edge in turn
// with one fresh colour (raising the count to g) and evaluates the theorem.
ProbeReport recolor_boundary_probe(int n, int s, ExtremalVariant variant,
                                   const SearchBudget& budget = {});

struct RandomSearchOptions {
  bool permissive = false;
  int max_walk = 8;  // mutations attempted per trial
  // Per rainbow search; node limits keep the report deterministic.
  std::uint64_t node_limit = 200'000;
};

// Seeded falsification search: mutation walks from rainbow-free starting
// colourings that keep rainbow-freeness; every walk ending with >= g colours
// is fed to theorem_verdict.
ProbeReport random_stability_search(int n, int s, std::size_t samples, std::uint64_t seed,
                                    const RandomSearchOptions& options = {});

}  // namespace arkit
