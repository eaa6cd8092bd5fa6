#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "arkit/colored_graph.hpp"
#include "arkit/rainbow.hpp"

namespace arkit {

enum class MonoKind { kClique, kJoin };

struct MonoStructureCertificate {
  MonoKind kind = MonoKind::kClique;
  Color color = 0;
  std::vector<Vertex> clique_vertices;  // kind == kClique
  std::vector<Vertex> a_set;            // kind == kJoin: the clique side
  std::vector<Vertex> b_set;            // kind == kJoin: the independent side

  // Re-checks the certificate against h. For joins, |b_set| must be odd.
  bool validates(const ColoredGraph& h) const;
};

// A colour class containing a clique on q vertices, 1 <= q <= n. Colours are
// scanned in increasing order; the first colour with a q-clique is reported.
std::optional<MonoStructureCertificate> find_mono_clique(const ColoredGraph& h, int q);

// A colour c and a set A of n-2s-1 vertices such that every edge touching A
// has colour c, i.e. a monochromatic K_{n-2s-1} v empty_{2s+1} spanning K_n.
// Requires n >= 2s + 2.
std::optional<MonoStructureCertificate> find_mono_join(const ColoredGraph& h, int s);

// Per-colour sets of vertices all of whose edges carry that colour.
std::vector<std::pair<Color, std::vector<Vertex>>> saturated_vertices(const ColoredGraph& h);

enum class VerdictMode { kStrict, kPermissive };

enum class Verdict {
  kHypothesisFails,     // fewer than g colours, or a rainbow M_{s+2} exists
  kConclusionHolds,     // hypotheses hold and a monochromatic structure exists
  kCounterexample,      // hypotheses hold inside the theorem range, no structure
  kOutOfRangeObservation,  // as above but n < max(2s+5, 40) (permissive only)
  kInconclusive,        // rainbow search ran out of budget
};

std::string_view to_string(Verdict v);

struct TheoremReport {
  int n = 0;
  int s = 0;
  VerdictMode mode = VerdictMode::kStrict;
  bool in_theorem_range = false;
  std::size_t color_count = 0;
  std::int64_t g = 0;
  bool hypothesis_colors = false;
  // True when no rainbow M_{s+2} exists; empty when the search was inconclusive.
  std::optional<bool> hypothesis_rainbow;
  std::optional<RainbowCertificate> rainbow_witness;
  std::optional<MonoStructureCertificate> clique;
  std::optional<MonoStructureCertificate> join;
  Verdict verdict = Verdict::kHypothesisFails;
  std::uint64_t search_nodes = 0;

  bool conclusion_clique() const { return clique.has_value(); }
  bool conclusion_join() const { return join.has_value(); }
};

// Evaluates both hypotheses and both conclusions of the stability statement.
// Strict mode requires n >= max(2s+5, 40); permissive mode accepts n >= 2s+2.
TheoremReport theorem_verdict(const ColoredGraph& h, int s,
                              VerdictMode mode = VerdictMode::kStrict,
                              const SearchBudget& budget = {});

}  // namespace arkit
