#include "arkit/extremal.hpp"

#include <algorithm>

#include "arkit/error.hpp"

namespace arkit {

namespace {
void check_formula_n(std::int64_t n) {
  if (n < 0 || n > kFormulaMaxN) throw RangeError("n out of supported range");
}
}  // namespace

std::int64_t turan_matching(std::int64_t n, std::int64_t k) {
  check_formula_n(n);
  if (k < 1 || n < 2 * k) throw RangeError("turan_matching requires k >= 1 and n >= 2k");
  const std::int64_t star_side = choose2(k - 1) + (k - 1) * (n - k + 1);
  return std::max(star_side, choose2(2 * k - 1));
}

std::int64_t anti_ramsey_matching(std::int64_t n, std::int64_t s) {
  check_formula_n(n);
  if (s < 2 || n < 2 * s)
    throw RangeError("anti_ramsey_matching requires s >= 2 and n >= 2s");
  if (n == 4 && s == 2) return 4;
  if (n == 2 * s && s >= 7) return turan_matching(n, s - 1) + 3;
  return turan_matching(n, s - 1) + 2;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kG1Dominant: return "g1-dominant";
    case Regime::kG2Dominant: return "g2-dominant";
    case Regime::kEqual: return "equal";
  }
  return "?";
}

ThresholdValues threshold_g(std::int64_t n, std::int64_t s) {
  check_formula_n(n);
  if (s < 1 || s > n) throw RangeError("threshold_g requires 1 <= s <= n");
  ThresholdValues t;
  t.g1 = choose2(n) - choose2(n - s + 1) + 5;
  t.g2 = choose2(2 * s - 1) + n + 1;
  t.g = std::max(t.g1, t.g2);
  t.regime = t.g1 > t.g2   ? Regime::kG1Dominant
             : t.g1 < t.g2 ? Regime::kG2Dominant
                           : Regime::kEqual;
  t.in_range = n >= 2 * s + 5;
  return t;
}

Graph construct_turan_graph(int n, int s) {
  if (s < 0 || s > n) throw RangeError("construct_turan_graph requires 0 <= s <= n");
  Graph g(n);
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::string_view to_string(ExtremalVariant v) {
  return v == ExtremalVariant::kH1 ? "h1" : "h2";
}

bool extremal_in_regime(int n, int s, ExtremalVariant variant) {
  if (s < 1 || n < 2 * s + 5) return false;
  return variant == ExtremalVariant::kH1 ? 2 * n >= 5 * s + 3 : 2 * n <= 5 * s + 3;
}

ColoredGraph construct_extremal_coloring(int n, int s, ExtremalVariant variant,
                                         bool permissive) {
  if (!extremal_in_regime(n, s, variant)) {
    if (!permissive)
      throw RangeError(std::string(to_string(variant)) +
                       " construction outside its regime (use permissive mode)");
  }
  Graph f(n);
  if (variant == ExtremalVariant::kH1) {
    if (s < 1 || n < s + 2) throw RangeError("h1 requires s >= 1 and n >= s + 2");
    const int hub = s - 1;
    for (Vertex u = 0; u < hub; ++u)
      for (Vertex v = u + 1; v < n; ++v) f.add_edge(u, v);
    f.add_edge(hub, hub + 1);
    f.add_edge(hub, hub + 2);
    f.add_edge(hub + 1, hub + 2);
  } else {
    if (s < 1 || n < 2 * s) throw RangeError("h2 requires s >= 1 and n >= 2s");
    for (Vertex v = 1; v < n; ++v) f.add_edge(0, v);
    for (Vertex u = 1; u < 2 * s; ++u)
      for (Vertex v = u + 1; v < 2 * s; ++v) f.add_edge(u, v);
  }
  return rainbow_plus_one(n, f);
}

ColoredGraph rainbow_plus_one(int n, const Graph& base) {
  if (base.order() != n) throw RangeError("rainbow_plus_one: base order differs from n");
  ColoredGraph h(n, 0);
  Color next = 1;
  for (const Edge& e : base.edges()) h.set_color(e.u, e.v, next++);
  return h;
}

}  // namespace arkit
