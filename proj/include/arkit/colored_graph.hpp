#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arkit/vertex_set.hpp"

namespace arkit {

using Color = std::uint32_t;

// Largest vertex count accepted anywhere in the toolkit.
inline constexpr int kMaxVertices = 10000;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on [0, n) with per-vertex adjacency bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  // Deletes every edge at v; v stays in the vertex set as an isolated vertex.
  void isolate(Vertex v);

  int degree(Vertex v) const { return adj_[v].size(); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }

  // All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Subgraph induced on `keep`, re-indexed in increasing id order.
  Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> adj_;
};

// A set of pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  // True when edges are pairwise disjoint and, if `g` is given, all present.
  bool is_valid(int n) const;
  bool is_valid_in(const Graph& g) const;
};

// Complete graph K_n with a total edge colouring.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(int n, Color fill);

  int order() const { return n_; }
  std::size_t pair_count() const { return colors_.size(); }

  Color color(Vertex u, Vertex v) const { return colors_[pair_rank(u, v)]; }
  Color color(const Edge& e) const { return colors_[pair_rank(e.u, e.v)]; }
  void set_color(Vertex u, Vertex v, Color c) { colors_[pair_rank(u, v)] = c; }

  // Rank of {u, v} in the flat triangular store; u != v.
  static std::size_t pair_rank(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
  }

  // Colour classes keyed by colour, each sorted lexicographically.
  std::map<Color, std::vector<Edge>> color_classes() const;
  // Number of distinct colours in use.
  std::size_t color_count() const;
  Color max_color() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Color> colors_;
};

struct ColorCensus {
  std::map<Color, std::size_t> counts;

  std::size_t distinct() const { return counts.size(); }
  std::size_t total_edges() const;
};

ColorCensus color_census(const ColoredGraph& g);

struct InducedColoredGraph {
  ColoredGraph graph;
  // parent_ids[i] is the id in the parent graph of induced vertex i.
  std::vector<Vertex> parent_ids;
};

// Throws RangeError when `keep` is empty or names an id outside [0, n).
InducedColoredGraph induced(const ColoredGraph& g, std::span<const Vertex> keep);

ColoredGraph parse_colored_graph(std::string_view text);
std::string serialize(const ColoredGraph& g);

Graph parse_graph(std::string_view text);
std::string serialize(const Graph& g);

ColoredGraph read_colored_graph_file(const std::string& path);
Graph read_graph_file(const std::string& path);

inline std::int64_t choose2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace arkit
