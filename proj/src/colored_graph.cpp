#include "arkit/colored_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "arkit/error.hpp"

namespace arkit {

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
  if (n < 0 || n > kMaxVertices) throw RangeError("vertex count out of range");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw RangeError("invalid edge endpoints");
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adj_[u].contains(v)) return;
  adj_[u].erase(v);
  adj_[v].erase(u);
  --edge_count_;
}

void Graph::isolate(Vertex v) {
  adj_[v].for_each([&](Vertex w) { adj_[w].erase(v); });
  edge_count_ -= adj_[v].size();
  adj_[v] = VertexSet(n_);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> ids = keep.to_vector();
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(ids.size()));
  for (Vertex u : ids)
    (adj_[u] & keep).for_each([&](Vertex v) {
      if (u < v) out.add_edge(index[u], index[v]);
    });
  return out;
}

bool Matching::is_valid(int n) const {
  std::vector<bool> used(n, false);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

bool Matching::is_valid_in(const Graph& g) const {
  if (!is_valid(g.order())) return false;
  return std::all_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

ColoredGraph::ColoredGraph(int n, Color fill) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw RangeError("vertex count out of range");
  colors_.assign(static_cast<std::size_t>(choose2(n)), fill);
}

std::map<Color, std::vector<Edge>> ColoredGraph::color_classes() const {
  std::map<Color, std::vector<Edge>> classes;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) classes[color(u, v)].emplace_back(u, v);
  return classes;
}

std::size_t ColoredGraph::color_count() const {
  std::vector<Color> sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Color ColoredGraph::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

std::size_t ColorCensus::total_edges() const {
  std::size_t total = 0;
  for (const auto& [c, k] : counts) total += k;
  return total;
}

ColorCensus color_census(const ColoredGraph& g) {
  ColorCensus census;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) ++census.counts[g.color(u, v)];
  return census;
}

InducedColoredGraph induced(const ColoredGraph& g, std::span<const Vertex> keep) {
  if (keep.empty()) throw RangeError("induced: empty vertex set");
  std::vector<Vertex> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.front() < 0 || ids.back() >= g.order())
    throw RangeError("induced: vertex id out of range");
  InducedColoredGraph out{ColoredGraph(static_cast<int>(ids.size()), 0), ids};
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      out.graph.set_color(static_cast<Vertex>(i), static_cast<Vertex>(j),
                          g.color(ids[i], ids[j]));
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::int64_t parse_int(const Token& tok, std::size_t line_no, std::int64_t max) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError(line_no, tok.column,
                     "expected a non-negative integer, got '" +
                         std::string(tok.text) + "'");
  if (value < 0 || value > max)
    throw ParseError(line_no, tok.column,
                     "value " + std::string(tok.text) + " out of range");
  return value;
}

// Shared reader for `cg 1` and `g 1` documents. `on_edge` receives the
// parsed fields of each `e` line.
template <typename OnHeader, typename OnEdge>
void read_document(std::string_view text, std::string_view magic,
                   std::size_t edge_fields, OnHeader&& on_header,
                   OnEdge&& on_edge) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  int stage = 0;  // 0: expect magic, 1: expect n, 2: edges
  std::int64_t n = 0;
  std::size_t last_line = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;
    if (stage == 0) {
      if (tokens.size() != 2 || tokens[0].text != magic)
        throw ParseError(line_no, 1,
                         "expected header '" + std::string(magic) + " 1'");
      if (tokens[1].text != "1")
        throw ParseError(line_no, tokens[1].column,
                         "unsupported version '" + std::string(tokens[1].text) +
                             "'");
      stage = 1;
    } else if (stage == 1) {
      if (tokens.size() != 2 || tokens[0].text != "n")
        throw ParseError(line_no, 1, "expected 'n <count>'");
      n = parse_int(tokens[1], line_no, kMaxVertices);
      on_header(static_cast<int>(n));
      stage = 2;
    } else {
      if (tokens[0].text != "e")
        throw ParseError(line_no, tokens[0].column,
                         "unknown record '" + std::string(tokens[0].text) + "'");
      if (tokens.size() != edge_fields + 1)
        throw ParseError(line_no, 1,
                         "expected " + std::to_string(edge_fields) +
                             " fields after 'e'");
      std::int64_t u = parse_int(tokens[1], line_no, std::numeric_limits<int>::max());
      std::int64_t v = parse_int(tokens[2], line_no, std::numeric_limits<int>::max());
      if (u >= n) throw ParseError(line_no, tokens[1].column, "vertex id out of range");
      if (v >= n) throw ParseError(line_no, tokens[2].column, "vertex id out of range");
      if (u >= v)
        throw ParseError(line_no, tokens[1].column, "edge must satisfy u < v");
      on_edge(line_no, tokens, static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (end == text.size()) break;
  }
  if (stage < 2)
    throw ParseError(last_line + 1, 0, "truncated document: missing header");
}

}  // namespace

ColoredGraph parse_colored_graph(std::string_view text) {
  ColoredGraph g;
  std::vector<bool> seen;
  read_document(
      text, "cg", 3,
      [&](int n) {
        g = ColoredGraph(n, 0);
        seen.assign(g.pair_count(), false);
      },
      [&](std::size_t line_no, const std::vector<Token>& tokens, Vertex u, Vertex v) {
        auto c = parse_int(tokens[3], line_no, std::numeric_limits<Color>::max());
        auto rank = ColoredGraph::pair_rank(u, v);
        if (seen[rank])
          throw ParseError(line_no, 1,
                           "duplicate pair " + std::to_string(u) + " " +
                               std::to_string(v));
        seen[rank] = true;
        g.set_color(u, v, static_cast<Color>(c));
      });
  auto missing = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), false));
  if (missing != 0)
    throw ParseError(0, 0,
                     "incomplete coloring: " + std::to_string(missing) +
                         " pair(s) missing");
  return g;
}

std::string serialize(const ColoredGraph& g) {
  std::ostringstream out;
  out << "cg 1\nn " << g.order() << '\n';
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      out << "e " << u << ' ' << v << ' ' << g.color(u, v) << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  Graph g;
  read_document(
      text, "g", 2, [&](int n) { g = Graph(n); },
      [&](std::size_t line_no, const std::vector<Token>&, Vertex u, Vertex v) {
        if (g.has_edge(u, v))
          throw ParseError(line_no, 1,
                           "duplicate edge " + std::to_string(u) + " " +
                               std::to_string(v));
        g.add_edge(u, v);
      });
  return g;
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "g 1\nn " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
}  // namespace

ColoredGraph read_colored_graph_file(const std::string& path) {
  return parse_colored_graph(slurp(path));
}

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

}  // namespace arkit
