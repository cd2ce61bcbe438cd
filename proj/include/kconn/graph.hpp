#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kconn/vertex_set.hpp"

namespace kconn {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph whose vertices are a subset of [0, universe).
///
/// Induced subgraphs keep the parent's vertex ids, so sets computed on a
/// subgraph can be used directly against the graph it came from.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Graph on vertex set [0, n) with no edges.
  explicit SimpleGraph(std::size_t n);
  /// Graph on the given vertex set with no edges.
  explicit SimpleGraph(VertexSet vertices);

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t universe() const { return vertices_.universe(); }
  const VertexSet& vertices() const { return vertices_; }
  std::size_t order() const { return vertices_.size(); }
  bool has_vertex(Vertex v) const { return vertices_.contains(v); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void require(Vertex v) const;

  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;
};

/// Subgraph of g induced by s. Throws std::out_of_range if s is not a subset of V(g).
SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s);

/// Connected components, ordered by least member.
std::vector<VertexSet> components(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

enum class Color : unsigned char { Red, Blue };

std::string_view to_string(Color c);
/// Accepts "red"/"blue" (any case) and "R"/"B".
Color parse_color(std::string_view text);

/// A red/blue coloring of every edge of K_n, stored as the dense upper triangle.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(std::size_t n, Color fill);

  std::size_t n() const { return n_; }
  Color color(Vertex u, Vertex v) const { return colors_[index(u, v)]; }
  void set(Vertex u, Vertex v, Color c) { colors_[index(u, v)] = c; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Color> colors_;
};

/// Spanning subgraph of K_n formed by the edges of one color.
SimpleGraph monochromatic_view(const EdgeColoring& c, Color color);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(message + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the `kcoloring 1` text format. CRLF line endings are accepted.
EdgeColoring parse_coloring(std::string_view text);
/// Canonical `kcoloring 1` text: LF endings, no trailing whitespace.
std::string serialize_coloring(const EdgeColoring& c);

namespace detail {
/// Splits text into lines with any trailing '\r' removed. A final newline
/// does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text);
}  // namespace detail

}  // namespace kconn
