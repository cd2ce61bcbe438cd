#include "kconn/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace kconn {

SimpleGraph::SimpleGraph(std::size_t n) : SimpleGraph(VertexSet::full(n)) {}

SimpleGraph::SimpleGraph(VertexSet vertices)
    : vertices_(std::move(vertices)),
      adjacency_(vertices_.universe(), VertexSet(vertices_.universe())) {}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void SimpleGraph::require(Vertex v) const {
  if (!vertices_.contains(v))
    throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  require(u);
  require(v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  require(u);
  require(v);
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  require(u);
  require(v);
  return adjacency_[u].contains(v);
}

const VertexSet& SimpleGraph::neighbors(Vertex v) const {
  require(v);
  return adjacency_[v];
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  vertices_.for_each([&](Vertex v) { twice += adjacency_[v].size(); });
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  vertices_.for_each([&](Vertex u) {
    adjacency_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  });
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
  VertexSet members(g.universe());
  s.for_each([&](Vertex v) {
    if (!g.has_vertex(v))
      throw std::out_of_range("vertex " + std::to_string(v) + " is not in the parent graph");
    members.insert(v);
  });
  SimpleGraph h(members);
  members.for_each([&](Vertex u) {
    (g.neighbors(u) & members).for_each([&](Vertex v) {
      if (u < v) h.add_edge(u, v);
    });
  });
  return h;
}

std::vector<VertexSet> components(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  std::vector<Vertex> stack;
  for (Vertex root = unseen.first(); root < g.universe(); root = unseen.first()) {
    VertexSet comp(g.universe());
    comp.insert(root);
    unseen.erase(root);
    stack.assign(1, root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      (g.neighbors(u) & unseen).for_each([&](Vertex v) {
        unseen.erase(v);
        comp.insert(v);
        stack.push_back(v);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return components(g).size() <= 1; }

std::string_view to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

Color parse_color(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "red" || lower == "r") return Color::Red;
  if (lower == "blue" || lower == "b") return Color::Blue;
  throw std::invalid_argument("unknown color '" + std::string(text) + "'");
}

EdgeColoring::EdgeColoring(std::size_t n, Color fill)
    : n_(n), colors_(n < 2 ? 0 : n * (n - 1) / 2, fill) {}

std::size_t EdgeColoring::index(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v)
    throw std::out_of_range("no edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} in K_" + std::to_string(n_));
  if (u > v) std::swap(u, v);
  // Row u holds n-1-u entries; rows 0..u-1 precede it.
  return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

SimpleGraph monochromatic_view(const EdgeColoring& c, Color color) {
  SimpleGraph g(c.n());
  for (Vertex u = 0; u < c.n(); ++u)
    for (Vertex v = u + 1; v < c.n(); ++v)
      if (c.color(u, v) == color) g.add_edge(u, v);
  return g;
}

namespace detail {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

}  // namespace detail

namespace {

std::size_t parse_count(std::string_view digits, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError(line, "invalid integer '" + std::string(digits) + "'");
  return value;
}

}  // namespace

EdgeColoring parse_coloring(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != "kcoloring 1") throw ParseError(1, "expected header 'kcoloring 1'");
  if (lines.size() < 2 || !lines[1].starts_with("n "))
    throw ParseError(2, "expected 'n <N>'");
  std::size_t n = parse_count(lines[1].substr(2), 2);
  if (n < 2) throw ParseError(2, "vertex count must be at least 2");
  if (lines.size() != n + 1)
    throw ParseError(std::min(lines.size(), n + 1) + 1,
                     "expected " + std::to_string(n - 1) + " color rows, found " +
                         std::to_string(lines.size() - 2));

  EdgeColoring c(n, Color::Red);
  for (Vertex i = 0; i + 1 < n; ++i) {
    std::size_t line_no = i + 3;
    std::string_view row = lines[i + 2];
    if (row.size() != n - 1 - i)
      throw ParseError(line_no, "row " + std::to_string(i) + " must have " +
                                    std::to_string(n - 1 - i) + " characters, found " +
                                    std::to_string(row.size()));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 'R')
        c.set(i, i + 1 + j, Color::Red);
      else if (row[j] == 'B')
        c.set(i, i + 1 + j, Color::Blue);
      else
        throw ParseError(line_no, "invalid color character");
    }
  }
  return c;
}

std::string serialize_coloring(const EdgeColoring& c) {
  std::string out = "kcoloring 1\nn " + std::to_string(c.n()) + "\n";
  for (Vertex i = 0; i + 1 < c.n(); ++i) {
    for (Vertex j = i + 1; j < c.n(); ++j) out += c.color(i, j) == Color::Red ? 'R' : 'B';
    out += '\n';
  }
  return out;
}

}  // namespace kconn
