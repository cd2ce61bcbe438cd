#include "kconn/decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

#include "kconn/connectivity.hpp"

namespace kconn {

DecomposeOutcome greedy_decompose(const SimpleGraph& g, std::size_t k, std::size_t f) {
  const std::size_t n = g.order();
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (n < f + k)
    throw std::invalid_argument("decomposition needs n >= f + k (n=" + std::to_string(n) +
                                ", f=" + std::to_string(f) + ", k=" + std::to_string(k) + ")");
  // At n - f == k the remainder may be K_k: no small cut, yet not k-connected.
  if (n - f <= k)
    throw std::invalid_argument("decomposition needs n - f > k (n=" + std::to_string(n) +
                                ", f=" + std::to_string(f) + ", k=" + std::to_string(k) + ")");

  Decomposition d{k, f, n, {}};
  SimpleGraph current = g;
  while (current.order() >= n - f) {
    auto cut = find_small_cut(current, k);
    if (!cut) return FoundSubgraph{current.vertices()};
    Triple t{cut->side_a, cut->separator, cut->side_b};
    current = induced_subgraph(current, t.c | t.d);
    d.triples.push_back(std::move(t));
  }
  return d;
}

namespace {

VertexSet rebase(const SimpleGraph& g, const VertexSet& s) {
  VertexSet out(g.universe());
  s.for_each([&](Vertex v) {
    if (!g.has_vertex(v))
      throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
    out.insert(v);
  });
  return out;
}

std::string sizes(std::size_t lhs, const char* op, std::int64_t rhs) {
  return std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

void check_partition(const VertexSet& whole, const Triple& t, Clause clause, std::size_t index,
                     std::vector<Violation>& out) {
  if (t.a.intersects(t.c) || t.a.intersects(t.d) || t.c.intersects(t.d))
    out.push_back({clause, index, "sets of the triple overlap"});
  if ((t.a | t.c | t.d) != whole)
    out.push_back({clause, index, "triple does not cover exactly the expected vertex set"});
}

}  // namespace

Verdict verify_decomposition(const SimpleGraph& g, const Decomposition& d, bool strong) {
  if (d.n != g.order())
    throw std::invalid_argument("decomposition is for n=" + std::to_string(d.n) +
                                " but the graph has " + std::to_string(g.order()) + " vertices");
  std::vector<Triple> triples;
  for (const auto& t : d.triples) {
    Triple local;
    local.a = rebase(g, t.a);
    local.c = rebase(g, t.c);
    local.d = rebase(g, t.d);
    triples.push_back(std::move(local));
  }

  Verdict v;
  auto& out = v.violations;
  if (triples.empty()) {
    out.push_back({Clause::Cover, 1, "decomposition has no triples"});
    return v;
  }
  const std::int64_t remaining = static_cast<std::int64_t>(d.n) - static_cast<std::int64_t>(d.f);
  const std::size_t l = triples.size();
  for (std::size_t i = 0; i < l; ++i) {
    const Triple& t = triples[i];
    const std::size_t idx = i + 1;
    if (i == 0)
      check_partition(g.vertices(), t, Clause::Cover, idx, out);
    else
      check_partition(triples[i - 1].c | triples[i - 1].d, t, Clause::Nested, idx, out);

    if (t.c.size() + 1 > d.k) out.push_back({Clause::CutSize, idx, sizes(t.c.size(), ">", std::int64_t(d.k) - 1)});

    if (t.a.empty()) out.push_back({Clause::Separated, idx, "A is empty"});
    if (t.a.size() > t.d.size()) out.push_back({Clause::Separated, idx, "|A| = " + sizes(t.a.size(), "> |D| =", std::int64_t(t.d.size()))});
    bool edge = false;
    t.a.for_each([&](Vertex x) { edge = edge || g.neighbors(x).intersects(t.d); });
    if (edge) out.push_back({Clause::Separated, idx, "an edge joins A and D"});

    const auto rest = static_cast<std::int64_t>(t.c.size() + t.d.size());
    if (i + 1 < l && rest < remaining)
      out.push_back({Clause::StaysLarge, idx, "|C| + |D| = " + sizes(t.c.size() + t.d.size(), "< n - f =", remaining)});
    if (i + 1 == l && rest >= remaining)
      out.push_back({Clause::EndsSmall, idx, "|C| + |D| = " + sizes(t.c.size() + t.d.size(), ">= n - f =", remaining)});

    if (strong && static_cast<std::int64_t>(t.a.size() + t.c.size()) >= remaining)
      out.push_back({Clause::Strong, idx, "|A| + |C| = " + sizes(t.a.size() + t.c.size(), ">= n - f =", remaining)});
  }
  return v;
}

EdgePartition edge_partition(const SimpleGraph& g, const Decomposition& d) {
  if (!verify_decomposition(g, d, false).ok())
    throw std::invalid_argument("edge partition needs a valid decomposition");
  EdgePartition p;
  for (auto [u, v] : g.edges()) {
    bool placed = false;
    for (const auto& t : d.triples) {
      bool ua = t.a.contains(u);
      bool va = t.a.contains(v);
      if (!ua && !va) continue;
      if (ua && va)
        p.within_a.emplace_back(u, v);
      else
        p.a_to_cut.emplace_back(u, v);
      placed = true;
      break;
    }
    if (!placed) p.remainder.emplace_back(u, v);
  }
  return p;
}

bool implies_no_large_subgraph(const SimpleGraph& g, const Decomposition& d) {
  try {
    return verify_decomposition(g, d, true).ok();
  } catch (const std::exception&) {
    return false;
  }
}

std::size_t largest_piece(const Decomposition& d) {
  std::size_t best = 0;
  for (const auto& t : d.triples) best = std::max(best, t.a.size() + t.c.size());
  return best;
}

namespace {

std::size_t parse_number(std::string_view digits, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError(line, "invalid integer '" + std::string(digits) + "'");
  return value;
}

std::size_t parse_keyed(std::string_view line, std::string_view key, std::size_t line_no) {
  std::string prefix = std::string(key) + " ";
  if (!line.starts_with(prefix)) throw ParseError(line_no, "expected '" + std::string(key) + " <value>'");
  return parse_number(line.substr(prefix.size()), line_no);
}

VertexSet parse_list(std::string_view line, char tag, std::size_t n, std::size_t line_no) {
  if (line.empty() || line[0] != tag || (line.size() > 1 && line[1] != ' '))
    throw ParseError(line_no, std::string("expected '") + tag + " <indices>'");
  VertexSet s(n);
  std::string_view rest = line.size() > 1 ? line.substr(2) : std::string_view{};
  while (!rest.empty()) {
    std::size_t space = rest.find(' ');
    std::string_view token = rest.substr(0, space);
    std::size_t v = parse_number(token, line_no);
    if (v >= n) throw ParseError(line_no, "index " + std::to_string(v) + " out of range");
    if (s.contains(v)) throw ParseError(line_no, "duplicate index " + std::to_string(v));
    s.insert(v);
    rest = space == std::string_view::npos ? std::string_view{} : rest.substr(space + 1);
  }
  return s;
}

void append_list(std::string& out, char tag, const VertexSet& s) {
  out += tag;
  if (!s.empty()) out += " " + s.to_string();
  out += '\n';
}

}  // namespace

Decomposition parse_decomposition(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != "kdecomp 1") throw ParseError(1, "expected header 'kdecomp 1'");
  if (lines.size() < 5) throw ParseError(lines.size() + 1, "truncated header");
  Decomposition d;
  d.k = parse_keyed(lines[1], "k", 2);
  d.f = parse_keyed(lines[2], "f", 3);
  d.n = parse_keyed(lines[3], "n", 4);
  std::size_t l = parse_keyed(lines[4], "l", 5);
  if (lines.size() != 5 + 3 * l)
    throw ParseError(std::min(lines.size(), 5 + 3 * l) + 1,
                     "expected " + std::to_string(3 * l) + " set lines");
  for (std::size_t i = 0; i < l; ++i) {
    std::size_t base = 5 + 3 * i;
    Triple t;
    t.a = parse_list(lines[base], 'A', d.n, base + 1);
    t.c = parse_list(lines[base + 1], 'C', d.n, base + 2);
    t.d = parse_list(lines[base + 2], 'D', d.n, base + 3);
    d.triples.push_back(std::move(t));
  }
  return d;
}

std::string serialize_decomposition(const Decomposition& d) {
  std::string out = "kdecomp 1\nk " + std::to_string(d.k) + "\nf " + std::to_string(d.f) +
                    "\nn " + std::to_string(d.n) + "\nl " + std::to_string(d.triples.size()) + "\n";
  for (const auto& t : d.triples) {
    append_list(out, 'A', t.a);
    append_list(out, 'C', t.c);
    append_list(out, 'D', t.d);
  }
  return out;
}

std::string describe(const Violation& v) {
  return "clause " + std::to_string(static_cast<int>(v.clause)) + " at i=" +
         std::to_string(v.index) + ": " + v.detail;
}

}  // namespace kconn
