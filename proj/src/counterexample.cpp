#include "kconn/counterexample.hpp"

#include <charconv>

#include "kconn/bounds.hpp"

namespace kconn {

std::vector<std::size_t> balanced_sequence(std::size_t tau) {
  std::vector<std::size_t> s;
  s.reserve(tau * tau);
  for (std::size_t rep = 0; rep < tau; ++rep)
    for (std::size_t j = 1; j <= tau; ++j) s.push_back(j);
  return s;
}

CounterexampleInstance generate(std::size_t k) {
  if (k == 0) throw InadmissibleK("k must be positive");
  const std::size_t tau = ceil_sqrt(2 * k - 1);
  if (2 * tau > k)
    throw InadmissibleK("k=" + std::to_string(k) + " is not admissible: tau=" + std::to_string(tau) +
                        " exceeds k/2; the construction assumes tau in (0, k/2]");

  CounterexampleInstance inst;
  inst.k = k;
  inst.tau = tau;
  inst.n = 5 * k - 2 * tau - 3;
  const std::size_t n = inst.n;

  const auto s = balanced_sequence(tau);
  // 1-based access s_j.
  auto at = [&](std::size_t j) { return s.at(j - 1); };
  if (s.size() < 2 * k - 1) throw std::logic_error("index sequence shorter than 2k-1");
  for (std::size_t i = 1; i + 1 <= k; ++i)
    if (at(2 * i - 1) == at(2 * i)) throw std::logic_error("index sequence repeats within a pair");

  inst.labels.resize(n);
  for (std::size_t i = 1; i <= k; ++i) inst.labels[inst.a(i)] = "a_" + std::to_string(i);
  for (std::size_t j = 1; j + 1 <= k; ++j) {
    inst.labels[inst.a_l(j)] = "a_l^" + std::to_string(j);
    inst.labels[inst.c_l(j)] = "c_l^" + std::to_string(j);
  }
  for (std::size_t j = 1; j <= 2 * k - 2 * tau - 1; ++j) inst.labels[inst.d_l(j)] = "d_l^" + std::to_string(j);

  VertexSet alu(n);
  for (std::size_t j = 1; j <= tau; ++j) alu.insert(inst.a_l(j));
  VertexSet dlu(n);
  for (std::size_t j = 1; j <= k - tau; ++j) dlu.insert(inst.d_l(j));

  const VertexSet all = VertexSet::full(n);
  for (std::size_t i = 1; i <= k; ++i) {
    Triple t{VertexSet(n, {inst.a(i)}), VertexSet(n), VertexSet(n)};
    t.c = alu | dlu;
    if (i < k) {
      t.c.erase(inst.a_l(at(2 * i - 1)));
      t.c.erase(inst.a_l(at(2 * i)));
      t.c.insert(inst.c_l(i));
    } else {
      t.c.erase(inst.a_l(at(2 * k - 1)));
    }
    const VertexSet rest = i == 1 ? all : inst.triples.back().c | inst.triples.back().d;
    t.d = rest - t.a - t.c;
    inst.triples.push_back(std::move(t));
  }
  Triple last{VertexSet(n), VertexSet(n), VertexSet(n)};
  for (std::size_t j = 1; j + 1 <= k; ++j) {
    last.a.insert(inst.a_l(j));
    last.c.insert(inst.c_l(j));
  }
  for (std::size_t j = 1; j <= 2 * k - 2 * tau - 1; ++j) last.d.insert(inst.d_l(j));
  inst.triples.push_back(std::move(last));

  inst.coloring = EdgeColoring(n, Color::Red);
  for (const auto& t : inst.triples)
    t.a.for_each([&](Vertex x) { t.d.for_each([&](Vertex y) { inst.coloring.set(x, y, Color::Blue); }); });
  return inst;
}

Decomposition red_certificate(const CounterexampleInstance& inst) {
  return Decomposition{inst.k, 2 * inst.k - 2, inst.n, inst.triples};
}

PeelingCertificate blue_certificate(const CounterexampleInstance& inst) {
  PeelingCertificate cert{inst.k, {}};
  for (std::size_t j = 1; j + 1 <= inst.k; ++j) cert.sequence.push_back(inst.c_l(j));
  for (std::size_t j = 1; j <= inst.k - inst.tau; ++j) cert.sequence.push_back(inst.d_l(j));
  for (std::size_t j = 1; j <= inst.tau; ++j) cert.sequence.push_back(inst.a_l(j));
  return cert;
}

PeelingVerdict verify_peeling(const EdgeColoring& c, Color color, const PeelingCertificate& cert) {
  VertexSet remaining = VertexSet::full(c.n());
  for (Vertex v : cert.sequence) {
    if (v >= c.n()) throw std::invalid_argument("peeling entry " + std::to_string(v) + " out of range");
    if (!remaining.contains(v)) throw std::invalid_argument("peeling entry " + std::to_string(v) + " repeated");
    remaining.erase(v);
  }
  remaining = VertexSet::full(c.n());
  for (std::size_t x = 0; x < cert.sequence.size(); ++x) {
    const Vertex u = cert.sequence[x];
    remaining.erase(u);
    std::size_t degree = 0;
    remaining.for_each([&](Vertex w) { degree += c.color(u, w) == color ? 1 : 0; });
    if (degree + 1 > cert.k) return PeelingFail{x + 1, degree};
  }
  return PeelingOk{c.n() - cert.sequence.size()};
}

namespace {

std::size_t parse_index(std::string_view digits, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError(line, "invalid integer '" + std::string(digits) + "'");
  return value;
}

}  // namespace

PeelingCertificate parse_peeling(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != "kpeel 1") throw ParseError(1, "expected header 'kpeel 1'");
  if (lines.size() < 2 || !lines[1].starts_with("k ")) throw ParseError(2, "expected 'k <K>'");
  if (lines.size() != 3) throw ParseError(3, "expected 'seq <indices>' as the last line");
  if (lines[2] != "seq" && !lines[2].starts_with("seq ")) throw ParseError(3, "expected 'seq <indices>'");
  PeelingCertificate cert{parse_index(lines[1].substr(2), 2), {}};
  std::string_view rest = lines[2].size() > 4 ? lines[2].substr(4) : std::string_view{};
  while (!rest.empty()) {
    std::size_t space = rest.find(' ');
    cert.sequence.push_back(parse_index(rest.substr(0, space), 3));
    rest = space == std::string_view::npos ? std::string_view{} : rest.substr(space + 1);
  }
  return cert;
}

std::string serialize_peeling(const PeelingCertificate& cert) {
  std::string out = "kpeel 1\nk " + std::to_string(cert.k) + "\nseq";
  for (Vertex v : cert.sequence) out += " " + std::to_string(v);
  return out + "\n";
}

std::string serialize_labels(const std::vector<std::string>& labels) {
  std::string out = "klabels 1\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out += std::to_string(i) + " " + labels[i] + "\n";
  return out;
}

std::vector<std::string> parse_labels(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != "klabels 1") throw ParseError(1, "expected header 'klabels 1'");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto space = lines[i].find(' ');
    if (space == std::string_view::npos) throw ParseError(i + 1, "expected 'index name'");
    if (parse_index(lines[i].substr(0, space), i + 1) != labels.size())
      throw ParseError(i + 1, "label indices must be consecutive from 0");
    labels.emplace_back(lines[i].substr(space + 1));
  }
  return labels;
}

}  // namespace kconn
