// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kconn/bounds.hpp"
#include "kconn/cli.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/counterexample.hpp"
#include "kconn/decomposition.hpp"
#include "oracles.hpp"

using namespace kconn;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string result;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  std::string text = out.str();
  std::string last;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) last = line;
  return {code, text, last};
}

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

using Seconds = std::chrono::duration<double>;

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
  c.expect(elapsed < limit_seconds, "runtime " + std::to_string(elapsed) + "s exceeds " + std::to_string(limit_seconds) + "s");
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "PASS " : "FAIL ") << id << " " << name << " (" << elapsed << " s)";
  if (!c.detail.empty()) std::cout << " -- " << c.detail;
  std::cout << std::endl;
}

std::vector<std::size_t> residual_degrees(const EdgeColoring& c, Color color, const std::vector<Vertex>& seq) {
  std::vector<std::size_t> out;
  VertexSet left = VertexSet::full(c.n());
  for (Vertex u : seq) {
    left.erase(u);
    std::size_t d = 0;
    left.for_each([&](Vertex w) { d += c.color(u, w) == color; });
    out.push_back(d);
  }
  return out;
}

void certificate_identities(Check& c, std::size_t k) {
  const std::string tag = "k=" + std::to_string(k) + ": ";
  auto inst = generate(k);
  const std::size_t tau = ceil_sqrt(2 * k - 1);
  c.expect(inst.tau == tau, tag + "tau");
  c.expect(inst.n == 5 * k - 2 * tau - 3, tag + "n = 5k - 2tau - 3");
  auto d = red_certificate(inst);
  c.expect(d.length() == k + 1, tag + "l = k + 1");
  c.expect(d.f == 2 * k - 2, tag + "f = 2k - 2");
  for (std::size_t i = 0; i < d.length(); ++i)
    c.expect(d.triples[i].c.size() == k - 1, tag + "|C_" + std::to_string(i + 1) + "| = k - 1");
  c.expect(d.triples[k].d.size() == 2 * k - 2 * tau - 1, tag + "|D_{k+1}| = 2k - 2tau - 1");
  auto red = monochromatic_view(inst.coloring, Color::Red);
  auto verdict = verify_decomposition(red, d, true);
  c.expect(verdict.ok(), tag + "red certificate is a strong decomposition");
  c.expect(largest_piece(d) < inst.target(), tag + "max |A_i|+|C_i| < n - 2k + 2");
  auto cert = blue_certificate(inst);
  c.expect(cert.sequence.size() == 2 * k - 1, tag + "peeling length 2k - 1");
  auto peel = verify_peeling(inst.coloring, Color::Blue, cert);
  c.expect(std::holds_alternative<PeelingOk>(peel), tag + "peeling accepted");
  for (std::size_t deg : residual_degrees(inst.coloring, Color::Blue, cert.sequence))
    c.expect(deg <= k - 1, tag + "residual degree " + std::to_string(deg) + " > k - 1");
}

}  // namespace

int main() {
  std::cout << std::boolalpha;

  criterion(1, "counterexample k=8 certificates (gen + verify-counterexample)", 5.0, [](Check& c) {
    auto path = std::filesystem::temp_directory_path() / "kconn_acceptance_ce8.kcoloring";
    auto gen = cli_run({"gen", "--k", "8", "--out", path.string()});
    c.expect(gen.code == 0 && gen.result == "RESULT ok n=29 tau=4", "gen: " + gen.result);
    auto verify = cli_run({"verify-counterexample", "--k", "8", "--mode", "certificates", "--in", path.string()});
    c.expect(verify.code == 0 && verify.result == "RESULT verified red_bound=14 blue_bound=14 target=15",
             "verify: " + verify.result);

    auto inst = generate(8);
    auto d = red_certificate(inst);
    c.expect(d.length() == 9, "l = 9");
    for (const auto& t : d.triples) c.expect(t.c.size() == 7, "|C_i| = 7");
    for (std::size_t i = 0; i < 8; ++i)
      c.expect(d.triples[i].a.size() + d.triples[i].c.size() == 8, "|A_i|+|C_i| = 8 for i <= 8");
    c.expect(d.triples[8].a.size() + d.triples[8].c.size() == 14, "|A_9|+|C_9| = 14");
    c.expect(verify_decomposition(monochromatic_view(inst.coloring, Color::Red), d, true).ok(), "strong");
    auto cert = blue_certificate(inst);
    c.expect(cert.sequence.size() == 15, "peeling length 15");
    for (std::size_t deg : residual_degrees(inst.coloring, Color::Blue, cert.sequence))
      c.expect(deg <= 7, "residual degree <= 7");
  });

  criterion(2, "exact refutation k=8 (verify-counterexample --mode exact)", 600.0, [](Check& c) {
    auto run = cli_run({"verify-counterexample", "--k", "8", "--mode", "exact", "--budget-seconds", "600"});
    c.expect(run.code == 0 && run.result.starts_with("RESULT verified"), "cli: " + run.result);
    auto inst = generate(8);
    auto red = monochromatic_view(inst.coloring, Color::Red);
    auto blue = monochromatic_view(inst.coloring, Color::Blue);
    auto red_max = max_k_connected_subgraph(red, 8);
    auto core = k_core(blue, 8);
    c.expect(red_max.order <= 14, "red max order " + std::to_string(red_max.order));
    c.expect(core.size() <= 14, "blue 8-core order " + std::to_string(core.size()));
    c.expect(red_max.order < 15 && core.size() < 15, "both below n - 2k + 2 = 15");
  });

  criterion(3, "certificates for k in {10, 11, 12, 16, 20}", 30.0, [](Check& c) {
    for (std::size_t k : {10, 11, 12, 16, 20}) {
      certificate_identities(c, k);
      auto run = cli_run({"verify-counterexample", "--k", std::to_string(k), "--mode", "certificates"});
      c.expect(run.code == 0 && run.result.starts_with("RESULT verified"), "cli k=" + std::to_string(k));
    }
  });

  criterion(4, "all colorings of K_5 and K_6 hold a monochromatic 2-connected subgraph on n-2 vertices", 300.0,
            [](Check& c) {
              auto five = cli_run({"oracle", "--mode", "colorings", "--n", "5", "--k", "2"});
              c.expect(five.code == 0 && five.result.starts_with("RESULT verified") &&
                           five.result.find("target=3 colorings=1024") != std::string::npos,
                       "n=5: " + five.result);
              auto six = cli_run({"oracle", "--mode", "colorings", "--n", "6", "--k", "2"});
              c.expect(six.code == 0 && six.result.starts_with("RESULT verified") &&
                           six.result.find("target=4 colorings=32768") != std::string::npos,
                       "n=6: " + six.result);
              c.expect(thresholds(2).n_guaranteed == 5, "5k - lambda(2) = 5");
            });

  criterion(5, "solver and k-connectivity agree with exhaustive oracles", 300.0, [](Check& c) {
    std::mt19937_64 rng(20240601);
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 240; ++trial) {
      std::size_t n = 6 + rng() % 7;
      std::size_t k = 2 + rng() % 3;
      auto g = testing::random_graph(n, 0.35 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
      if (max_k_connected_subgraph(g, k).order != oracle_max_k_connected(g, k).order) ++mismatches;
    }
    c.expect(mismatches == 0, std::to_string(mismatches) + " solver mismatches");
    std::size_t conn_mismatches = 0;
    for (int trial = 0; trial < 240; ++trial) {
      std::size_t n = 1 + rng() % 10;
      auto g = testing::random_graph(n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
      for (std::size_t k = 1; k <= n; ++k)
        if (is_k_connected(g, k) != brute_force_is_k_connected(g, k)) ++conn_mismatches;
    }
    c.expect(conn_mismatches == 0, std::to_string(conn_mismatches) + " k-connectivity mismatches");
  });

  criterion(6, "greedy decompositions verify; strong decompositions bound the oracle", 300.0, [](Check& c) {
    std::mt19937_64 rng(777);
    std::size_t violations = 0;
    std::size_t strong_seen = 0;
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t n = 5 + rng() % 8;
      auto g = testing::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
      std::size_t k = 1 + rng() % 3;
      std::size_t f = rng() % (n - k);  // n - f > k
      auto outcome = greedy_decompose(g, k, f);
      if (auto* found = std::get_if<FoundSubgraph>(&outcome)) {
        if (found->vertices.size() < n - f || !is_k_connected(induced_subgraph(g, found->vertices), k)) ++violations;
        continue;
      }
      const auto& d = std::get<Decomposition>(outcome);
      if (!verify_decomposition(g, d, false).ok()) ++violations;
      if (implies_no_large_subgraph(g, d)) {
        ++strong_seen;
        if (oracle_max_k_connected(g, k).order >= n - f) ++violations;
      }
    }
    // Supplied strong decompositions: disjoint cliques peeled one at a time.
    for (std::size_t pieces = 2; pieces <= 4; ++pieces) {
      std::size_t size = 3;
      std::size_t n = pieces * size;
      SimpleGraph g(n);
      for (std::size_t p = 0; p < pieces; ++p)
        for (Vertex u = p * size; u < (p + 1) * size; ++u)
          for (Vertex v = u + 1; v < (p + 1) * size; ++v) g.add_edge(u, v);
      // f = n - 4: stop once fewer than 4 vertices remain.
      Decomposition d{2, n - 4, n, {}};
      VertexSet rest = VertexSet::full(n);
      for (std::size_t p = 0; p + 1 < pieces; ++p) {
        VertexSet a(n);
        for (Vertex v = p * size; v < (p + 1) * size; ++v) a.insert(v);
        rest -= a;
        d.triples.push_back({a, VertexSet(n), rest});
      }
      bool strong = implies_no_large_subgraph(g, d);
      c.expect(strong, "supplied decomposition with " + std::to_string(pieces) + " cliques is strong");
      ++strong_seen;
      if (oracle_max_k_connected(g, 2).order >= n - d.f) ++violations;
    }
    c.expect(violations == 0, std::to_string(violations) + " violations");
    c.expect(strong_seen > 0, "no strong decompositions exercised");
  });

  criterion(7, "threshold table for k in [1, 10^4]", 1.0, [](Check& c) {
    std::set<std::int64_t> exceptions;
    bool positive = true;
    bool never_square = true;
    for (std::int64_t k = 1; k <= 10000; ++k) {
      auto t = thresholds(k);
      const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * k - 2)));
      if (t.lambda != root + 3) exceptions.insert(k);
      positive = positive && (4 * k - t.lambda * t.lambda + 6 * t.lambda - 11 > 0);
      never_square = never_square && root * root != 4 * k - 2;
    }
    c.expect(exceptions == std::set<std::int64_t>{3, 5, 7}, "lambda exception set");
    c.expect(positive, "4k - lambda^2 + 6 lambda - 11 > 0");
    c.expect(never_square, "4k - 2 is never a perfect square");
  });

  criterion(8, "classifier goldens", 5.0, [](Check& c) {
    const std::vector<std::tuple<int, int, std::string>> goldens = {
        {28, 8, "RESULT no_guarantee"},          {29, 8, "RESULT counterexample_exists"},
        {30, 8, "RESULT open"},                  {32, 8, "RESULT guaranteed"},
        {37, 10, "RESULT counterexample_exists"}, {40, 10, "RESULT conjectured_guaranteed"},
        {41, 10, "RESULT guaranteed"},
    };
    for (const auto& [n, k, expected] : goldens) {
      auto run = cli_run({"classify", "--n", std::to_string(n), "--k", std::to_string(k)});
      c.expect(run.code == 0 && run.result == expected,
               "(" + std::to_string(n) + "," + std::to_string(k) + ") gave '" + run.result + "'");
    }
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
