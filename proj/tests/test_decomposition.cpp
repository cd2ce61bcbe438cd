#include <doctest.h>

#include <algorithm>
#include <random>

#include "kconn/connectivity.hpp"
#include "kconn/counterexample.hpp"
#include "kconn/decomposition.hpp"
#include "oracles.hpp"

using namespace kconn;

namespace {

SimpleGraph two_triangles() {
  return SimpleGraph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

Decomposition two_triangle_decomposition() {
  return {2, 2, 6, {{VertexSet(6, {0, 1, 2}), VertexSet(6), VertexSet(6, {3, 4, 5})}}};
}

bool has(const Verdict& v, Clause clause, std::size_t index) {
  return std::any_of(v.violations.begin(), v.violations.end(),
                     [&](const Violation& x) { return x.clause == clause && x.index == index; });
}

Decomposition decomposed(const DecomposeOutcome& outcome) {
  REQUIRE(std::holds_alternative<Decomposition>(outcome));
  return std::get<Decomposition>(outcome);
}

}  // namespace

TEST_CASE("greedy_decompose finds K_6 as a 2-connected subgraph") {
  auto outcome = greedy_decompose(SimpleGraph::complete(6), 2, 2);
  REQUIRE(std::holds_alternative<FoundSubgraph>(outcome));
  CHECK(std::get<FoundSubgraph>(outcome).vertices == VertexSet::full(6));
}

TEST_CASE("greedy_decompose splits two triangles through the empty cut") {
  auto d = decomposed(greedy_decompose(two_triangles(), 2, 2));
  CHECK(d == two_triangle_decomposition());
  CHECK(verify_decomposition(two_triangles(), d, false).ok());
}

TEST_CASE("greedy_decompose preconditions") {
  CHECK_THROWS_AS(greedy_decompose(SimpleGraph::complete(5), 3, 3), std::invalid_argument);  // n < f + k
  CHECK_THROWS_AS(greedy_decompose(SimpleGraph::complete(6), 3, 3), std::invalid_argument);  // n - f == k
  CHECK_THROWS_AS(greedy_decompose(SimpleGraph::complete(6), 0, 1), std::invalid_argument);
}

TEST_CASE("verify_decomposition reports violated clauses") {
  auto g = two_triangles();
  CHECK(verify_decomposition(g, two_triangle_decomposition(), false).ok());

  // Move vertices into C_1 so that |C_1| = 4 > k - 1.
  Decomposition bad = two_triangle_decomposition();
  bad.triples[0].c = VertexSet(6, {1, 2, 4, 5});
  bad.triples[0].a = VertexSet(6, {0});
  bad.triples[0].d = VertexSet(6, {3});
  auto v = verify_decomposition(g, bad, false);
  CHECK(has(v, Clause::CutSize, 1));
  CHECK_FALSE(implies_no_large_subgraph(g, bad));

  Decomposition overlap = two_triangle_decomposition();
  overlap.triples[0].c = VertexSet(6, {0});
  CHECK(has(verify_decomposition(g, overlap, false), Clause::Cover, 1));

  Decomposition joined = two_triangle_decomposition();
  auto g2 = g;
  g2.add_edge(0, 3);
  CHECK(has(verify_decomposition(g2, joined, false), Clause::Separated, 1));

  Decomposition unfinished = two_triangle_decomposition();
  unfinished.f = 3;  // |C_1| + |D_1| = 3 is not < n - f = 3
  CHECK(has(verify_decomposition(g, unfinished, false), Clause::EndsSmall, 1));

  CHECK_THROWS_AS(verify_decomposition(SimpleGraph::complete(5), two_triangle_decomposition(), false),
                  std::invalid_argument);
  Decomposition foreign = two_triangle_decomposition();
  foreign.triples[0].d = VertexSet(9, {3, 4, 8});
  CHECK_THROWS_AS(verify_decomposition(g, foreign, false), std::out_of_range);
}

TEST_CASE("strong condition") {
  auto g = two_triangles();
  auto d = two_triangle_decomposition();
  CHECK(verify_decomposition(g, d, true).ok());
  CHECK(implies_no_large_subgraph(g, d));
  CHECK(max_k_connected_subgraph(g, 2).order == 3);

  d.f = 3;  // n - f = 3: |A_1| + |C_1| = 3 is no longer strictly below
  auto v = verify_decomposition(g, d, true);
  CHECK(has(v, Clause::Strong, 1));
}

TEST_CASE("edge_partition small cases") {
  auto p = edge_partition(two_triangles(), two_triangle_decomposition());
  CHECK(p.within_a == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(p.a_to_cut.empty());
  CHECK(p.remainder == std::vector<Edge>{{3, 4}, {3, 5}, {4, 5}});

  auto path = SimpleGraph::from_edges(3, {{0, 1}});
  // f = 0: clause 6 needs |C_1| + |D_1| = 2 < n - f.
  Decomposition d{2, 0, 3, {{VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})}}};
  REQUIRE(verify_decomposition(path, d, false).ok());
  auto q = edge_partition(path, d);
  CHECK(q.within_a.empty());
  CHECK(q.a_to_cut == std::vector<Edge>{{0, 1}});
  CHECK(q.remainder.empty());

  Decomposition bad = d;
  bad.triples[0].c = VertexSet(3, {1, 2});
  bad.triples[0].d = VertexSet(3);
  CHECK_THROWS_AS(edge_partition(path, bad), std::invalid_argument);
}

TEST_CASE("kdecomp round trip and format") {
  auto d = two_triangle_decomposition();
  const std::string text = serialize_decomposition(d);
  CHECK(text == "kdecomp 1\nk 2\nf 2\nn 6\nl 1\nA 0 1 2\nC\nD 3 4 5\n");
  CHECK(parse_decomposition(text) == d);
  CHECK(parse_decomposition("kdecomp 1\nk 2\nf 2\nn 6\nl 1\nA 0 1 2\nC \nD 3 4 5\n") == d);
  CHECK_THROWS_AS(parse_decomposition("kdecomp 1\nk 2\nf 2\nn 6\nl 1\nA 0 1 9\nC\nD 3\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("kdecomp 1\nk 2\nf 2\nn 6\nl 2\nA 0\nC\nD 3\n"), ParseError);
}

TEST_CASE("greedy decompositions verify; partition properties hold; oracle confirms strong ones") {
  std::mt19937_64 rng(4242);
  int decomposed_count = 0;
  int strong_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 5 + rng() % 8;
    auto g = testing::random_graph(n, 0.2 + 0.6 * (rng() % 100) / 100.0, rng);
    std::size_t k = 1 + rng() % 3;
    std::size_t f_max = n - k - 1;  // keeps n - f > k
    std::size_t f = rng() % (f_max + 1);
    auto outcome = greedy_decompose(g, k, f);
    if (auto* found = std::get_if<FoundSubgraph>(&outcome)) {
      CHECK(found->vertices.size() >= n - f);
      CHECK(is_k_connected(induced_subgraph(g, found->vertices), k));
      continue;
    }
    ++decomposed_count;
    const auto& d = std::get<Decomposition>(outcome);
    CHECK(verify_decomposition(g, d, false).ok());

    // Prefix partition: A_1, ..., A_i, C_i, D_i cover V(g) disjointly.
    VertexSet prefix(g.universe());
    for (const auto& t : d.triples) {
      CHECK_FALSE(prefix.intersects(t.a));
      prefix |= t.a;
      CHECK((prefix | t.c | t.d) == g.vertices());
      CHECK(prefix.intersection_size(t.c | t.d) == 0);
    }
    CHECK(prefix.size() >= f + 1);

    auto p = edge_partition(g, d);
    std::vector<Edge> all = p.within_a;
    all.insert(all.end(), p.a_to_cut.begin(), p.a_to_cut.end());
    all.insert(all.end(), p.remainder.begin(), p.remainder.end());
    std::sort(all.begin(), all.end());
    CHECK(all == g.edges());

    if (implies_no_large_subgraph(g, d)) {
      ++strong_count;
      CHECK(oracle_max_k_connected(g, k).order < n - f);
    }
  }
  CHECK(decomposed_count > 50);
  CHECK(strong_count > 10);
}

TEST_CASE("greedy decomposition of the k=8 red view") {
  auto inst = generate(8);
  auto red = monochromatic_view(inst.coloring, Color::Red);
  auto d = decomposed(greedy_decompose(red, 8, 14));
  CHECK(verify_decomposition(red, d, false).ok());
  std::size_t total_a = 0;
  for (const auto& t : d.triples) total_a += t.a.size();
  CHECK(total_a >= 15);
}
