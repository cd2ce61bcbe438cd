#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

struct Triple {
  VertexSet a;
  VertexSet c;
  VertexSet d;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// An (f, k)-decomposition: triples (A_i, C_i, D_i), i = 1..l, that peel a
/// small piece A_i off the remaining graph C_{i-1} u D_{i-1} through a cut C_i
/// of size below k, stopping once fewer than n - f vertices remain.
struct Decomposition {
  std::size_t k = 0;
  std::size_t f = 0;
  std::size_t n = 0;
  std::vector<Triple> triples;

  std::size_t length() const { return triples.size(); }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Vertex set of a k-connected subgraph of order >= n - f.
struct FoundSubgraph {
  VertexSet vertices;
};

using DecomposeOutcome = std::variant<Decomposition, FoundSubgraph>;

/// Repeatedly cuts the smallest component off the remaining graph. Returns
/// FoundSubgraph as soon as the remainder has no cut of size <= k-1.
///
/// Requires |g| >= f + k and |g| - f > k; throws std::invalid_argument otherwise.
DecomposeOutcome greedy_decompose(const SimpleGraph& g, std::size_t k, std::size_t f);

enum class Clause {
  Cover = 1,       // A_1, C_1, D_1 partition V(G)
  Nested = 2,      // A_{i+1}, C_{i+1}, D_{i+1} partition C_i u D_i
  CutSize = 3,     // |C_i| <= k-1
  Separated = 4,   // 1 <= |A_i| <= |D_i|, no A_i-D_i edge
  StaysLarge = 5,  // |C_i| + |D_i| >= n - f for i < l
  EndsSmall = 6,   // |C_l| + |D_l| < n - f
  Strong = 7,      // |A_i| + |C_i| < n - f
};

struct Violation {
  Clause clause;
  std::size_t index;  // 1-based triple index
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every decomposition clause against g, plus the strong condition when
/// `strong` is set. Throws std::out_of_range for ids outside g's vertex range
/// and std::invalid_argument if d.n != |g|.
Verdict verify_decomposition(const SimpleGraph& g, const Decomposition& d, bool strong);

struct EdgePartition {
  std::vector<Edge> within_a;   // both ends in some A_i
  std::vector<Edge> a_to_cut;   // one end in A_i, the other in C_i
  std::vector<Edge> remainder;  // both ends in C_l u D_l
};

/// Classifies each edge by the smallest i with an endpoint in A_i.
/// Throws std::invalid_argument if d is not a valid decomposition of g.
EdgePartition edge_partition(const SimpleGraph& g, const Decomposition& d);

/// True iff d is a valid strong decomposition of g, which certifies that g has
/// no k-connected subgraph with n - f or more vertices.
bool implies_no_large_subgraph(const SimpleGraph& g, const Decomposition& d);

/// Largest |A_i| + |C_i|; with a strong decomposition this bounds the order of
/// every k-connected subgraph.
std::size_t largest_piece(const Decomposition& d);

/// `kdecomp 1` text format.
Decomposition parse_decomposition(std::string_view text);
std::string serialize_decomposition(const Decomposition& d);

std::string describe(const Violation& v);

}  // namespace kconn
