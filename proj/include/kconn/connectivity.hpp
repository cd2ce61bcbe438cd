#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "kconn/graph.hpp"

namespace kconn {

struct LocalConnectivity {
  /// Maximum number of internally vertex-disjoint u-v paths.
  std::size_t count = 0;
  /// Minimum u-v separator; absent when u and v are adjacent.
  std::optional<VertexSet> separator;
};

/// Menger number of (u, v) via unit-capacity flow on the vertex-split graph.
///
/// For adjacent u, v the count is one more than the connectivity of g minus
/// the edge uv, and no separator is returned.
LocalConnectivity local_vertex_connectivity(const SimpleGraph& g, Vertex u, Vertex v);

/// True iff |g| > k and no set of at most k-1 vertices disconnects g.
bool is_k_connected(const SimpleGraph& g, std::size_t k);

struct CutResult {
  std::size_t size = 0;
  VertexSet separator;
  /// Smallest component of g - separator (ties broken by least member).
  VertexSet side_a;
  /// Every other vertex outside the separator.
  VertexSet side_b;
};

/// A vertex cut of size at most k-1, or nullopt if none exists.
///
/// A disconnected graph yields the empty cut. Otherwise non-adjacent pairs are
/// scanned in lexicographic order and the first minimum-size separator wins.
std::optional<CutResult> find_small_cut(const SimpleGraph& g, std::size_t k);

struct KConnReport {
  std::size_t order = 0;
  VertexSet witness;
};

/// Peels vertices of degree < k until none remain.
VertexSet k_core(const SimpleGraph& g, std::size_t k);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

using Deadline = std::chrono::steady_clock::time_point;

/// Exact maximum order of a k-connected subgraph of g, with a witness set.
///
/// Branch-and-reduce: a k-connected subgraph never straddles a cut of size
/// <= k-1, so it lies inside (component + cut) for some component. Branches
/// are first shrunk to their k-core and memoized on the vertex set.
KConnReport max_k_connected_subgraph(const SimpleGraph& g, std::size_t k);

/// Same as above but gives up with nullopt once the deadline passes.
std::optional<KConnReport> max_k_connected_subgraph(const SimpleGraph& g, std::size_t k,
                                                    Deadline deadline);

/// Largest graph the exhaustive oracle accepts.
inline constexpr std::size_t kOracleMaxOrder = 14;

/// k-connectivity by trying every vertex set of size <= k-1 as a cut.
/// Independent of the flow machinery; limited to kOracleMaxOrder vertices.
bool brute_force_is_k_connected(const SimpleGraph& g, std::size_t k);

/// Exhaustive maximum k-connected subgraph: all vertex subsets from largest
/// down, each checked with brute_force_is_k_connected.
KConnReport oracle_max_k_connected(const SimpleGraph& g, std::size_t k);

}  // namespace kconn
