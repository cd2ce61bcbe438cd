#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kconn/decomposition.hpp"
#include "kconn/graph.hpp"

namespace kconn {

class InadmissibleK : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Red/blue coloring of K_n, n = 5k - 2tau - 3, with no monochromatic
/// k-connected subgraph on n - 2k + 2 or more vertices.
///
/// Vertex order is fixed: a_1..a_k, then a_l^1..a_l^{k-1}, c_l^1..c_l^{k-1},
/// and d_l^1..d_l^{2k-2tau-1}.
struct CounterexampleInstance {
  std::size_t k = 0;
  std::size_t tau = 0;
  std::size_t n = 0;
  EdgeColoring coloring;
  std::vector<std::string> labels;
  /// (A_i, C_i, D_i) for i = 1..k+1; an edge is blue iff it joins A_i and D_i.
  std::vector<Triple> triples;

  Vertex a(std::size_t i) const { return i - 1; }
  Vertex a_l(std::size_t j) const { return k + j - 1; }
  Vertex c_l(std::size_t j) const { return 2 * k - 1 + j - 1; }
  Vertex d_l(std::size_t j) const { return 3 * k - 2 + j - 1; }

  /// Guaranteed-absent order: n - 2k + 2.
  std::size_t target() const { return n - 2 * k + 2; }
};

/// The balanced index sequence 1..tau repeated tau times (1-based values).
std::vector<std::size_t> balanced_sequence(std::size_t tau);

/// Builds the instance; throws InadmissibleK when tau > k/2.
CounterexampleInstance generate(std::size_t k);

/// The construction's own triples as a strong (2k-2, k)-decomposition of the red view.
Decomposition red_certificate(const CounterexampleInstance& inst);

struct PeelingCertificate {
  std::size_t k = 0;
  std::vector<Vertex> sequence;

  friend bool operator==(const PeelingCertificate&, const PeelingCertificate&) = default;
};

/// c_l^1..c_l^{k-1}, d_l^1..d_l^{k-tau}, a_l^1..a_l^tau.
PeelingCertificate blue_certificate(const CounterexampleInstance& inst);

struct PeelingOk {
  /// Every subgraph of minimum degree >= k has at most this many vertices.
  std::size_t max_order_bound;
};
struct PeelingFail {
  std::size_t index;  // 1-based position in the sequence
  std::size_t residual_degree;
};
using PeelingVerdict = std::variant<PeelingOk, PeelingFail>;

/// Walks the sequence checking that each vertex has at most k-1 neighbours of
/// `color` among the vertices not yet removed. Throws std::invalid_argument on
/// duplicate or out-of-range entries.
PeelingVerdict verify_peeling(const EdgeColoring& c, Color color, const PeelingCertificate& cert);

/// `kpeel 1` text format.
PeelingCertificate parse_peeling(std::string_view text);
std::string serialize_peeling(const PeelingCertificate& cert);

/// `klabels 1` sidecar: one "index name" line per vertex.
std::string serialize_labels(const std::vector<std::string>& labels);
std::vector<std::string> parse_labels(std::string_view text);

}  // namespace kconn
