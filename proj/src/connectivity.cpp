#include "kconn/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>

namespace kconn {

namespace {

// Flow network for the vertex-split reduction: vertex x becomes in(x) = 2x
// and out(x) = 2x + 1 joined by a unit arc; graph edges become uncapacitated
// arcs out(x) -> in(y) in both directions.
class SplitNetwork {
 public:
  SplitNetwork(const SimpleGraph& g, Vertex source, Vertex sink)
      : head_(2 * g.universe(), -1), source_(2 * source + 1), sink_(2 * sink) {
    const int big = static_cast<int>(g.order()) + 1;
    g.vertices().for_each([&](Vertex x) {
      if (x != source && x != sink) add_arc(2 * x, 2 * x + 1, 1);
    });
    for (auto [x, y] : g.edges()) {
      if ((x == source && y == sink) || (x == sink && y == source)) continue;
      if (y != source && x != sink) add_arc(2 * x + 1, 2 * y, big);
      if (x != source && y != sink) add_arc(2 * y + 1, 2 * x, big);
    }
  }

  /// Augments until cap units flow or no path remains; returns the flow value.
  std::size_t run(std::size_t cap) {
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    while (flow < cap && augment(via)) ++flow;
    return flow;
  }

  /// Nodes reachable from the source in the residual network.
  std::vector<char> reachable() const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{source_};
    seen[source_] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int next;
  };

  void add_arc(std::size_t from, std::size_t to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  bool augment(std::vector<int>& via) {
    std::fill(via.begin(), via.end(), -2);
    via[source_] = -1;
    std::deque<std::size_t> queue{source_};
    while (!queue.empty() && via[sink_] == -2) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && via[arcs_[a].to] == -2) {
          via[arcs_[a].to] = a;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    if (via[sink_] == -2) return false;
    // Every source-sink path crosses a unit split arc, so the bottleneck is 1.
    for (std::size_t x = sink_; x != source_;) {
      int a = via[x];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      x = arcs_[a ^ 1].to;
    }
    return true;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::size_t source_;
  std::size_t sink_;
};

VertexSet separator_from(const SimpleGraph& g, const SplitNetwork& net, Vertex u, Vertex v) {
  auto seen = net.reachable();
  VertexSet sep(g.universe());
  g.vertices().for_each([&](Vertex x) {
    if (x != u && x != v && seen[2 * x] && !seen[2 * x + 1]) sep.insert(x);
  });
  return sep;
}

void require_pair(const SimpleGraph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::out_of_range("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                            ") not in graph");
  if (u == v) throw std::invalid_argument("local connectivity needs distinct vertices");
}

// Smallest component by (size, least member), with everything else on side b.
CutResult make_cut(const SimpleGraph& g, VertexSet separator) {
  auto comps = components(induced_subgraph(g, g.vertices() - separator));
  auto smallest = std::min_element(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.first() < b.first();
  });
  CutResult cut;
  cut.size = separator.size();
  cut.side_a = *smallest;
  cut.side_b = g.vertices() - separator - cut.side_a;
  cut.separator = std::move(separator);
  return cut;
}

}  // namespace

LocalConnectivity local_vertex_connectivity(const SimpleGraph& g, Vertex u, Vertex v) {
  require_pair(g, u, v);
  SplitNetwork net(g, u, v);
  LocalConnectivity out;
  out.count = net.run(std::numeric_limits<std::size_t>::max());
  if (g.adjacent(u, v))
    out.count += 1;
  else
    out.separator = separator_from(g, net, u, v);
  return out;
}

bool is_k_connected(const SimpleGraph& g, std::size_t k) {
  if (g.order() <= k) return false;
  if (k == 0) return true;
  bool low_degree = false;
  g.vertices().for_each([&](Vertex x) { low_degree = low_degree || g.degree(x) < k; });
  if (low_degree) return false;
  auto members = g.vertices().members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) continue;
      if (SplitNetwork(g, members[i], members[j]).run(k) < k) return false;
    }
  }
  return true;
}

std::optional<CutResult> find_small_cut(const SimpleGraph& g, std::size_t k) {
  if (k == 0 || g.order() < 2) return std::nullopt;
  if (!is_connected(g)) return make_cut(g, VertexSet(g.universe()));

  std::size_t best = k;
  std::optional<VertexSet> best_sep;
  auto members = g.vertices().members();
  for (std::size_t i = 0; i < members.size() && best > 1; ++i) {
    for (std::size_t j = i + 1; j < members.size() && best > 1; ++j) {
      Vertex u = members[i];
      Vertex v = members[j];
      if (g.adjacent(u, v)) continue;
      SplitNetwork net(g, u, v);
      std::size_t flow = net.run(best);
      if (flow < best) {
        best = flow;
        best_sep = separator_from(g, net, u, v);
      }
    }
  }
  if (!best_sep) return std::nullopt;
  return make_cut(g, std::move(*best_sep));
}

VertexSet k_core(const SimpleGraph& g, std::size_t k) {
  VertexSet alive = g.vertices();
  std::vector<std::size_t> degree(g.universe(), 0);
  std::vector<Vertex> doomed;
  alive.for_each([&](Vertex x) {
    degree[x] = g.degree(x);
    if (degree[x] < k) doomed.push_back(x);
  });
  for (Vertex x : doomed) alive.erase(x);
  while (!doomed.empty()) {
    Vertex x = doomed.back();
    doomed.pop_back();
    (g.neighbors(x) & alive).for_each([&](Vertex y) {
      if (--degree[y] < k) {
        alive.erase(y);
        doomed.push_back(y);
      }
    });
  }
  return alive;
}

namespace {

class BranchAndReduce {
 public:
  BranchAndReduce(const SimpleGraph& g, std::size_t k, std::optional<Deadline> deadline)
      : g_(g), k_(k), deadline_(deadline) {}

  KConnReport solve(const VertexSet& set) {
    if (set.size() <= k_) return {0, VertexSet(g_.universe())};
    if (auto it = memo_.find(set); it != memo_.end()) return it->second;
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_) throw BudgetExceeded();

    KConnReport result = reduce(set);
    memo_.emplace(set, result);
    return result;
  }

 private:
  KConnReport reduce(const VertexSet& set) {
    SimpleGraph h = induced_subgraph(g_, set);
    VertexSet core = k_core(h, k_);
    if (core != set) return solve(core);

    auto cut = find_small_cut(h, k_);
    if (!cut) return {set.size(), set};

    std::vector<VertexSet> branches;
    for (auto& comp : components(induced_subgraph(h, set - cut->separator)))
      branches.push_back(comp | cut->separator);
    std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return lex_less(a, b);
    });

    KConnReport best{0, VertexSet(g_.universe())};
    for (const auto& branch : branches) {
      if (branch.size() <= best.order) continue;
      KConnReport r = solve(branch);
      if (r.order > best.order) best = std::move(r);
    }
    return best;
  }

  const SimpleGraph& g_;
  std::size_t k_;
  std::optional<Deadline> deadline_;
  std::unordered_map<VertexSet, KConnReport, VertexSetHash> memo_;
};

}  // namespace

KConnReport max_k_connected_subgraph(const SimpleGraph& g, std::size_t k) {
  return BranchAndReduce(g, k, std::nullopt).solve(g.vertices());
}

std::optional<KConnReport> max_k_connected_subgraph(const SimpleGraph& g, std::size_t k,
                                                    Deadline deadline) {
  try {
    return BranchAndReduce(g, k, deadline).solve(g.vertices());
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

namespace {

// Dense local copy with graph vertices relabelled 0..m-1 and adjacency as masks.
struct MaskGraph {
  std::vector<Vertex> ids;
  std::vector<std::uint32_t> adj;

  explicit MaskGraph(const SimpleGraph& g) : ids(g.vertices().members()), adj(ids.size(), 0) {
    if (ids.size() > kOracleMaxOrder)
      throw std::invalid_argument("graph too large for oracle: " + std::to_string(ids.size()) +
                                  " vertices (limit " + std::to_string(kOracleMaxOrder) + ")");
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (i != j && g.adjacent(ids[i], ids[j])) adj[i] |= 1u << j;
  }

  bool connected(std::uint32_t set) const {
    if (set == 0) return true;
    std::uint32_t reached = set & (~set + 1);
    std::uint32_t frontier = reached;
    while (frontier != 0) {
      std::uint32_t grow = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) grow |= adj[std::countr_zero(f)];
      frontier = grow & set & ~reached;
      reached |= frontier;
    }
    return reached == set;
  }

  // Tries every removal of at most `budget` vertices from `set`, starting at
  // member position `from`; true iff some removal disconnects what is left.
  bool separable(std::uint32_t set, std::uint32_t removed, std::size_t budget,
                 std::size_t from) const {
    if (!connected(set & ~removed)) return true;
    if (budget == 0) return false;
    for (std::size_t i = from; i < ids.size(); ++i) {
      std::uint32_t bit = 1u << i;
      if ((set & bit) == 0) continue;
      if (separable(set, removed | bit, budget - 1, i + 1)) return true;
    }
    return false;
  }

  bool k_connected(std::uint32_t set, std::size_t k) const {
    if (static_cast<std::size_t>(std::popcount(set)) <= k) return false;
    return k == 0 || !separable(set, 0, k - 1, 0);
  }

  VertexSet lift(std::uint32_t set, std::size_t universe) const {
    VertexSet out(universe);
    for (std::uint32_t s = set; s != 0; s &= s - 1) out.insert(ids[std::countr_zero(s)]);
    return out;
  }
};

}  // namespace

bool brute_force_is_k_connected(const SimpleGraph& g, std::size_t k) {
  MaskGraph m(g);
  return m.k_connected(static_cast<std::uint32_t>((std::uint64_t{1} << m.ids.size()) - 1), k);
}

KConnReport oracle_max_k_connected(const SimpleGraph& g, std::size_t k) {
  MaskGraph m(g);
  const std::size_t n = m.ids.size();
  for (std::size_t size = n; size > k; --size) {
    // Gosper's hack: all n-bit masks with `size` bits set, in increasing order.
    std::uint64_t set = (std::uint64_t{1} << size) - 1;
    while (set < (std::uint64_t{1} << n)) {
      if (m.k_connected(static_cast<std::uint32_t>(set), k))
        return {size, m.lift(static_cast<std::uint32_t>(set), g.universe())};
      std::uint64_t low = set & (~set + 1);
      std::uint64_t ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
  }
  return {0, VertexSet(g.universe())};
}

}  // namespace kconn
