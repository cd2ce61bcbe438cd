#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kconn {

/// floor(sqrt(x)), exact for every 64-bit x.
std::uint64_t isqrt(std::uint64_t x);
/// ceil(sqrt(x)).
std::uint64_t ceil_sqrt(std::uint64_t x);

/// Closed-form thresholds in n for a given k. Signed because several of them
/// are non-positive for small k.
struct Thresholds {
  std::int64_t k = 0;
  /// ceil(sqrt(2k - 1))
  std::int64_t tau = 0;
  /// min(floor(sqrt(4k - 2)) + 3, floor(k / 2) + 4)
  std::int64_t lambda = 0;
  /// 5k - 2 tau - 3: order of the constructed counterexample.
  std::int64_t n_counterexample = 0;
  /// 5k - lambda: from here on a large monochromatic k-connected subgraph is guaranteed.
  std::int64_t n_guaranteed = 0;
  /// 5k - floor(2 sqrt(2k - 1)) - 3: conjectured guarantee for n strictly above.
  std::int64_t n_conjectured_strict = 0;
  /// 4(k - 1): no guarantee at or below.
  std::int64_t n_no_guarantee_max = 0;

  /// tau <= k/2, i.e. the counterexample construction applies.
  bool counterexample_admissible() const { return 2 * tau <= k; }
};

/// Throws std::invalid_argument for k < 1.
Thresholds thresholds(std::int64_t k);

enum class Regime { NoGuarantee, Guaranteed, CounterexampleExists, ConjecturedGuaranteed, Open };

/// snake_case name used in CLI output, e.g. "counterexample_exists".
std::string_view to_string(Regime r);

struct RegimeReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  Regime regime = Regime::Open;
  std::string citation;
};

/// First match wins: n <= 4(k-1); n >= 5k - lambda; n is the counterexample
/// order (admissible k only); n above the conjectured threshold; otherwise open.
RegimeReport classify(std::int64_t n, std::int64_t k);

}  // namespace kconn
