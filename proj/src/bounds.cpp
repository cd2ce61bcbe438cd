#include "kconn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kconn {

std::uint64_t isqrt(std::uint64_t x) {
  // Seed from floating point, then correct; the seed can be off by one either way.
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && (r > x / r || r * r > x)) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

std::uint64_t ceil_sqrt(std::uint64_t x) {
  std::uint64_t r = isqrt(x);
  return r * r == x ? r : r + 1;
}

Thresholds thresholds(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const auto uk = static_cast<std::uint64_t>(k);
  Thresholds t;
  t.k = k;
  t.tau = static_cast<std::int64_t>(ceil_sqrt(2 * uk - 1));
  t.lambda = std::min(static_cast<std::int64_t>(isqrt(4 * uk - 2)) + 3, k / 2 + 4);
  t.n_counterexample = 5 * k - 2 * t.tau - 3;
  t.n_guaranteed = 5 * k - t.lambda;
  // floor(2 sqrt(m)) = floor(sqrt(4m))
  t.n_conjectured_strict = 5 * k - static_cast<std::int64_t>(isqrt(4 * (2 * uk - 1))) - 3;
  t.n_no_guarantee_max = 4 * (k - 1);
  return t;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::NoGuarantee: return "no_guarantee";
    case Regime::Guaranteed: return "guaranteed";
    case Regime::CounterexampleExists: return "counterexample_exists";
    case Regime::ConjecturedGuaranteed: return "conjectured_guaranteed";
    case Regime::Open: return "open";
  }
  return "open";
}

RegimeReport classify(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const Thresholds t = thresholds(k);
  RegimeReport r{n, k, Regime::Open, ""};
  if (n <= t.n_no_guarantee_max) {
    r.regime = Regime::NoGuarantee;
    r.citation = "n <= 4(k-1): colorings without any guarantee exist";
  } else if (n >= t.n_guaranteed) {
    r.regime = Regime::Guaranteed;
    r.citation = "n >= 5k - lambda = " + std::to_string(t.n_guaranteed) +
                 ": a monochromatic k-connected subgraph on n-2k+2 vertices always exists";
  } else if (n == t.n_counterexample && t.counterexample_admissible()) {
    r.regime = Regime::CounterexampleExists;
    r.citation = "n = 5k - 2tau - 3: explicit coloring with no large monochromatic k-connected subgraph";
  } else if (n > t.n_conjectured_strict) {
    r.regime = Regime::ConjecturedGuaranteed;
    r.citation = "n > 5k - floor(2sqrt(2k-1)) - 3 = " + std::to_string(t.n_conjectured_strict) +
                 ": guarantee conjectured, unproven";
  } else {
    r.regime = Regime::Open;
    r.citation = "between the counterexample order and the proven threshold";
    if (n == t.n_counterexample)
      r.citation = "counterexample order, but tau > k/2 puts it outside the implemented "
                   "construction (an external example is needed)";
  }
  return r;
}

}  // namespace kconn
