#include "ashg/cw2.hpp"

#include <cmath>

#include "ashg/error.hpp"
#include "ashg/rng.hpp"
#include "ashg/welfare.hpp"

namespace ashg {

namespace {

template <typename T>
T pair_of(const ValuationMatrix& game, Agent i, Agent j) {
  if constexpr (std::is_same_v<T, std::int64_t>)
    return game.pair_scaled(i, j);
  else
    return game.pair_value(i, j);
}

template <typename T>
bool gain_positive(T gain) {
  if constexpr (std::is_same_v<T, std::int64_t>)
    return gain > 0;
  else
    return gain > Welfare::kRealTolerance;
}

template <typename T>
bool gain_larger(T a, T b) {
  if constexpr (std::is_same_v<T, std::int64_t>)
    return a > b;
  else
    return a > b + Welfare::kRealTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

// One best-improvement descent. `same[i]` / `other[i]` hold the summed pair
// values from agent i to its own / the opposite side; moving i changes SW
// (and CW) by other[i] - same[i].
template <typename T>
std::pair<std::vector<std::size_t>, T> descend(const ValuationMatrix& game,
                                               std::vector<std::size_t> side,
                                               std::size_t max_iters) {
  const std::size_t n = game.n();
  std::vector<T> pairs(n * n, T{});
  for (Agent i = 0; i < n; ++i)
    for (Agent j = 0; j < n; ++j)
      if (i != j) pairs[i * n + j] = pair_of<T>(game, i, j);

  std::vector<T> same(n, T{}), other(n, T{});
  T sw{};
  for (Agent i = 0; i < n; ++i)
    for (Agent j = 0; j < n; ++j) {
      if (i == j) continue;
      (side[i] == side[j] ? same[i] : other[i]) += pairs[i * n + j];
      if (j > i && side[i] == side[j]) sw += pairs[i * n + j];
    }

  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::size_t best = n;
    T best_gain{};
    for (Agent i = 0; i < n; ++i) {
      const T gain = other[i] - same[i];
      if (gain_positive(gain) && (best == n || gain_larger(gain, best_gain))) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == n) break;
    sw += best_gain;
    side[best] ^= 1U;
    std::swap(same[best], other[best]);
    for (Agent j = 0; j < n; ++j) {
      if (j == best) continue;
      const T w = pairs[best * n + j];
      if (side[j] == side[best]) {
        same[j] += w;
        other[j] -= w;
      } else {
        same[j] -= w;
        other[j] += w;
      }
    }
  }
  return {std::move(side), sw};
}

template <typename T>
Partition local_search(const ValuationMatrix& game, const TwoPartitionBackend& backend) {
  const std::size_t n = game.n();
  const std::size_t restarts = std::max<std::size_t>(1, backend.restarts);
  std::vector<std::size_t> best_side;
  T best_sw{};
  for (std::size_t r = 0; r < restarts; ++r) {
    SplitMix64 rng(derive_seed(backend.seed, r));
    std::vector<std::size_t> side(n);
    for (auto& s : side) s = rng.coin() ? 1 : 0;
    auto [result, sw] = descend<T>(game, std::move(side), backend.max_iters);
    if (best_side.empty() || gain_larger(sw, best_sw)) {
      best_side = std::move(result);
      best_sw = sw;
    }
  }
  return Partition(best_side);
}

}  // namespace

CwResult maximize_cw_two(const ValuationMatrix& game, const TwoPartitionBackend& backend) {
  if (!game.symmetric()) throw ModeError("maximize_cw_two requires a symmetric game");
  if (backend.kind == TwoPartitionBackend::Kind::exact) {
    auto best = max_cw_exact_two(game, backend.budget);
    return {std::move(best.partition), best.value};
  }
  Partition pi = game.is_integer() ? local_search<std::int64_t>(game, backend)
                                   : local_search<double>(game, backend);
  Welfare cw = correlation_welfare(game, pi);
  return {std::move(pi), cw};
}

SwApproximation approx_sw_nonneg_tv(const ValuationMatrix& game,
                                    const TwoPartitionBackend& backend) {
  const bool nonneg = total_value(game) >= Welfare::exact(0);
  const std::size_t n = game.n();
  std::vector<Partition> candidates;
  if (n >= 2) candidates.push_back(maximize_cw_two(game, backend).partition);
  candidates.push_back(Partition::grand_coalition(n));
  candidates.push_back(Partition::singletons(n));

  std::size_t best = 0;
  Welfare best_sw = social_welfare(game, candidates[0]);
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    const Welfare sw = social_welfare(game, candidates[c]);
    if (sw > best_sw) {
      best = c;
      best_sw = sw;
    }
  }
  return {candidates[best], best_sw, nonneg};
}

TwoColoringEstimate random_two_coloring_bound(const ValuationMatrix& game,
                                              const Partition& reference, std::size_t trials,
                                              std::uint64_t seed) {
  if (trials == 0) throw ParameterError("random_two_coloring_bound: trials must be positive");
  const Welfare within = social_welfare(game, reference);
  const Welfare tv = total_value(game);
  const Welfare across = tv - within;
  const Welfare closed = within + across.half();

  const auto& blocks = reference.blocks();
  const std::size_t m = blocks.size();
  std::vector<double> between(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      double s = 0.0;
      for (Agent i : blocks[a])
        for (Agent j : blocks[b]) s += game.pair_value(i, j);
      between[a * m + b] = s;
    }

  SplitMix64 rng(seed);
  std::vector<int> color(m);
  double mean = 0.0;
  double m2 = 0.0;
  const double base = within.to_double();
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& c : color) c = rng.coin() ? 1 : 0;
    double sw = base;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (color[a] == color[b]) sw += between[a * m + b];
    const double delta = sw - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (sw - mean);
  }
  const double variance = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
  return {mean, std::sqrt(variance / static_cast<double>(trials)), within, across, closed};
}

}  // namespace ashg
