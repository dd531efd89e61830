#include "ashg/matching.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "ashg/error.hpp"

namespace ashg {

namespace {

template <typename T>
T pair_of(const ValuationMatrix& game, Agent i, Agent j) {
  if constexpr (std::is_same_v<T, std::int64_t>)
    return game.pair_scaled(i, j);
  else
    return game.pair_value(i, j);
}

// best[mask] = heaviest matching inside `mask`. The lowest agent of the mask
// is either left unmatched or paired with a higher agent of the mask.
template <typename T>
std::vector<std::pair<Agent, Agent>> subset_dp(const ValuationMatrix& game) {
  const std::size_t n = game.n();
  const std::size_t full = std::size_t{1} << n;
  std::vector<T> best(full, T{});
  std::vector<std::int32_t> partner(full, -1);
  for (std::size_t mask = 1; mask < full; ++mask) {
    const auto i = static_cast<Agent>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    best[mask] = best[rest];
    for (std::size_t m = rest; m != 0; m &= m - 1) {
      const auto j = static_cast<Agent>(__builtin_ctzll(m));
      const T w = pair_of<T>(game, i, j);
      if (!(w > T{})) continue;
      const T cand = w + best[rest & ~(std::size_t{1} << j)];
      if (cand > best[mask]) {
        best[mask] = cand;
        partner[mask] = static_cast<std::int32_t>(j);
      }
    }
  }
  std::vector<std::pair<Agent, Agent>> pairs;
  std::size_t mask = full - 1;
  while (mask != 0) {
    const auto i = static_cast<Agent>(__builtin_ctzll(mask));
    mask &= mask - 1;
    if (partner[mask | (std::size_t{1} << i)] >= 0) {
      const auto j = static_cast<Agent>(partner[mask | (std::size_t{1} << i)]);
      pairs.emplace_back(i, j);
      mask &= ~(std::size_t{1} << j);
    }
  }
  return pairs;
}

template <typename T>
std::vector<std::pair<Agent, Agent>> greedy_pairs(const ValuationMatrix& game) {
  const std::size_t n = game.n();
  std::vector<std::tuple<T, Agent, Agent>> edges;
  for (Agent i = 0; i < n; ++i)
    for (Agent j = i + 1; j < n; ++j) {
      const T w = pair_of<T>(game, i, j);
      if (w > T{}) edges.emplace_back(w, i, j);
    }
  std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
  });
  std::vector<char> used(n, 0);
  std::vector<std::pair<Agent, Agent>> pairs;
  for (const auto& [w, i, j] : edges) {
    if (used[i] || used[j]) continue;
    used[i] = used[j] = 1;
    pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace

Matching positive_matching(const ValuationMatrix& game, MatchingMethod method) {
  if (!game.symmetric()) throw ModeError("matching baseline requires a symmetric game");
  std::vector<std::pair<Agent, Agent>> pairs;
  if (method == MatchingMethod::exact_small) {
    if (game.n() > kExactMatchingMaxN) {
      throw CapacityError("exact matching: n = " + std::to_string(game.n()) +
                          " exceeds the subset-DP limit of " +
                          std::to_string(kExactMatchingMaxN));
    }
    pairs = game.is_integer() ? subset_dp<std::int64_t>(game) : subset_dp<double>(game);
  } else {
    pairs = game.is_integer() ? greedy_pairs<std::int64_t>(game) : greedy_pairs<double>(game);
  }
  std::sort(pairs.begin(), pairs.end());
  Matching m;
  std::vector<char> matched(game.n(), 0);
  for (const auto& [i, j] : pairs) matched[i] = matched[j] = 1;
  m.pairs = std::move(pairs);
  for (Agent a = 0; a < game.n(); ++a)
    if (!matched[a]) m.unmatched.push_back(a);
  return m;
}

Partition matching_partition(const ValuationMatrix& game, MatchingMethod method) {
  const Matching m = positive_matching(game, method);
  std::vector<Coalition> blocks;
  for (const auto& [i, j] : m.pairs) blocks.push_back({i, j});
  for (Agent a : m.unmatched) blocks.push_back({a});
  return Partition::from_blocks(game.n(), blocks);
}

}  // namespace ashg
