#include "ashg/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ashg/error.hpp"
#include "ashg/rng.hpp"

namespace ashg {

namespace {

// Guards the ceilings below against log/sqrt rounding, e.g. log2(16)/2
// evaluating to 2.0000000000000004.
constexpr double kCeilSlack = 1e-9;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
}

std::vector<Coalition> grow_cliques(const ValuationMatrix& game, std::vector<Agent> remaining,
                                    std::size_t threshold, const GreedyConfig& config) {
  SplitMix64 rng(config.seed);
  std::vector<Coalition> out;
  std::vector<char> taken(game.n(), 0);
  while (!remaining.empty()) {
    const std::size_t start_pos = config.vertex_pick == VertexPick::lowest_index
                                      ? 0
                                      : static_cast<std::size_t>(rng.below(remaining.size()));
    const Agent start = remaining[start_pos];
    Coalition clique{start};
    for (Agent w : remaining) {
      if (w == start) continue;
      const bool friendly = std::all_of(clique.begin(), clique.end(), [&](Agent c) {
        return game.positive(w, c);
      });
      if (friendly) clique.push_back(w);
    }
    if (clique.size() < threshold) break;
    std::sort(clique.begin(), clique.end());
    for (Agent c : clique) taken[c] = 1;
    std::erase_if(remaining, [&](Agent a) { return taken[a] != 0; });
    out.push_back(std::move(clique));
  }
  for (Agent a : remaining) out.push_back({a});
  return out;
}

void require_multipartite(const ValuationMatrix& game, std::string_view who) {
  require_symmetric_aversion(game, who);
  if (!game.meta().is_multipartite())
    throw ModeError(std::string(who) + " requires a Turan or balanced k-partite instance");
}

std::vector<Agent> agents_of(const InstanceMeta& meta, const std::vector<std::size_t>& classes) {
  const auto ranges = meta.class_ranges();
  std::vector<Agent> agents;
  for (std::size_t c : classes)
    for (Agent a = ranges[c].first; a < ranges[c].first + ranges[c].second; ++a)
      agents.push_back(a);
  std::sort(agents.begin(), agents.end());
  return agents;
}

Partition lift(const TuranReduction& reduction, const Partition& reduced, std::size_t n) {
  std::vector<Coalition> blocks;
  std::vector<char> kept(n, 0);
  for (const Coalition& block : reduced.blocks()) {
    Coalition mapped;
    for (Agent a : block) {
      mapped.push_back(reduction.to_original[a]);
      kept[reduction.to_original[a]] = 1;
    }
    blocks.push_back(std::move(mapped));
  }
  for (Agent a = 0; a < n; ++a)
    if (!kept[a]) blocks.push_back({a});
  return Partition::from_blocks(n, blocks);
}

}  // namespace

std::size_t er_threshold(std::size_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("p must lie in (0, 1)");
  const double half_log = std::log(static_cast<double>(n)) / std::log(1.0 / p) / 2.0;
  const auto t = static_cast<std::size_t>(std::max(0.0, std::ceil(half_log - kCeilSlack)));
  return std::max<std::size_t>(1, t);
}

std::size_t multipartite_threshold(std::size_t class_count, double epsilon) {
  check_epsilon(epsilon);
  const double raw = static_cast<double>(class_count) * std::sqrt(1.0 - epsilon);
  return static_cast<std::size_t>(std::ceil(raw - kCeilSlack));
}

Partition greedy_clique_formation_er(const ValuationMatrix& game, const GreedyConfig& config,
                                     std::optional<double> p) {
  require_symmetric_aversion(game, "greedy_clique_formation_er");
  if (!p) p = game.meta().p;
  if (!p) throw ParameterError("greedy_clique_formation_er: no edge probability p available");
  const std::size_t t = er_threshold(game.n(), *p);
  std::vector<Agent> all(game.n());
  for (Agent a = 0; a < game.n(); ++a) all[a] = a;
  return Partition::from_blocks(game.n(), grow_cliques(game, std::move(all), t, config));
}

std::vector<Coalition> alg1_greedy_coalitions(const ValuationMatrix& game,
                                              const std::vector<std::size_t>& classes,
                                              const GreedyConfig& config) {
  require_multipartite(game, "alg1");
  check_epsilon(config.epsilon);
  if (classes.empty()) throw ParameterError("alg1: the class subset must be nonempty");
  const std::size_t k = game.meta().class_sizes.size();
  std::vector<char> seen(k, 0);
  for (std::size_t c : classes) {
    if (c >= k) throw ParameterError("alg1: class index " + std::to_string(c) + " out of range");
    if (seen[c]) throw ParameterError("alg1: class index " + std::to_string(c) + " repeated");
    seen[c] = 1;
  }
  const std::size_t threshold = multipartite_threshold(classes.size(), config.epsilon);
  return grow_cliques(game, agents_of(game.meta(), classes), threshold, config);
}

Partition alg1_greedy_partition(const ValuationMatrix& game, const GreedyConfig& config) {
  require_multipartite(game, "alg1");
  std::vector<std::size_t> all(game.meta().class_sizes.size());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  return Partition::from_blocks(game.n(), alg1_greedy_coalitions(game, all, config));
}

std::vector<std::vector<std::size_t>> class_groups(std::size_t k, std::size_t groups) {
  if (groups < 1 || groups > k) throw ParameterError("class_groups: need 1 <= groups <= k");
  const std::size_t base = k / groups;
  const std::size_t larger = k % groups;
  std::vector<std::vector<std::size_t>> out(groups);
  std::size_t next = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t size = base + (g < larger ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) out[g].push_back(next++);
  }
  return out;
}

Partition alg2_subdivide(const ValuationMatrix& game, const GreedyConfig& config) {
  require_multipartite(game, "alg2");
  check_epsilon(config.epsilon);
  const auto& meta = game.meta();
  if (!meta.p) throw ParameterError("alg2: instance meta has no perturbation probability");
  const std::size_t k = meta.class_sizes.size();
  const double raw = std::ceil(*meta.p * static_cast<double>(k) - kCeilSlack);
  if (raw < 1.0) throw ParameterError("alg2: ceil(p * k) must be at least 1");
  const auto groups = std::min(k, static_cast<std::size_t>(raw));

  std::vector<Coalition> blocks;
  const auto grouping = class_groups(k, groups);
  for (std::size_t g = 0; g < grouping.size(); ++g) {
    GreedyConfig sub = config;
    sub.seed = derive_seed(config.seed, g);
    for (Coalition& c : alg1_greedy_coalitions(game, grouping[g], sub))
      blocks.push_back(std::move(c));
  }
  return Partition::from_blocks(game.n(), blocks);
}

TuranReduction alg3_reduce_to_turan(const ValuationMatrix& game) {
  require_multipartite(game, "alg3");
  const auto& meta = game.meta();
  if (meta.kind == ModelKind::turan) {
    TuranReduction same{game, std::vector<Agent>(game.n())};
    for (Agent a = 0; a < game.n(); ++a) same.to_original[a] = a;
    return same;
  }
  const std::size_t keep = *std::min_element(meta.class_sizes.begin(), meta.class_sizes.end());
  const std::size_t k = meta.class_sizes.size();
  std::vector<Agent> to_original;
  for (const auto& [first, size] : meta.class_ranges())
    for (Agent a = first; a < first + keep; ++a) to_original.push_back(a);

  const std::size_t reduced_n = to_original.size();
  InstanceMeta reduced_meta;
  reduced_meta.kind = ModelKind::turan;
  reduced_meta.n = reduced_n;
  reduced_meta.p = meta.p;
  reduced_meta.k = k;
  reduced_meta.class_sizes.assign(k, keep);
  reduced_meta.seed = meta.seed;
  const auto enemy = -static_cast<std::int64_t>(reduced_n);
  auto reduced = ValuationMatrix::symmetric_int_from(
      reduced_n,
      [&](Agent i, Agent j) {
        return game.scaled(to_original[i], to_original[j]) > 0 ? std::int64_t{1} : enemy;
      },
      1, std::move(reduced_meta));
  return {std::move(reduced), std::move(to_original)};
}

Partition alg4_balanced_low(const ValuationMatrix& game, const GreedyConfig& config) {
  const TuranReduction reduction = alg3_reduce_to_turan(game);
  return lift(reduction, alg1_greedy_partition(reduction.game, config), game.n());
}

Partition alg5_balanced_high(const ValuationMatrix& game, const GreedyConfig& config) {
  const TuranReduction reduction = alg3_reduce_to_turan(game);
  return lift(reduction, alg2_subdivide(reduction.game, config), game.n());
}

}  // namespace ashg
