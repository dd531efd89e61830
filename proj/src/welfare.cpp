#include "ashg/welfare.hpp"

#include <string>

#include "ashg/error.hpp"

namespace ashg {

namespace {

void check_size(const ValuationMatrix& game, const Partition& pi) {
  if (pi.size() != game.n()) {
    throw DimensionError("partition has " + std::to_string(pi.size()) + " agents, game has " +
                         std::to_string(game.n()));
  }
}

// Sum over all ordered pairs of a weight selected by `keep(i, j)`, in
// doubled scaled units (integer mode) or as a double.
template <typename Keep>
Welfare doubled_pair_sum(const ValuationMatrix& game, Keep keep, int sign_within, int sign_across) {
  const std::size_t n = game.n();
  if (game.is_integer()) {
    std::int64_t acc = 0;
    for (Agent i = 0; i < n; ++i)
      for (Agent j = 0; j < n; ++j)
        if (i != j) acc += (keep(i, j) ? sign_within : sign_across) * game.scaled(i, j);
    return Welfare::exact_doubled(acc, game.unit());
  }
  double acc = 0.0;
  for (Agent i = 0; i < n; ++i)
    for (Agent j = 0; j < n; ++j)
      if (i != j) acc += (keep(i, j) ? sign_within : sign_across) * game.value(i, j);
  return Welfare::real(acc / 2.0);
}

}  // namespace

Welfare social_welfare(const ValuationMatrix& game, const Partition& pi) {
  check_size(game, pi);
  return 2 * doubled_pair_sum(game, [&](Agent i, Agent j) { return pi.same_block(i, j); }, 1, 0);
}

Welfare correlation_welfare(const ValuationMatrix& game, const Partition& pi) {
  check_size(game, pi);
  return doubled_pair_sum(game, [&](Agent i, Agent j) { return pi.same_block(i, j); }, 1, -1);
}

Welfare total_value(const ValuationMatrix& game) {
  return 2 * doubled_pair_sum(game, [](Agent, Agent) { return true; }, 1, 0);
}

std::vector<Welfare> agent_utilities(const ValuationMatrix& game, const Partition& pi) {
  check_size(game, pi);
  std::vector<Welfare> out;
  out.reserve(game.n());
  for (Agent i = 0; i < game.n(); ++i) {
    const Coalition& block = pi.blocks()[pi.block_of(i)];
    if (game.is_integer()) {
      std::int64_t acc = 0;
      for (Agent j : block) acc += game.scaled(i, j);
      out.push_back(Welfare::exact(acc, game.unit()));
    } else {
      double acc = 0.0;
      for (Agent j : block) acc += game.value(i, j);
      out.push_back(Welfare::real(acc));
    }
  }
  return out;
}

ValuationMatrix symmetrize(const ValuationMatrix& game) {
  if (game.symmetric()) return game;
  const std::size_t n = game.n();
  if (game.is_integer()) {
    bool all_even = true;
    for (Agent i = 0; i < n; ++i)
      for (Agent j = i + 1; j < n; ++j)
        if (game.pair_scaled(i, j) % 2 != 0) all_even = false;
    if (all_even) {
      return ValuationMatrix::symmetric_int_from(
          n, [&](Agent i, Agent j) { return game.pair_scaled(i, j) / 2; }, game.unit(),
          game.meta());
    }
    return ValuationMatrix::symmetric_int_from(
        n, [&](Agent i, Agent j) { return game.pair_scaled(i, j); }, 2 * game.unit(),
        game.meta());
  }
  std::vector<double> upper;
  for (Agent i = 0; i < n; ++i)
    for (Agent j = i + 1; j < n; ++j) upper.push_back(game.pair_value(i, j) / 2.0);
  return ValuationMatrix::symmetric_real(n, std::move(upper), game.meta());
}

WelfareReport welfare_report(const ValuationMatrix& game, const Partition& pi) {
  return {social_welfare(game, pi), correlation_welfare(game, pi), total_value(game),
          agent_utilities(game, pi)};
}

}  // namespace ashg
