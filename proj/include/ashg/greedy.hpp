#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ashg/game.hpp"
#include "ashg/partition.hpp"

namespace ashg {

enum class VertexPick {
  seeded_random,  // uniform over the remaining agents, from the config seed
  lowest_index,   // smallest remaining agent; used for golden tests
};

struct GreedyConfig {
  double epsilon = 0.19;  // must lie in (0, 1)
  VertexPick vertex_pick = VertexPick::seeded_random;
  std::uint64_t seed = 0;
};

// All greedy routines grow a maximal clique of G' from a picked start agent
// by scanning the remaining agents in ascending index and adding every agent
// whose valuations towards all current members are positive. A clique that
// reaches the threshold becomes a coalition; the first one that does not
// ends the run and every agent still unassigned becomes a singleton.

/// ceil(log_{1/p}(n) / 2), at least 1.
std::size_t er_threshold(std::size_t n, double p);

/// ceil(k' * sqrt(1 - epsilon)).
std::size_t multipartite_threshold(std::size_t class_count, double epsilon);

/// Greedy clique formation on an Erdos-Renyi aversion game. p is read from
/// the instance meta unless given explicitly.
Partition greedy_clique_formation_er(const ValuationMatrix& game, const GreedyConfig& config,
                                     std::optional<double> p = std::nullopt);

/// Greedy coalition formation restricted to the agents of the color classes
/// in `classes` (indices into the meta's class list). Returns coalitions
/// covering exactly those agents.
std::vector<Coalition> alg1_greedy_coalitions(const ValuationMatrix& game,
                                              const std::vector<std::size_t>& classes,
                                              const GreedyConfig& config);

/// The same with every color class selected, as a partition of all agents.
Partition alg1_greedy_partition(const ValuationMatrix& game, const GreedyConfig& config);

/// Splits classes 0..k-1 into `groups` contiguous groups whose sizes differ
/// by at most one, larger groups first.
std::vector<std::vector<std::size_t>> class_groups(std::size_t k, std::size_t groups);

/// Runs alg1 independently on ceil(p * k) contiguous groups of classes and
/// unions the results. Group g uses the seed derive_seed(config.seed, g).
Partition alg2_subdivide(const ValuationMatrix& game, const GreedyConfig& config);

struct TuranReduction {
  ValuationMatrix game;           // induced sub-game with equal class sizes
  std::vector<Agent> to_original; // sub-game agent -> original agent
};

/// Keeps the first |V_k| agents of every class. Edge signs are copied, never
/// resampled; enemy weights are rewritten to -n' so the sub-game is itself an
/// aversion-to-enemies game on n' = k * |V_k| agents.
TuranReduction alg3_reduce_to_turan(const ValuationMatrix& game);

/// alg3, then alg1 on all classes of the reduced game; dropped agents stay
/// singletons.
Partition alg4_balanced_low(const ValuationMatrix& game, const GreedyConfig& config);

/// alg3, then alg2 on the reduced game; dropped agents stay singletons.
Partition alg5_balanced_high(const ValuationMatrix& game, const GreedyConfig& config);

}  // namespace ashg
