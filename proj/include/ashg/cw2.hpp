#pragma once

#include <cstddef>
#include <cstdint>

#include "ashg/exact.hpp"
#include "ashg/game.hpp"
#include "ashg/partition.hpp"
#include "ashg/welfare_value.hpp"

namespace ashg {

/// How the two-coalition correlation-welfare maximizer is realized.
struct TwoPartitionBackend {
  enum class Kind { exact, local_search };

  Kind kind = Kind::exact;
  std::size_t max_iters = 10000;  // improving moves per restart
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  EnumerationBudget budget{};
};

struct CwResult {
  Partition partition;
  Welfare cw;
};

/// Maximizes CW over two-coalition partitions.
///
/// exact: enumerates every two-coalition partition (see max_cw_exact_two).
/// local_search: from a seeded random bipartition, repeatedly moves the single
/// agent whose side switch raises CW the most (ties to the lowest index)
/// until no move improves; restarts keep the best result. If a side empties
/// out the result is the grand coalition.
CwResult maximize_cw_two(const ValuationMatrix& game, const TwoPartitionBackend& backend);

struct SwApproximation {
  Partition partition;
  Welfare sw;
  bool nonnegative_total_value;  // false: the factor guarantees do not apply
};

/// Best of the two-coalition CW maximizer, the grand coalition and the
/// singleton partition, by social welfare.
SwApproximation approx_sw_nonneg_tv(const ValuationMatrix& game,
                                    const TwoPartitionBackend& backend);

struct TwoColoringEstimate {
  double empirical_mean;
  double standard_error;  // sample standard deviation / sqrt(trials)
  Welfare within;         // W: SW of the reference partition
  Welfare across;         // A: TV - W
  Welfare closed_form;    // W + A / 2
};

/// Assigns every coalition of `reference` to one of two sides uniformly at
/// random, `trials` times, and compares the mean social welfare of the merged
/// partition with its exact expectation W + A/2.
TwoColoringEstimate random_two_coloring_bound(const ValuationMatrix& game,
                                              const Partition& reference, std::size_t trials,
                                              std::uint64_t seed);

}  // namespace ashg
