#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ashg/game.hpp"
#include "ashg/partition.hpp"

namespace ashg {

struct Matching {
  std::vector<std::pair<Agent, Agent>> pairs;  // each pair ascending, list sorted
  std::vector<Agent> unmatched;                // ascending
};

enum class MatchingMethod {
  exact_small,  // maximum-weight matching by subset DP, n <= kExactMatchingMaxN
  greedy,       // heaviest positive pair first, ties by (i, j)
};

inline constexpr std::size_t kExactMatchingMaxN = 20;

/// Matching on the pairs with positive value v(i,j) + v(j,i); pairs of
/// nonpositive value are never matched.
Matching positive_matching(const ValuationMatrix& game, MatchingMethod method);

/// Matched pairs become two-agent coalitions, everyone else a singleton.
Partition matching_partition(const ValuationMatrix& game, MatchingMethod method);

}  // namespace ashg
