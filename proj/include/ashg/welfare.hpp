#pragma once

#include <vector>

#include "ashg/game.hpp"
#include "ashg/partition.hpp"
#include "ashg/welfare_value.hpp"

namespace ashg {

/// Sum over ordered pairs (i, j), i != j, in the same coalition of v_i(j).
/// Each unordered pair inside a coalition therefore counts v_i(j) + v_j(i).
Welfare social_welfare(const ValuationMatrix& game, const Partition& pi);

/// One half of sum_i (sum_{j in pi(i)} v_i(j) - sum_{j not in pi(i)} v_i(j)).
Welfare correlation_welfare(const ValuationMatrix& game, const Partition& pi);

/// Sum of v_i(j) over all ordered pairs; does not depend on the partition.
Welfare total_value(const ValuationMatrix& game);

/// u_i(pi(i)) for every agent.
std::vector<Welfare> agent_utilities(const ValuationMatrix& game, const Partition& pi);

/// Replaces v_i(j) and v_j(i) by their mean. Integer games stay exact: the
/// unit is doubled unless every pair sum is even.
ValuationMatrix symmetrize(const ValuationMatrix& game);

struct WelfareReport {
  Welfare sw;
  Welfare cw;
  Welfare tv;
  std::vector<Welfare> per_agent_utility;
};

WelfareReport welfare_report(const ValuationMatrix& game, const Partition& pi);

}  // namespace ashg
