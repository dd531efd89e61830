#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ashg/game.hpp"
#include "ashg/partition.hpp"
#include "ashg/welfare_value.hpp"

namespace ashg {

/// Size limits for the brute-force oracles. Calls above a limit throw
/// CapacityError instead of running unbounded.
struct EnumerationBudget {
  std::size_t max_n_all_partitions = 13;
  std::size_t max_n_two_partitions = 24;
  std::size_t max_clique_n = 2000;
};

enum class PartitionSpace { all, two };

struct OptimumResult {
  Partition partition;
  Welfare value;
};

/// Visits every set partition of {0..n-1} as a restricted-growth string,
/// in lexicographic order. The span is only valid during the call.
void for_each_partition(std::size_t n,
                        const std::function<void(std::span<const std::size_t>)>& visit);

/// Maximum social welfare over all partitions (space = all) or over
/// partitions with exactly two nonempty coalitions (space = two). Ties go to
/// the lexicographically smallest canonical assignment.
OptimumResult max_welfare_exact(const ValuationMatrix& game, PartitionSpace space,
                                const EnumerationBudget& budget = {});

/// Maximum correlation welfare over partitions with exactly two coalitions.
OptimumResult max_cw_exact_two(const ValuationMatrix& game, const EnumerationBudget& budget = {});

/// Undirected simple graph stored as adjacency bitsets.
class BitGraph {
 public:
  explicit BitGraph(std::size_t n);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::size_t degree(std::size_t u) const;

  std::size_t words() const { return words_; }
  const std::uint64_t* row(std::size_t u) const { return rows_.data() + u * words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// G': the graph on the agents whose edges are the pairs with v(i,j) > 0.
BitGraph positive_graph(const ValuationMatrix& game);

struct CliqueResult {
  std::vector<std::size_t> vertices;  // ascending
  std::size_t size() const { return vertices.size(); }
};

/// Exact maximum clique by branch and bound with greedy-coloring bounds
/// (vertices ordered by nonincreasing degree). Deterministic.
CliqueResult max_clique(const BitGraph& graph);

/// Maximum clique of G' for a symmetric aversion-to-enemies game.
CliqueResult max_clique_exact(const ValuationMatrix& game, const EnumerationBudget& budget = {});

enum class BoundSource { max_clique, k_partite };

struct UpperBound {
  Welfare value;
  BoundSource source;
  std::optional<std::size_t> clique_size;
};

/// min(n * (omega(G') - 1), n * (k - 1)) over the bounds that are available:
/// the clique bound needs n within the clique budget, the k-partite bound
/// needs color classes in the instance meta.
UpperBound welfare_upper_bound(const ValuationMatrix& game, const EnumerationBudget& budget = {});

}  // namespace ashg
