#include "ashg/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "ashg/error.hpp"
#include "ashg/welfare.hpp"

namespace ashg {

namespace {

template <typename T>
std::vector<T> pair_matrix(const ValuationMatrix& game) {
  const std::size_t n = game.n();
  std::vector<T> p(n * n, T{});
  for (Agent i = 0; i < n; ++i)
    for (Agent j = 0; j < n; ++j) {
      if (i == j) continue;
      if constexpr (std::is_same_v<T, std::int64_t>)
        p[i * n + j] = game.pair_scaled(i, j);
      else
        p[i * n + j] = game.pair_value(i, j);
    }
  return p;
}

template <typename T>
bool strictly_better(T a, T b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    return a > b;
  } else {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return a > b + Welfare::kRealTolerance * scale;
  }
}

template <typename T>
bool tied(T a, T b) {
  return !strictly_better(a, b) && !strictly_better(b, a);
}

template <typename T>
Welfare to_welfare(T sw, const ValuationMatrix& game) {
  if constexpr (std::is_same_v<T, std::int64_t>)
    return Welfare::exact(sw, game.unit());
  else
    return Welfare::real(sw);
}

// Depth-first walk over restricted-growth strings. Block b of agent i is
// tried in ascending order, so leaves arrive in lexicographic order.
template <typename T>
class AllPartitionSearch {
 public:
  AllPartitionSearch(std::size_t n, const std::vector<T>& pairs)
      : n_(n), pairs_(pairs), assignment_(n, 0), members_(n) {}

  void run() {
    members_[0].push_back(0);
    recurse(1, 1, T{});
  }

  const std::vector<std::size_t>& best_assignment() const { return best_assignment_; }
  T best_value() const { return best_; }

 private:
  void recurse(std::size_t i, std::size_t blocks, T current) {
    if (i == n_) {
      if (!have_best_ || strictly_better(current, best_)) {
        have_best_ = true;
        best_ = current;
        best_assignment_ = assignment_;
      }
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      T delta{};
      if (b < blocks)
        for (Agent j : members_[b]) delta += pairs_[i * n_ + j];
      assignment_[i] = b;
      members_[b].push_back(i);
      recurse(i + 1, std::max(blocks, b + 1), current + delta);
      members_[b].pop_back();
    }
  }

  std::size_t n_;
  const std::vector<T>& pairs_;
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<Agent>> members_;
  std::vector<std::size_t> best_assignment_;
  T best_{};
  bool have_best_ = false;
};

template <typename T>
OptimumResult best_over_all(const ValuationMatrix& game) {
  const auto pairs = pair_matrix<T>(game);
  AllPartitionSearch<T> search(game.n(), pairs);
  search.run();
  return {Partition(search.best_assignment()), to_welfare(search.best_value(), game)};
}

// Gray-code walk over the 2^(n-1) side assignments with agent 0 on side 0.
// Agent 1 is the most significant bit of the code, so smaller codes are
// lexicographically smaller canonical assignments. Code 0 (one empty side)
// is skipped.
template <typename T>
OptimumResult best_over_two(const ValuationMatrix& game) {
  const std::size_t n = game.n();
  const auto pairs = pair_matrix<T>(game);
  std::vector<int> side(n, 0);
  std::vector<T> same(n, T{});   // sum of pair values to same-side agents
  std::vector<T> other(n, T{});  // ... to other-side agents
  T sw{};
  for (Agent i = 0; i < n; ++i)
    for (Agent j = 0; j < n; ++j) {
      same[i] += pairs[i * n + j];
      if (j > i) sw += pairs[i * n + j];
    }

  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::uint64_t best_code = 0;
  T best{};
  bool have_best = false;
  std::uint64_t code = 0;
  for (std::uint64_t g = 1; g < count; ++g) {
    const int bit = std::countr_zero(g);
    const Agent flip = n - 1 - static_cast<std::size_t>(bit);
    sw += other[flip] - same[flip];
    std::swap(same[flip], other[flip]);
    side[flip] ^= 1;
    for (Agent j = 0; j < n; ++j) {
      if (j == flip) continue;
      const T w = pairs[flip * n + j];
      if (side[j] == side[flip]) {
        same[j] += w;
        other[j] -= w;
      } else {
        same[j] -= w;
        other[j] += w;
      }
    }
    code ^= std::uint64_t{1} << bit;
    if (!have_best || strictly_better(sw, best) || (tied(sw, best) && code < best_code)) {
      have_best = true;
      best = sw;
      best_code = code;
    }
  }

  std::vector<std::size_t> assignment(n, 0);
  for (Agent i = 1; i < n; ++i) assignment[i] = (best_code >> (n - 1 - i)) & 1U;
  return {Partition(assignment), to_welfare(best, game)};
}

void check_budget(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the enumeration budget of " + std::to_string(limit));
  }
}

}  // namespace

void for_each_partition(std::size_t n,
                        const std::function<void(std::span<const std::size_t>)>& visit) {
  if (n == 0) return;
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      visit(a);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(1, 1);
}

OptimumResult max_welfare_exact(const ValuationMatrix& game, PartitionSpace space,
                                const EnumerationBudget& budget) {
  if (space == PartitionSpace::all) {
    check_budget(game.n(), budget.max_n_all_partitions, "max_welfare_exact(all)");
    return game.is_integer() ? best_over_all<std::int64_t>(game) : best_over_all<double>(game);
  }
  check_budget(game.n(), budget.max_n_two_partitions, "max_welfare_exact(two)");
  if (game.n() < 2) throw DimensionError("two-coalition partitions need at least two agents");
  return game.is_integer() ? best_over_two<std::int64_t>(game) : best_over_two<double>(game);
}

OptimumResult max_cw_exact_two(const ValuationMatrix& game, const EnumerationBudget& budget) {
  // SW and CW differ by the constant TV/2, so they share maximizers.
  OptimumResult best = max_welfare_exact(game, PartitionSpace::two, budget);
  best.value = correlation_welfare(game, best.partition);
  return best;
}

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw DimensionError("edge endpoint out of range");
  if (u == v) throw DimensionError("self-loops are not allowed");
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t BitGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[u * words_ + w]);
  return d;
}

BitGraph positive_graph(const ValuationMatrix& game) {
  BitGraph g(game.n());
  for (Agent i = 0; i < game.n(); ++i)
    for (Agent j = i + 1; j < game.n(); ++j)
      if (game.positive(i, j) && game.positive(j, i)) g.add_edge(i, j);
  return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Branch and bound over a relabeled graph where vertex 0 has the largest
// degree. Candidate sets are bitsets; each node colors its candidates
// greedily and prunes when clique size + color count cannot beat the best.
class CliqueSearch {
 public:
  explicit CliqueSearch(const BitGraph& g) : g_(g), words_(g.words()) {}

  std::vector<std::size_t> run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (g_.size() > 0) expand(all);
    return best_;
  }

 private:
  void expand(Bits candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colors;
    color_sort(candidates, order, colors);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current_.size() + colors[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current_.push_back(v);
      Bits next(words_);
      const std::uint64_t* row = g_.row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & row[w];
      if (any(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  void color_sort(const Bits& candidates, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& colors) const {
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (any(uncolored)) {
      ++color;
      Bits q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          q[w] &= q[w] - 1;
          uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          const std::uint64_t* row = g_.row(v);
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~row[x];
          order.push_back(v);
          colors.push_back(color);
        }
      }
    }
  }

  const BitGraph& g_;
  std::size_t words_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult max_clique(const BitGraph& graph) {
  const std::size_t n = graph.size();
  if (n == 0) return {};
  std::vector<std::size_t> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = graph.degree(v);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  BitGraph relabeled(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (graph.adjacent(by_degree[a], by_degree[b])) relabeled.add_edge(a, b);

  CliqueResult result;
  for (std::size_t v : CliqueSearch(relabeled).run()) result.vertices.push_back(by_degree[v]);
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

CliqueResult max_clique_exact(const ValuationMatrix& game, const EnumerationBudget& budget) {
  require_symmetric_aversion(game, "max_clique_exact");
  check_budget(game.n(), budget.max_clique_n, "max_clique_exact");
  return max_clique(positive_graph(game));
}

UpperBound welfare_upper_bound(const ValuationMatrix& game, const EnumerationBudget& budget) {
  require_symmetric_aversion(game, "welfare_upper_bound");
  const auto n = static_cast<std::int64_t>(game.n());
  std::optional<UpperBound> best;
  if (game.n() <= budget.max_clique_n) {
    const std::size_t omega = max_clique_exact(game, budget).size();
    best = UpperBound{Welfare::exact(n * (static_cast<std::int64_t>(omega) - 1)),
                      BoundSource::max_clique, omega};
  }
  if (game.meta().is_multipartite()) {
    const auto k = static_cast<std::int64_t>(game.meta().class_sizes.size());
    const Welfare kpart = Welfare::exact(n * (k - 1));
    if (!best || kpart < best->value) {
      const auto clique = best ? best->clique_size : std::nullopt;
      best = UpperBound{kpart, BoundSource::k_partite, clique};
    }
  }
  if (!best) {
    throw CapacityError("welfare_upper_bound: n = " + std::to_string(game.n()) +
                        " exceeds the clique budget and the game has no color classes");
  }
  return *best;
}

}  // namespace ashg
