#pragma once

// Reference implementations used by the tests. Everything here works on a
// plain dense matrix and is written without calling into the library, so the
// library's results can be checked against it.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "ashg/game.hpp"
#include "ashg/welfare_value.hpp"

namespace ashg {
inline std::ostream& operator<<(std::ostream& os, const Welfare& w) { return os << w.to_string(); }
}  // namespace ashg

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;  // w[i][j] = v_i(j), diagonal 0
using Labels = std::vector<std::size_t>;

inline std::int64_t sw(const Matrix& w, const Labels& a) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j && a[i] == a[j]) s += w[i][j];
  return s;
}

inline std::int64_t tv(const Matrix& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j) s += w[i][j];
  return s;
}

// 2 * CW, to stay in integers.
inline std::int64_t cw_doubled(const Matrix& w, const Labels& a) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j) s += a[i] == a[j] ? w[i][j] : -w[i][j];
  return s;
}

// Every set partition, built by placing agent i into each existing block or
// a new one.
inline void partitions(std::size_t n, const std::function<void(const Labels&)>& visit) {
  Labels a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      visit(a);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (n == 0) return;
  a[0] = 0;
  rec(1, 1);
}

inline std::size_t block_count(const Labels& a) {
  std::size_t m = 0;
  for (std::size_t x : a) m = std::max(m, x + 1);
  return m;
}

inline std::int64_t max_sw_all(const Matrix& w) {
  std::int64_t best = INT64_MIN;
  partitions(w.size(), [&](const Labels& a) { best = std::max(best, sw(w, a)); });
  return best;
}

// Max over partitions with at most `max_blocks` coalitions and at least
// `min_blocks`.
inline std::int64_t max_sw_blocks(const Matrix& w, std::size_t min_blocks, std::size_t max_blocks) {
  std::int64_t best = INT64_MIN;
  partitions(w.size(), [&](const Labels& a) {
    const std::size_t b = block_count(a);
    if (b >= min_blocks && b <= max_blocks) best = std::max(best, sw(w, a));
  });
  return best;
}

inline bool is_clique(const std::vector<std::vector<bool>>& adj, const std::vector<std::size_t>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!adj[vs[a]][vs[b]]) return false;
  return true;
}

// Largest clique by checking every vertex subset; n <= 20.
inline std::size_t max_clique_size(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = n == 0 ? 0 : 1;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) vs.push_back(v);
    if (is_clique(adj, vs)) best = size;
  }
  return best;
}

// Test-side instance generation, using the standard library engine rather
// than the library's generator.
inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  Matrix w(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w[i][j] = w[j][i] = d(rng);
  return w;
}

inline Matrix random_asymmetric(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  Matrix w(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) w[i][j] = d(rng);
  return w;
}

inline Labels random_labels(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  Labels a(n);
  for (auto& x : a) x = d(rng);
  return a;
}

inline ashg::ValuationMatrix to_game(const Matrix& w) {
  const std::size_t n = w.size();
  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) symmetric = symmetric && w[i][j] == w[j][i];
  if (symmetric) {
    std::vector<std::int64_t> upper;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) upper.push_back(w[i][j]);
    return ashg::ValuationMatrix::symmetric_int(n, upper);
  }
  std::vector<std::int64_t> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.push_back(w[i][j]);
  return ashg::ValuationMatrix::asymmetric_int(n, off);
}

// Dense copy read through the public accessor, for generated games.
inline Matrix from_game(const ashg::ValuationMatrix& g) {
  Matrix w(g.n(), std::vector<std::int64_t>(g.n(), 0));
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j)
      if (i != j) w[i][j] = g.scaled(i, j);
  return w;
}

inline std::vector<std::vector<bool>> positive_adjacency(const Matrix& w) {
  std::vector<std::vector<bool>> adj(w.size(), std::vector<bool>(w.size(), false));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j && w[i][j] > 0 && w[j][i] > 0) adj[i][j] = true;
  return adj;
}

}  // namespace oracle
