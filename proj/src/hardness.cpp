#include "ashg/hardness.hpp"

#include <algorithm>
#include <string>

#include "ashg/error.hpp"
#include "ashg/rng.hpp"

namespace ashg {

SimpleGraph::SimpleGraph(std::size_t n_vertices,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : n_(n_vertices) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw DimensionError("edge endpoint out of range");
  if (u == v) throw DimensionError("self-loops are not allowed");
  edges_.emplace(std::min(u, v), std::max(u, v));
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

bool SimpleGraph::is_clique(const std::vector<std::size_t>& vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!adjacent(vertices[a], vertices[b])) return false;
  return true;
}

BitGraph SimpleGraph::to_bitgraph() const {
  BitGraph g(n_);
  for (const auto& [u, v] : edges_) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  SimpleGraph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

ValuationMatrix reduce_clique_to_ashg(const SimpleGraph& g, std::int64_t v_minus) {
  if (v_minus < 1) throw ParameterError("v_minus must be at least 1");
  InstanceMeta meta;
  meta.kind = ModelKind::reduced;
  meta.v_minus = v_minus;
  return ValuationMatrix::symmetric_int_from(
      g.n_vertices() + 1,
      [&](Agent i, Agent j) -> std::int64_t {
        if (i == 0) return 1;
        return g.adjacent(i - 1, j - 1) ? 0 : -v_minus;
      },
      1, std::move(meta));
}

namespace {

void check_gadget(const SimpleGraph& g, const ValuationMatrix& game) {
  if (game.n() != g.n_vertices() + 1)
    throw ConsistencyError("gadget has " + std::to_string(game.n()) + " agents, graph has " +
                           std::to_string(g.n_vertices()) + " vertices");
  if (!game.is_integer()) throw ConsistencyError("gadget must be an integer-mode game");
  std::optional<std::int64_t> enemy;
  for (Agent i = 0; i < game.n(); ++i) {
    for (Agent j = i + 1; j < game.n(); ++j) {
      const std::int64_t w = game.pair_scaled(i, j);
      const std::int64_t unit2 = 2 * game.unit();
      bool ok;
      if (i == 0) {
        ok = w == unit2;
      } else if (g.adjacent(i - 1, j - 1)) {
        ok = w == 0;
      } else {
        if (!enemy) enemy = w;
        ok = w < 0 && w == *enemy;
      }
      if (!ok)
        throw ConsistencyError("game is not the gadget of this graph (pair " + std::to_string(i) +
                               ", " + std::to_string(j) + ")");
    }
  }
}

}  // namespace

std::vector<std::size_t> extract_clique(const SimpleGraph& g, const ValuationMatrix& game,
                                        const Partition& pi) {
  check_gadget(g, game);
  if (pi.size() != game.n()) throw DimensionError("partition size does not match the gadget");
  std::vector<std::size_t> current;
  for (Agent a : pi.blocks()[pi.block_of(0)])
    if (a != 0) current.push_back(a - 1);

  for (;;) {
    auto violator = std::find_if(current.begin(), current.end(), [&](std::size_t u) {
      return std::any_of(current.begin(), current.end(),
                         [&](std::size_t w) { return w != u && !g.adjacent(u, w); });
    });
    if (violator == current.end()) return current;
    current.erase(violator);
  }
}

ValuationMatrix asymmetrize_zero_edges(const ValuationMatrix& game, std::uint64_t seed) {
  if (game.meta().kind != ModelKind::reduced || !game.is_integer() || !game.symmetric())
    throw ModeError("asymmetrize_zero_edges expects a symmetric reduced gadget");
  const std::size_t n = game.n();
  const std::int64_t unit = game.unit();
  std::vector<std::int64_t> full(n * n, 0);
  SplitMix64 rng(seed);
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = i + 1; j < n; ++j) {
      const std::int64_t w = game.scaled(i, j);
      if (w == 0) {
        const std::int64_t dir = rng.coin() ? 1 : -1;
        full[i * n + j] = dir * unit;
        full[j * n + i] = -dir * unit;
      } else {
        full[i * n + j] = full[j * n + i] = w;
      }
    }
  }
  return ValuationMatrix::asymmetric_int_from(
      n, [&](Agent i, Agent j) { return full[i * n + j]; }, unit, game.meta());
}

}  // namespace ashg
