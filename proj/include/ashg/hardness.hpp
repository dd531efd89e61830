#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ashg/exact.hpp"
#include "ashg/game.hpp"
#include "ashg/partition.hpp"

namespace ashg {

/// Undirected graph without self-loops on vertices 0..n_vertices-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n_vertices) : n_(n_vertices) {}
  SimpleGraph(std::size_t n_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t n_vertices() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool is_clique(const std::vector<std::size_t>& vertices) const;
  BitGraph to_bitgraph() const;

  static SimpleGraph path(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  static SimpleGraph complete(std::size_t n);

 private:
  std::size_t n_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;  // (u, v) with u < v
};

/// Gadget game on |V| + 1 agents. Agent 0 is the hub z and agent u + 1
/// stands for vertex u:
///   v(z, a_u) = 1,  v(a_u, a_w) = 0 if {u,w} is an edge, -v_minus otherwise.
ValuationMatrix reduce_clique_to_ashg(const SimpleGraph& g, std::int64_t v_minus = 1);

/// Starts from the vertices sharing the hub's coalition and repeatedly drops
/// the lowest-index vertex that misses an adjacency, until a clique remains.
/// With welfare counted over ordered pairs, SW(pi) <= 2 * |result|.
std::vector<std::size_t> extract_clique(const SimpleGraph& g, const ValuationMatrix& game,
                                        const Partition& pi);

/// Rewrites every zero-valued pair {i,j} of a gadget as v_i(j) = 1,
/// v_j(i) = -1, with the direction drawn from SplitMix64(seed). Every
/// partition keeps its social welfare.
ValuationMatrix asymmetrize_zero_edges(const ValuationMatrix& game, std::uint64_t seed);

}  // namespace ashg
