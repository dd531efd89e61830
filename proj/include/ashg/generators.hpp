#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ashg/game.hpp"

namespace ashg {

/// Source of uniform [0,1) draws. The default generators use SplitMix64
/// seeded with the instance seed; tests may substitute a fixed stream.
using UniformDraw = std::function<double()>;

// Every generator visits the unordered pairs (i, j), i < j, in row-major
// order and consumes exactly one draw per pair. A pair becomes an enemy
// pair (weight -n) when its draw is < p, or unconditionally when both agents
// share a color class.

/// Weighted Erdos-Renyi game: each pair is -n with probability p, else 1.
/// Requires n >= 1 and p in (0, 1).
ValuationMatrix gen_er(std::size_t n, double p, std::uint64_t seed);
ValuationMatrix gen_er(std::size_t n, double p, std::uint64_t seed, const UniformDraw& draw);

/// Random Turan game: k equal contiguous classes of n/k agents.
/// Requires k >= 2, k | n and p in [0, 1].
ValuationMatrix gen_turan(std::size_t n, std::size_t k, double p, std::uint64_t seed);

/// Random balanced k-partite game with the given nonincreasing class sizes,
/// where the smallest class holds at least q times the largest.
ValuationMatrix gen_balanced(const std::vector<std::size_t>& class_sizes, double p, double q,
                             std::uint64_t seed);

}  // namespace ashg
