#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ashg/game.hpp"

namespace ashg {

using Coalition = std::vector<Agent>;

/// Relabels blocks 0, 1, 2, ... in order of first appearance.
/// Throws DimensionError on an empty assignment.
std::vector<std::size_t> canonicalize(std::span<const std::size_t> assignment);

/// A coalition structure over agents 0..n-1, always held in canonical form,
/// so two partitions are equal iff their assignments are equal.
class Partition {
 public:
  /// Accepts arbitrary nonnegative labels and canonicalizes them.
  explicit Partition(std::span<const std::size_t> assignment);
  explicit Partition(const std::vector<std::size_t>& assignment)
      : Partition(std::span<const std::size_t>(assignment)) {}

  static Partition singletons(std::size_t n);
  static Partition grand_coalition(std::size_t n);
  /// Builds a partition from disjoint nonempty blocks covering 0..n-1.
  static Partition from_blocks(std::size_t n, const std::vector<Coalition>& blocks);

  std::size_t size() const { return assignment_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(Agent i) const { return assignment_.at(i); }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  /// Blocks in label order; members ascending.
  const std::vector<Coalition>& blocks() const { return blocks_; }
  bool same_block(Agent i, Agent j) const { return assignment_[i] == assignment_[j]; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.assignment_ == b.assignment_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.assignment_ <=> b.assignment_;
  }

 private:
  std::vector<std::size_t> assignment_;
  std::vector<Coalition> blocks_;
};

inline Partition canonicalize(const Partition& pi) { return pi; }

}  // namespace ashg
