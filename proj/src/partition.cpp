#include "ashg/partition.hpp"

#include <string>
#include <unordered_map>

#include "ashg/error.hpp"

namespace ashg {

std::vector<std::size_t> canonicalize(std::span<const std::size_t> assignment) {
  if (assignment.empty()) throw DimensionError("cannot canonicalize an empty assignment");
  std::unordered_map<std::size_t, std::size_t> relabel;
  std::vector<std::size_t> out;
  out.reserve(assignment.size());
  for (std::size_t label : assignment) {
    auto [it, inserted] = relabel.try_emplace(label, relabel.size());
    out.push_back(it->second);
  }
  return out;
}

Partition::Partition(std::span<const std::size_t> assignment)
    : assignment_(canonicalize(assignment)) {
  std::size_t count = 0;
  for (std::size_t b : assignment_) count = std::max(count, b + 1);
  blocks_.resize(count);
  for (Agent i = 0; i < assignment_.size(); ++i) blocks_[assignment_[i]].push_back(i);
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = i;
  return Partition(a);
}

Partition Partition::grand_coalition(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

Partition Partition::from_blocks(std::size_t n, const std::vector<Coalition>& blocks) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> a(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DimensionError("partition blocks must be nonempty");
    for (Agent i : blocks[b]) {
      if (i >= n) throw DimensionError("agent " + std::to_string(i) + " out of range");
      if (a[i] != kUnset) throw DimensionError("agent " + std::to_string(i) + " in two blocks");
      a[i] = b;
    }
  }
  for (Agent i = 0; i < n; ++i)
    if (a[i] == kUnset) throw DimensionError("missing agent " + std::to_string(i));
  return Partition(a);
}

}  // namespace ashg
