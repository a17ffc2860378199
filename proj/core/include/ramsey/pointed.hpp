#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ramsey/monoid.hpp"

namespace ramsey {

/// A set X = {0..size-1} with a left M-action and a basepoint whose orbit is X.
/// Keeps a pointer to the monoid, which must outlive it.
class PointedMSet {
 public:
  /// action[m][x] = m . x. Throws InputError unless the identity acts
  /// trivially, (mn).x = m.(n.x) for all m, n, x, and M . basepoint = X.
  PointedMSet(const FiniteMonoid& monoid, std::vector<std::vector<Index>> action, Index basepoint);

  const FiniteMonoid& monoid() const { return *monoid_; }
  std::size_t size() const { return action_.empty() ? 0 : action_.front().size(); }
  Index basepoint() const { return basepoint_; }
  Index act(Index m, Index x) const { return action_[m][x]; }

 private:
  const FiniteMonoid* monoid_;
  std::vector<std::vector<Index>> action_;
  Index basepoint_;
};

/// Finite partial function from naturals to X.
using Block = std::map<std::uint64_t, Index>;

/// Blocks with f_i < f_{i+1}: max dom f_i < min dom f_{i+1}.
class BlockSequence {
 public:
  /// Throws InputError on an empty block, a point outside X, or a broken order.
  BlockSequence(std::vector<Block> blocks, const PointedMSet& space);

  const std::vector<Block>& blocks() const { return blocks_; }

 private:
  std::vector<Block> blocks_;
};

/// The part of [B] reachable with at most depth + 1 blocks: every increasing
/// selection of blocks, each acted on pointwise by a monoid element, at least
/// one of them the identity, glued together.
std::set<Block> subspace_of_blocks(const BlockSequence& sequence, const PointedMSet& space,
                                   std::size_t depth);

}  // namespace ramsey
