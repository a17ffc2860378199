#include "ramsey/pointed.hpp"

#include <string>

namespace ramsey {

PointedMSet::PointedMSet(const FiniteMonoid& monoid, std::vector<std::vector<Index>> action,
                         Index basepoint)
    : monoid_(&monoid), action_(std::move(action)), basepoint_(basepoint) {
  const auto m_size = monoid.size();
  if (action_.size() != m_size) {
    throw InputError("action needs one row per monoid element (" + std::to_string(m_size) + ")");
  }
  const auto x_size = action_.front().size();
  if (x_size == 0) throw InputError("pointed set is empty");
  if (basepoint_ >= x_size) throw InputError("basepoint out of range");
  for (const auto& row : action_) {
    if (row.size() != x_size) throw InputError("action rows differ in length");
    for (Index v : row) {
      if (v >= x_size) throw InputError("action sends a point outside the set");
    }
  }
  for (Index x = 0; x < x_size; ++x) {
    if (action_[monoid.identity()][x] != x) throw InputError("identity does not act trivially");
  }
  for (Index m = 0; m < m_size; ++m) {
    for (Index n = 0; n < m_size; ++n) {
      const Index mn = monoid.product(m, n);
      for (Index x = 0; x < x_size; ++x) {
        if (action_[mn][x] != action_[m][action_[n][x]]) {
          throw InputError("action is not compatible with the product at (" + monoid.name(m) +
                           ", " + monoid.name(n) + ", " + std::to_string(x) + ")");
        }
      }
    }
  }
  std::vector<bool> hit(x_size, false);
  for (Index m = 0; m < m_size; ++m) hit[action_[m][basepoint_]] = true;
  for (Index x = 0; x < x_size; ++x) {
    if (!hit[x]) {
      throw InputError("point " + std::to_string(x) + " is not in the orbit of the basepoint");
    }
  }
}

BlockSequence::BlockSequence(std::vector<Block> blocks, const PointedMSet& space)
    : blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) throw InputError("block " + std::to_string(i) + " is empty");
    for (const auto& [n, x] : blocks_[i]) {
      if (x >= space.size()) throw InputError("block " + std::to_string(i) + " leaves the set");
    }
    if (i > 0 && blocks_[i - 1].rbegin()->first >= blocks_[i].begin()->first) {
      throw InputError("blocks " + std::to_string(i - 1) + " and " + std::to_string(i) +
                       " are not increasing");
    }
  }
}

std::set<Block> subspace_of_blocks(const BlockSequence& sequence, const PointedMSet& space,
                                   std::size_t depth) {
  const auto& blocks = sequence.blocks();
  const auto& monoid = space.monoid();
  std::set<Block> out;
  Block current;

  // choose blocks left to right; `used_identity` tracks the constraint
  auto extend = [&](auto&& self, std::size_t next, std::size_t chosen, bool used_identity) -> void {
    if (chosen > 0 && used_identity) out.insert(current);
    if (chosen == depth + 1) return;
    for (std::size_t i = next; i < blocks.size(); ++i) {
      for (Index m = 0; m < monoid.size(); ++m) {
        for (const auto& [n, x] : blocks[i]) current.emplace(n, space.act(m, x));
        self(self, i + 1, chosen + 1, used_identity || m == monoid.identity());
        for (const auto& [n, x] : blocks[i]) current.erase(n);
      }
    }
  };
  extend(extend, 0, 0, false);
  return out;
}

}  // namespace ramsey
