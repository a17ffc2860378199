#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/transformation.hpp"

namespace ramsey {

using IndexPair = std::pair<Index, Index>;

/// A chain, listed bottom to top.
using Chain = std::vector<Index>;

/// A finite partial order on {0, ..., n-1}, stored as a dense relation
/// matrix. Levels (longest chain ending at an element, counted in elements)
/// are computed once at construction.
class FinitePoset {
 public:
  /// The empty poset.
  FinitePoset() = default;

  /// Reflexive-transitive closure of a cover list. Throws InputError for an
  /// out-of-range index and CycleError (carrying the cycle) if the cover
  /// digraph is not acyclic.
  static FinitePoset from_covers(std::size_t n, std::span<const IndexPair> covers);

  /// Validates reflexivity, antisymmetry and transitivity; `leq` is row-major.
  static FinitePoset from_relation(std::size_t n, std::vector<std::uint8_t> leq);

  /// Same as from_relation but skips the O(n^3) validation. Only for relations
  /// that are partial orders by construction (set inclusion, reachability).
  static FinitePoset from_trusted_relation(std::size_t n, std::vector<std::uint8_t> leq);

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool leq(Index a, Index b) const noexcept { return leq_[a * n_ + b] != 0; }
  bool less(Index a, Index b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const noexcept { return leq(a, b) || leq(b, a); }

  /// Number of elements in a longest chain whose maximum is x; 1 for minimal
  /// elements.
  Index level(Index x) const { return levels_.at(x); }
  std::span<const Index> levels() const noexcept { return levels_; }
  /// Largest level, 0 for the empty poset.
  Index height() const noexcept;

  /// Pairs (lo, hi) with lo < hi and nothing strictly between, sorted.
  std::vector<IndexPair> covers() const;
  std::vector<Index> minimal_elements() const;
  std::vector<Index> maximal_elements() const;
  std::vector<Index> down_set(Index x) const;
  /// Number of strictly comparable pairs.
  std::size_t comparable_pair_count() const;

  /// Same order with element i renamed to perm[i].
  FinitePoset relabeled(std::span<const Index> perm) const;

  std::span<const std::uint8_t> relation() const noexcept { return leq_; }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  FinitePoset(std::size_t n, std::vector<std::uint8_t> leq);
  void compute_levels();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Index> levels_;
};

struct LatticeCheck;

/// A finite poset in which every pair has a meet and a join.
class FiniteLattice {
 public:
  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }

 private:
  friend LatticeCheck is_lattice(const FinitePoset& poset);

  FinitePoset poset_;
  std::vector<Index> meet_;
  std::vector<Index> join_;
  Index bottom_ = 0;
  Index top_ = 0;
};

struct LatticeCheck {
  std::optional<FiniteLattice> lattice;
  /// Some pair lacking a meet or a join when `lattice` is empty.
  std::optional<IndexPair> missing_bound;

  explicit operator bool() const noexcept { return lattice.has_value(); }
};

/// The lattice refinement of `poset`, or a pair without a meet or join. The
/// empty poset is not a lattice (no top or bottom).
LatticeCheck is_lattice(const FinitePoset& poset);

struct LinearityCheck {
  bool linear = true;
  std::optional<IndexPair> incomparable;
};

/// Totality test. The empty poset counts as linear.
LinearityCheck is_linear_order(const FinitePoset& poset);

Index level(const FinitePoset& poset, Index x);

/// All inclusion-maximal chains (minimal-to-maximal paths in the Hasse
/// diagram), in lexicographic order.
std::vector<Chain> maximal_chains(const FinitePoset& poset);

bool is_chain(const FinitePoset& poset, std::span<const Index> elements);
bool is_maximal_chain(const FinitePoset& poset, std::span<const Index> elements);

/// Given incomparable y, z below x, returns incomparable y' <= y and z' <= z
/// of equal level. The pair is built by walking a longest chain under the
/// higher of y, z down to the other's level; if that pair ever fails the
/// check, all candidate pairs are searched. Throws InputError when the
/// preconditions do not hold.
IndexPair level_lemma_witness(const FinitePoset& poset, Index x, Index y, Index z);

/// x -> max{c in C : c <= x} for a maximal chain C of a lattice. The result
/// is regressive, order-preserving, and fixes C pointwise. Throws InputError
/// when C is not a maximal chain.
Transformation phi_chain(const FiniteLattice& lattice, std::span<const Index> chain);

}  // namespace ramsey
