#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey/poset.hpp"

namespace ramsey {

/// Default and hard upper bounds on the size of enumerated posets. Canonical
/// codes pack the n*(n-1) off-diagonal relation bits into 64 bits.
inline constexpr std::size_t kDefaultEnumerationBound = 7;
inline constexpr std::size_t kMaxEnumerationBound = 8;

struct CanonicalForm {
  std::uint64_t code = 0;
  /// perm[i] is the canonical position of original element i.
  std::vector<Index> perm;
};

/// Minimum relation encoding over all relabelings that respect the sorted
/// (level, #below, #above) partition. Equal codes <=> isomorphic posets.
CanonicalForm canonical_form(const FinitePoset& poset);

/// One representative per isomorphism class of posets on n elements, each
/// relabeled into canonical order, sorted by canonical code. With
/// `lattices_only` the non-lattices are dropped. n = 0 yields the empty poset
/// (which is not a lattice). Throws InputError if n exceeds `bound`.
std::vector<FinitePoset> enumerate_posets(std::size_t n, bool lattices_only = false,
                                          std::size_t bound = kDefaultEnumerationBound);

/// Streaming form of enumerate_posets.
void for_each_poset(std::size_t n, bool lattices_only,
                    const std::function<void(const FinitePoset&)>& visit,
                    std::size_t bound = kDefaultEnumerationBound);

}  // namespace ramsey
