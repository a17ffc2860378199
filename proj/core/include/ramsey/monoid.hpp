#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/transformation.hpp"

namespace ramsey {

inline constexpr std::size_t kDefaultElementBudget = 200'000;
/// Monoids up to this size keep a dense Cayley table; larger ones multiply
/// by walking the right Cayley graph along the second factor's label.
inline constexpr std::size_t kDenseTableLimit = 2048;
/// Full O(n^3) associativity validation is done up to this size; above it
/// Light's test over a generating set is used.
inline constexpr std::size_t kFullAssociativityLimit = 300;

/// A finite monoid given by its elements 0..size-1, a generating list, and the
/// left and right Cayley graphs of those generators. Every element carries a
/// shortlex-minimal word over the generators (in generator order). Immutable
/// once built.
class FiniteMonoid {
 public:
  std::size_t size() const noexcept { return size_; }
  Index identity() const noexcept { return identity_; }

  /// Element index of each generator, in generator order (may repeat).
  std::span<const Index> generators() const noexcept { return gens_; }
  const std::vector<std::string>& generator_names() const noexcept { return gen_names_; }

  Index product(Index a, Index b) const;
  /// a * generator[g]
  Index times_generator(Index a, std::size_t g) const { return right_[a * gens_.size() + g]; }
  /// generator[g] * a
  Index generator_times(std::size_t g, Index a) const { return left_[a * gens_.size() + g]; }

  /// Shortlex-minimal generator word (generator positions); empty for identity.
  std::vector<std::size_t> label(Index e) const;
  /// The label spelled with generator names; "" for the identity.
  std::string word(Index e) const;
  /// word(e), or "id" for the identity.
  std::string name(Index e) const;
  /// Element reached by multiplying out a word of generator positions.
  Index evaluate(std::span<const std::size_t> word) const;

  bool has_dense_table() const noexcept { return !table_.empty(); }

  /// Maps realizing the elements when built from transformations, else empty.
  std::span<const Transformation> maps() const noexcept { return maps_; }
  std::optional<ProductOrder> product_order() const noexcept { return order_; }
  std::optional<Index> find(const Transformation& map) const;

 private:
  friend FiniteMonoid closure_from_transformations(std::size_t, std::span<const Transformation>,
                                                   ProductOrder, std::size_t,
                                                   std::vector<std::string>);
  friend FiniteMonoid monoid_from_cayley(std::span<const std::vector<Index>>, Index,
                                         std::optional<std::vector<Index>>,
                                         std::vector<std::string>);
  void fill_dense_table();

  std::size_t size_ = 0;
  Index identity_ = 0;
  std::vector<Index> gens_;
  std::vector<std::string> gen_names_;
  std::vector<Index> right_;  // size * |gens|
  std::vector<Index> left_;   // size * |gens|
  std::vector<Index> parent_;
  std::vector<std::uint32_t> last_gen_;
  std::vector<Index> bfs_order_;
  std::vector<Index> table_;
  std::vector<Transformation> maps_;
  std::optional<ProductOrder> order_;
  std::unordered_map<Transformation, Index, TransformationHash> index_;
};

/// "a", "b", ... for up to 26 generators, otherwise "g0", "g1", ...
std::vector<std::string> default_generator_names(std::size_t count);

/// Breadth-first closure of `gens` under `order`, starting from the identity
/// map. Elements are identified by map equality; the identity is element 0
/// and elements are numbered in shortlex order of their labels. Throws
/// BudgetError once more than `max_elements` elements are found and
/// InputError if the generators live on different domains.
FiniteMonoid closure_from_transformations(std::size_t domain_size,
                                          std::span<const Transformation> gens,
                                          ProductOrder order,
                                          std::size_t max_elements = kDefaultElementBudget,
                                          std::vector<std::string> names = {});

/// Imports a Cayley table (row a, column b holds a*b). Validates shape, the
/// identity law and associativity (InputError with a witness otherwise).
/// Without explicit generators a generating set is picked greedily in index
/// order. Labels are shortlex over that generating list.
FiniteMonoid monoid_from_cayley(std::span<const std::vector<Index>> table, Index identity,
                                std::optional<std::vector<Index>> gens = std::nullopt,
                                std::vector<std::string> names = {});

}  // namespace ramsey
