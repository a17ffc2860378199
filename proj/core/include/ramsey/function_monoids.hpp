#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/monoid.hpp"
#include "ramsey/poset.hpp"

namespace ramsey {

/// Reject function enumeration when the product of down-set sizes exceeds this.
inline constexpr std::size_t kDefaultFunctionBudget = 100'000;

/// Which maps on a poset to collect.
struct FunctionClassSpec {
  FinitePoset poset;
  bool order_preserving = false;
  std::optional<unsigned> level_lipschitz_k;
  /// |f(i+1) - f(i)| <= 1 along the chain; only valid on chains.
  bool chain_1_lipschitz = false;
};

/// Product over x of |down-set(x)|, saturating.
std::size_t regressive_count_bound(const FinitePoset& poset);

/// All maps with f(x) <= x, in lexicographic order of image lists.
std::vector<Transformation> all_regressive(const FinitePoset& poset,
                                           std::size_t budget = kDefaultFunctionBudget);

/// The order-preserving members of all_regressive, same order.
std::vector<Transformation> all_op_regressive(const FinitePoset& poset,
                                              std::size_t budget = kDefaultFunctionBudget);

/// Keeps f when every covering-level pair x > y (level(x) = level(y) + 1)
/// has |level(f x) - level(f y)| <= k.
std::vector<Transformation> k_level_lipschitz_filter(const FinitePoset& poset,
                                                     std::span<const Transformation> fns,
                                                     unsigned k);
bool is_k_level_lipschitz(const FinitePoset& poset, const Transformation& f, unsigned k);

/// |f(i+1) - f(i)| <= 1 for consecutive points of the chain 0 < 1 < ... < n-1.
bool is_chain_1_lipschitz(const Transformation& f);

/// Enumerates the class described by `spec`. Throws InputError if
/// chain_1_lipschitz is set on a non-chain.
std::vector<Transformation> function_class(const FunctionClassSpec& spec,
                                           std::size_t budget = kDefaultFunctionBudget);

/// The monoid generated by `fns` (the identity is always present). Identity
/// maps and duplicates are dropped from the generator list first.
FiniteMonoid function_monoid(std::size_t domain_size, std::span<const Transformation> fns,
                             ProductOrder order,
                             std::size_t max_elements = kDefaultElementBudget);

/// Tetris map k -> max(k - 1, 0) on [n].
Transformation tetris_map(std::size_t n);

/// C_n: all order-preserving regressive maps of the n-chain.
FiniteMonoid catalan_monoid(std::size_t n, ProductOrder order = ProductOrder::left_action);
/// I_n: the 1-Lipschitz members of C_n. Throws std::logic_error if the
/// class were ever not closed under composition.
FiniteMonoid tetris_monoid(std::size_t n, ProductOrder order = ProductOrder::left_action);
std::vector<Transformation> tetris_functions(std::size_t n);

struct ComparabilityWitness {
  std::size_t f = 0;  // positions in the input list
  std::size_t g = 0;
  Index x = 0;
  Index y = 0;
};

/// First (f, g, x, y) in lexicographic order with f(x) not<= g(x) and
/// f(y) not>= g(y). Such a quadruple shows fM and gM are incomparable in the
/// monoid the maps generate; no witness proves nothing. Throws InputError
/// naming the first map that is not regressive and order-preserving.
std::optional<ComparabilityWitness> comparability_witness(std::span<const Transformation> fns,
                                                          const FinitePoset& poset);

/// One constant map per minimal element, in element order.
std::vector<Transformation> minimal_constants(const FinitePoset& poset);

/// The monoid generated by fns together with minimal_constants(poset).
/// Throws InputError if some map in fns is not regressive.
FiniteMonoid augment_with_constants(std::span<const Transformation> fns, const FinitePoset& poset,
                                    ProductOrder order = ProductOrder::right_action,
                                    std::size_t max_elements = kDefaultElementBudget);

}  // namespace ramsey
