#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/monoid.hpp"

namespace ramsey {

using Permutation = std::vector<Index>;

/// Symmetric, m[i][i] = 1, m[i][j] >= 2 off the diagonal. Finite entries only.
struct CoxeterMatrix {
  std::vector<std::vector<unsigned>> m;

  std::size_t rank() const { return m.size(); }
  /// Throws InputError on a malformed table.
  void validate() const;
  bool operator==(const CoxeterMatrix&) const = default;
};

enum class CoxeterFamily { A, B, I2 };

struct CoxeterType {
  CoxeterFamily family = CoxeterFamily::A;
  unsigned n = 1;  // rank for A and B, m for I2
};

std::string to_string(const CoxeterType& type);

/// Involutive permutation generators of [degree] plus the matrix they satisfy.
struct CoxeterRealization {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  CoxeterMatrix matrix;
};

/// A_n on n+1 points, B_n as signed permutations of 2n points, I2(m) on the
/// vertices of an m-gon. Orders of generator products are checked.
CoxeterRealization realization(const CoxeterType& type);

/// User-supplied generators; checks involutions and every pairwise order.
CoxeterRealization custom_realization(std::vector<Permutation> gens, CoxeterMatrix matrix);

/// Order of the permutation p in the symmetric group.
std::size_t permutation_order(const Permutation& p);

inline constexpr std::size_t kDefaultGroupBudget = 100'000;

/// The group generated by a realization, with BFS lengths. Element 0 is the
/// identity; elements are numbered in shortlex order of reduced words.
struct CoxeterGroupTable {
  std::vector<Permutation> elements;
  std::vector<unsigned> length;
  std::vector<std::vector<Index>> left;   // left[w][i] = s_i w
  std::vector<std::vector<Index>> right;  // right[w][i] = w s_i
  std::vector<std::vector<Index>> reduced_word;  // shortlex-least
  CoxeterMatrix matrix;

  std::size_t size() const { return elements.size(); }
  std::size_t rank() const { return matrix.rank(); }
};

CoxeterGroupTable build_coxeter_group(const CoxeterRealization& realization,
                                      std::size_t budget = kDefaultGroupBudget);

/// The maps pi_i on W. Under left_action pi_i(w) = s_i w when that is longer,
/// else w; under right_action pi_i(w) = w s_i when longer, else w. Either way
/// a word in the pi's sends the identity to the product of its letters.
std::vector<Transformation> hecke_generators(const CoxeterGroupTable& group, ProductOrder order);

/// H0(W) generated by the pi_i, named a, b, c, ... Throws std::logic_error
/// if idempotence, a braid relation, |H0| = |W|, R- or J-triviality fails.
FiniteMonoid hecke_monoid(const CoxeterGroupTable& group,
                          ProductOrder order = ProductOrder::left_action);

struct SubwordReport {
  std::size_t pairs_checked = 0;
  std::size_t words_enumerated = 0;
  /// (x, y) with xM ⊆ yM disagreeing with the prefix test.
  std::optional<std::pair<Index, Index>> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

/// For every pair (x, y) compares xM ⊆ yM against "some generator word of
/// length <= max_len for x starts with a word for y". Elements with no word
/// that short are skipped; max_len >= the longest element's length covers all.
SubwordReport verify_initial_subword(const FiniteMonoid& hecke, std::size_t max_len);

}  // namespace ramsey
