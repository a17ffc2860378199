#pragma once

#include <optional>
#include <vector>

#include "ramsey/monoid.hpp"
#include "ramsey/poset.hpp"

namespace ramsey {

/// mM = {m x : x in M}, sorted.
std::vector<Index> left_coset(const FiniteMonoid& monoid, Index m);

/// X(M): the distinct left cosets ordered by inclusion.
struct CosetPoset {
  /// Distinct cosets, ordered by their smallest owner.
  std::vector<std::vector<Index>> cosets;
  /// order.leq(i, j) <=> cosets[i] ⊆ cosets[j].
  FinitePoset order;
  /// owners[i] = {m : mM = cosets[i]}, sorted. These are the R-classes.
  std::vector<std::vector<Index>> owners;
  /// Coset index of each element.
  std::vector<Index> coset_of;
};

CosetPoset coset_poset(const FiniteMonoid& monoid);

/// R-classes (m R n <=> mM = nM), each sorted, listed by smallest member.
std::vector<std::vector<Index>> r_classes(const FiniteMonoid& monoid);

struct XmLinearity {
  bool linear = true;
  /// Owners (m, n) of two incomparable cosets mM, nM when not linear.
  std::optional<IndexPair> witness;
};

/// Whether inclusion is total on X(M).
XmLinearity is_xm_linear(const FiniteMonoid& monoid);

bool is_r_trivial(const FiniteMonoid& monoid);
/// Every element of a non-singleton R-class is fixed by left multiplication.
bool is_almost_r_trivial(const FiniteMonoid& monoid);
bool is_l_trivial(const FiniteMonoid& monoid);
/// MxM = MyM implies x = y.
bool is_j_trivial(const FiniteMonoid& monoid);

/// An R-trivial monoid as regressive maps: the poset is M itself ordered by
/// x <= y <=> xM ⊆ yM, and m acts by right multiplication x -> x m. With
/// the right-action product order this is an injective homomorphism, and
/// maps[m](identity) = m.
struct RegressiveRepresentation {
  FinitePoset order;
  std::vector<Transformation> maps;
};

/// Throws InputError when the monoid is not R-trivial.
RegressiveRepresentation regressive_representation(const FiniteMonoid& monoid);

struct RepresentationCheck {
  bool homomorphism = true;
  bool faithful = true;
  bool regressive = true;

  bool ok() const noexcept { return homomorphism && faithful && regressive; }
};

/// Re-checks the three guarantees by direct scan (all pairs up to 200
/// elements, generators only above that).
RepresentationCheck check_representation(const FiniteMonoid& monoid,
                                         const RegressiveRepresentation& rep);

}  // namespace ramsey
