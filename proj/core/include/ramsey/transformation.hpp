#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

class FinitePoset;

/// A self-map of {0, ..., n-1}, stored as its image list.
class Transformation {
 public:
  Transformation() = default;

  /// Throws InputError if some image is >= images.size().
  explicit Transformation(std::vector<Index> images);

  static Transformation identity(std::size_t n);
  static Transformation constant(std::size_t n, Index value);

  std::size_t domain_size() const noexcept { return images_.size(); }
  Index operator()(Index x) const { return images_[x]; }
  std::span<const Index> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_regressive(const FinitePoset& poset) const;
  bool is_order_preserving(const FinitePoset& poset) const;

  /// "[0,1,1,1]"
  std::string to_string() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<Index> images_;
};

/// outer ∘ inner, i.e. x -> outer(inner(x)).
Transformation compose(const Transformation& outer, const Transformation& inner);

/// How the product `a * b` of two maps in a transformation monoid is read.
///
/// `left_action`: (ab)(x) = a(b(x)); the monoid acts on the left of the
/// carrier, as with ordinary function composition.
/// `right_action`: (ab)(x) = b(a(x)); maps are applied left to right, so the
/// monoid acts on the right (x^(ab) = (x^a)^b).
///
/// The two orders give anti-isomorphic monoids, so left cosets under one are
/// right cosets under the other. Which one a result about X(M) refers to
/// matters and is recorded with every monoid built from maps.
enum class ProductOrder { left_action, right_action };

Transformation multiply(const Transformation& a, const Transformation& b, ProductOrder order);

const char* to_string(ProductOrder order) noexcept;

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

}  // namespace ramsey
