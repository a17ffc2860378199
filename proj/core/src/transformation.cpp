#include "ramsey/transformation.hpp"

#include <sstream>

#include "ramsey/poset.hpp"

namespace ramsey {

Transformation::Transformation(std::vector<Index> images) : images_(std::move(images)) {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] >= images_.size()) {
      throw InputError("transformation image " + std::to_string(images_[i]) + " at position " +
                       std::to_string(i) + " is outside the domain of size " +
                       std::to_string(images_.size()));
    }
  }
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<Index> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Index>(i);
  Transformation t;
  t.images_ = std::move(images);
  return t;
}

Transformation Transformation::constant(std::size_t n, Index value) {
  if (value >= n) throw InputError("constant value outside the domain");
  Transformation t;
  t.images_.assign(n, value);
  return t;
}

bool Transformation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Transformation::is_regressive(const FinitePoset& poset) const {
  if (poset.size() != images_.size()) return false;
  for (Index x = 0; x < images_.size(); ++x) {
    if (!poset.leq(images_[x], x)) return false;
  }
  return true;
}

bool Transformation::is_order_preserving(const FinitePoset& poset) const {
  if (poset.size() != images_.size()) return false;
  const auto n = static_cast<Index>(images_.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (poset.leq(x, y) && !poset.leq(images_[x], images_[y])) return false;
    }
  }
  return true;
}

std::string Transformation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i != 0) out << ',';
    out << images_[i];
  }
  out << ']';
  return out.str();
}

Transformation compose(const Transformation& outer, const Transformation& inner) {
  if (outer.domain_size() != inner.domain_size()) {
    throw InputError("cannot compose maps on domains of different sizes");
  }
  std::vector<Index> images(inner.domain_size());
  for (Index x = 0; x < images.size(); ++x) images[x] = outer(inner(x));
  return Transformation(std::move(images));
}

Transformation multiply(const Transformation& a, const Transformation& b, ProductOrder order) {
  return order == ProductOrder::left_action ? compose(a, b) : compose(b, a);
}

const char* to_string(ProductOrder order) noexcept {
  return order == ProductOrder::left_action ? "left" : "right";
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  // FNV-1a over the image words
  std::size_t h = 1469598103934665603ull;
  for (Index v : t.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ramsey
