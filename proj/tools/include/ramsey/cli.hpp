#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/io.hpp"
#include "ramsey/monoid.hpp"

namespace ramsey::cli {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kInputError = 2, kBudgetExceeded = 3 };

/// A monoid built from a JSON spec plus display names for its elements.
struct BuiltMonoid {
  std::string kind;
  FiniteMonoid monoid;
  std::vector<std::string> names;  // per element
  std::optional<ProductOrder> product;
  std::optional<Json> extra;  // faces for "faces" specs

  ElementNamer namer() const {
    return [n = names](Index e) { return n[e]; };
  }
};

/// kinds: catalan, tetris, regressive, op_regressive, k_level_lipschitz,
/// function_class, hecke, faces, cayley. Function kinds accept "product"
/// ("left" | "right") and, when a poset is given, "with_constants".
BuiltMonoid build_monoid(const Json& spec, std::size_t element_budget);

/// Entry point shared by main() and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
