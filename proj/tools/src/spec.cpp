#include <limits>

#include "ramsey/cli.hpp"
#include "ramsey/coxeter.hpp"
#include "ramsey/faces.hpp"
#include "ramsey/function_monoids.hpp"

namespace ramsey::cli {

namespace {

std::size_t positive_n(const Json& spec) {
  if (!spec.contains("n")) throw InputError("missing field \"n\"");
  const auto& n = spec.at("n");
  if (!n.is_number_integer() || n.get<long long>() < 1) {
    throw InputError("field \"n\" must be a positive integer");
  }
  return n.get<std::size_t>();
}

ProductOrder product_field(const Json& spec, ProductOrder fallback) {
  if (!spec.contains("product")) return fallback;
  const auto& p = spec.at("product");
  if (p == "left") return ProductOrder::left_action;
  if (p == "right") return ProductOrder::right_action;
  throw InputError("field \"product\" must be \"left\" or \"right\"");
}

bool with_constants(const Json& spec) {
  if (!spec.contains("with_constants")) return false;
  if (!spec.at("with_constants").is_boolean()) {
    throw InputError("field \"with_constants\" must be a boolean");
  }
  return spec.at("with_constants").get<bool>();
}

std::vector<std::string> plain_names(const FiniteMonoid& monoid) {
  std::vector<std::string> names;
  for (Index e = 0; e < monoid.size(); ++e) names.push_back(monoid.name(e));
  return names;
}

BuiltMonoid from_functions(const std::string& kind, const Json& spec,
                           const std::vector<Transformation>& fns, const FinitePoset& poset,
                           ProductOrder fallback, std::size_t budget) {
  const auto order = product_field(spec, fallback);
  auto monoid = with_constants(spec) ? augment_with_constants(fns, poset, order, budget)
                                     : function_monoid(poset.size(), fns, order, budget);
  auto names = plain_names(monoid);
  return BuiltMonoid{kind, std::move(monoid), std::move(names), order, std::nullopt};
}

}  // namespace

BuiltMonoid build_monoid(const Json& spec, std::size_t budget) {
  if (!spec.is_object()) throw InputError("spec must be a JSON object");
  if (!spec.contains("kind") || !spec.at("kind").is_string()) {
    throw InputError("missing field \"kind\"");
  }
  const auto kind = spec.at("kind").get<std::string>();
  const auto unbounded = std::numeric_limits<std::size_t>::max();

  if (kind == "catalan" || kind == "tetris") {
    const auto n = positive_n(spec);
    const auto fns = kind == "catalan" ? all_op_regressive(FinitePoset::chain(n), unbounded)
                                       : tetris_functions(n);
    return from_functions(kind, spec, fns, FinitePoset::chain(n), ProductOrder::left_action,
                          budget);
  }
  if (kind == "regressive" || kind == "op_regressive" || kind == "k_level_lipschitz") {
    const auto poset = poset_from_json(spec.contains("poset") ? spec.at("poset") : Json());
    if (kind == "regressive") {
      return from_functions(kind, spec, all_regressive(poset), poset, ProductOrder::right_action,
                            budget);
    }
    auto fns = all_op_regressive(poset);
    if (kind == "k_level_lipschitz") {
      if (!spec.contains("k") || !spec.at("k").is_number_integer() || spec.at("k").get<long long>() < 1) {
        throw InputError("field \"k\" must be a positive integer");
      }
      fns = k_level_lipschitz_filter(poset, fns, spec.at("k").get<unsigned>());
    }
    return from_functions(kind, spec, fns, poset, ProductOrder::left_action, budget);
  }
  if (kind == "function_class") {
    const auto fc = function_class_spec_from_json(spec);
    const auto fns = function_class(fc);
    return from_functions(kind, spec, fns, fc.poset,
                          fc.order_preserving ? ProductOrder::left_action : ProductOrder::right_action,
                          budget);
  }
  if (kind == "hecke") {
    const auto order = product_field(spec, ProductOrder::left_action);
    const auto group = build_coxeter_group(coxeter_from_json(spec), budget);
    auto monoid = hecke_monoid(group, order);
    std::vector<std::string> names;
    for (Index e = 0; e < monoid.size(); ++e) {
      names.push_back(e == monoid.identity() ? "id" : "π_" + monoid.word(e));
    }
    return BuiltMonoid{kind, std::move(monoid), std::move(names), order, std::nullopt};
  }
  if (kind == "faces") {
    auto fm = face_monoid(arrangement_from_json(spec));
    std::vector<std::string> names;
    for (const auto& f : fm.faces) names.push_back(to_string(f.sign));
    auto faces = faces_to_json(fm.faces);
    return BuiltMonoid{kind, std::move(fm.monoid), std::move(names), std::nullopt, std::move(faces)};
  }
  if (kind == "cayley") {
    auto monoid = monoid_from_json(spec);
    auto names = plain_names(monoid);
    return BuiltMonoid{kind, std::move(monoid), std::move(names), std::nullopt, std::nullopt};
  }
  throw InputError("field \"kind\" has unknown value \"" + kind + "\"");
}

}  // namespace ramsey::cli
