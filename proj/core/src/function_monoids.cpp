#include "ramsey/function_monoids.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace ramsey {

namespace {

void check_budget(const FinitePoset& poset, std::size_t budget) {
  const auto count = regressive_count_bound(poset);
  if (count > budget) {
    throw BudgetError("poset admits " +
                          (count == std::numeric_limits<std::size_t>::max()
                               ? std::string("too many")
                               : std::to_string(count)) +
                          " candidate regressive maps, over the budget of " + std::to_string(budget),
                      count);
  }
}

// Odometer over images f(x) in down-set(x); `keep_partial` prunes prefixes.
template <typename Keep>
std::vector<Transformation> enumerate_regressive(const FinitePoset& poset, Keep keep_partial) {
  const auto n = static_cast<Index>(poset.size());
  std::vector<std::vector<Index>> choices(n);
  for (Index x = 0; x < n; ++x) choices[x] = poset.down_set(x);

  std::vector<Transformation> out;
  std::vector<Index> images(n, 0);
  auto assign = [&](auto&& self, Index x) -> void {
    if (x == n) {
      out.emplace_back(images);
      return;
    }
    for (Index v : choices[x]) {
      images[x] = v;
      if (keep_partial(images, x)) self(self, x + 1);
    }
  };
  assign(assign, 0);
  return out;
}

}  // namespace

std::size_t regressive_count_bound(const FinitePoset& poset) {
  std::size_t product = 1;
  for (Index x = 0; x < poset.size(); ++x) {
    const std::size_t d = poset.down_set(x).size();
    if (product > std::numeric_limits<std::size_t>::max() / d) {
      return std::numeric_limits<std::size_t>::max();
    }
    product *= d;
  }
  return product;
}

std::vector<Transformation> all_regressive(const FinitePoset& poset, std::size_t budget) {
  check_budget(poset, budget);
  return enumerate_regressive(poset, [](const std::vector<Index>&, Index) { return true; });
}

std::vector<Transformation> all_op_regressive(const FinitePoset& poset, std::size_t budget) {
  check_budget(poset, budget);
  // prune as soon as the newly assigned point breaks monotonicity with an
  // earlier one
  return enumerate_regressive(poset, [&](const std::vector<Index>& images, Index x) {
    for (Index y = 0; y < x; ++y) {
      if (poset.leq(y, x) && !poset.leq(images[y], images[x])) return false;
      if (poset.leq(x, y) && !poset.leq(images[x], images[y])) return false;
    }
    return true;
  });
}

bool is_k_level_lipschitz(const FinitePoset& poset, const Transformation& f, unsigned k) {
  const auto n = static_cast<Index>(poset.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!poset.less(y, x) || poset.level(x) != poset.level(y) + 1) continue;
      const auto lx = static_cast<long>(poset.level(f(x)));
      const auto ly = static_cast<long>(poset.level(f(y)));
      if (std::labs(lx - ly) > static_cast<long>(k)) return false;
    }
  }
  return true;
}

std::vector<Transformation> k_level_lipschitz_filter(const FinitePoset& poset,
                                                     std::span<const Transformation> fns,
                                                     unsigned k) {
  std::vector<Transformation> out;
  for (const auto& f : fns) {
    if (is_k_level_lipschitz(poset, f, k)) out.push_back(f);
  }
  return out;
}

bool is_chain_1_lipschitz(const Transformation& f) {
  for (Index i = 0; i + 1 < f.domain_size(); ++i) {
    const auto step = static_cast<long>(f(i + 1)) - static_cast<long>(f(i));
    if (step > 1 || step < -1) return false;
  }
  return true;
}

std::vector<Transformation> function_class(const FunctionClassSpec& spec, std::size_t budget) {
  if (spec.chain_1_lipschitz && !is_linear_order(spec.poset).linear) {
    throw InputError("chain_1_lipschitz requires the poset to be a chain");
  }
  auto fns = spec.order_preserving ? all_op_regressive(spec.poset, budget)
                                   : all_regressive(spec.poset, budget);
  if (spec.level_lipschitz_k) {
    if (*spec.level_lipschitz_k == 0) throw InputError("k_level_lipschitz must be positive");
    fns = k_level_lipschitz_filter(spec.poset, fns, *spec.level_lipschitz_k);
  }
  if (spec.chain_1_lipschitz) {
    // chains are not necessarily labelled bottom-up; measure along the order
    std::vector<Index> by_level(spec.poset.size());
    for (Index x = 0; x < spec.poset.size(); ++x) by_level[spec.poset.level(x) - 1] = x;
    std::erase_if(fns, [&](const Transformation& f) {
      for (std::size_t i = 0; i + 1 < by_level.size(); ++i) {
        const auto a = static_cast<long>(spec.poset.level(f(by_level[i])));
        const auto b = static_cast<long>(spec.poset.level(f(by_level[i + 1])));
        if (std::labs(b - a) > 1) return true;
      }
      return false;
    });
  }
  return fns;
}

FiniteMonoid function_monoid(std::size_t domain_size, std::span<const Transformation> fns,
                             ProductOrder order, std::size_t max_elements) {
  std::vector<Transformation> gens;
  std::set<Transformation> seen;
  for (const auto& f : fns) {
    if (f.is_identity() || !seen.insert(f).second) continue;
    gens.push_back(f);
  }
  return closure_from_transformations(domain_size, gens, order, max_elements);
}

Transformation tetris_map(std::size_t n) {
  std::vector<Index> images(n);
  for (Index k = 0; k < n; ++k) images[k] = k == 0 ? 0 : k - 1;
  return Transformation(std::move(images));
}

FiniteMonoid catalan_monoid(std::size_t n, ProductOrder order) {
  if (n == 0) throw InputError("Catalan monoid needs n >= 1");
  const auto fns = all_op_regressive(FinitePoset::chain(n), std::numeric_limits<std::size_t>::max());
  return function_monoid(n, fns, order);
}

std::vector<Transformation> tetris_functions(std::size_t n) {
  if (n == 0) throw InputError("tetris monoid needs n >= 1");
  auto fns = all_op_regressive(FinitePoset::chain(n), std::numeric_limits<std::size_t>::max());
  std::erase_if(fns, [](const Transformation& f) { return !is_chain_1_lipschitz(f); });
  return fns;
}

FiniteMonoid tetris_monoid(std::size_t n, ProductOrder order) {
  const auto fns = tetris_functions(n);
  auto monoid = function_monoid(n, fns, order);
  if (monoid.size() != fns.size()) {
    throw std::logic_error("1-Lipschitz maps are not closed under composition");
  }
  return monoid;
}

std::optional<ComparabilityWitness> comparability_witness(std::span<const Transformation> fns,
                                                          const FinitePoset& poset) {
  for (std::size_t i = 0; i < fns.size(); ++i) {
    if (!fns[i].is_regressive(poset) || !fns[i].is_order_preserving(poset)) {
      throw InputError("map " + std::to_string(i) + " " + fns[i].to_string() +
                       " is not regressive and order-preserving");
    }
  }
  const auto n = static_cast<Index>(poset.size());
  for (std::size_t f = 0; f < fns.size(); ++f) {
    for (std::size_t g = 0; g < fns.size(); ++g) {
      if (f == g) continue;
      for (Index x = 0; x < n; ++x) {
        if (poset.leq(fns[f](x), fns[g](x))) continue;
        for (Index y = 0; y < n; ++y) {
          if (!poset.leq(fns[g](y), fns[f](y))) return ComparabilityWitness{f, g, x, y};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Transformation> minimal_constants(const FinitePoset& poset) {
  std::vector<Transformation> out;
  for (Index m : poset.minimal_elements()) out.push_back(Transformation::constant(poset.size(), m));
  return out;
}

FiniteMonoid augment_with_constants(std::span<const Transformation> fns, const FinitePoset& poset,
                                    ProductOrder order, std::size_t max_elements) {
  for (const auto& f : fns) {
    if (!f.is_regressive(poset)) {
      throw InputError("map " + f.to_string() + " is not regressive");
    }
  }
  std::vector<Transformation> gens(fns.begin(), fns.end());
  for (auto& c : minimal_constants(poset)) gens.push_back(std::move(c));
  return function_monoid(poset.size(), gens, order, max_elements);
}

}  // namespace ramsey
