#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ramsey/cosets.hpp"
#include "ramsey/function_monoids.hpp"
#include "ramsey/poset_enum.hpp"

using namespace ramsey;

namespace {

std::set<std::vector<Index>> as_set(const std::vector<Transformation>& fns) {
  std::set<std::vector<Index>> out;
  for (const auto& f : fns) out.emplace(f.images().begin(), f.images().end());
  return out;
}

std::set<std::vector<Index>> as_set(const std::vector<std::vector<Index>>& fns) {
  return {fns.begin(), fns.end()};
}

}  // namespace

TEST_CASE("regressive enumeration matches brute force on all posets up to 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const auto all = all_regressive(p);
      CHECK(as_set(all) == as_set(oracle::brute_maps(p, false)));
      CHECK(all.size() == regressive_count_bound(p));
      CHECK(as_set(all_op_regressive(p)) == as_set(oracle::brute_maps(p, true)));
    }
  }
  CHECK(all_regressive(FinitePoset::chain(3)).size() == 6);
  CHECK(all_regressive(FinitePoset::antichain(4)).size() == 1);
  CHECK(all_op_regressive(FinitePoset::antichain(4)).size() == 1);
}

TEST_CASE("op-regressive maps are closed and contain the identity") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const auto fns = all_op_regressive(p, 1'000'000);
      const std::set<Transformation> members(fns.begin(), fns.end());
      CHECK(members.count(Transformation::identity(n)) == 1);
      const auto m = function_monoid(n, fns, ProductOrder::left_action);
      CHECK(m.size() == fns.size());
    }
  }
}

TEST_CASE("function budget") {
  CHECK_THROWS_AS(all_regressive(FinitePoset::chain(9)), BudgetError);
  CHECK_NOTHROW(all_regressive(FinitePoset::chain(8)));
}

TEST_CASE("Catalan sizes") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(catalan_monoid(n).size() == oracle::catalan_number(n));
  CHECK(catalan_monoid(4).size() == 14);
}

TEST_CASE("tetris monoid") {
  CHECK(tetris_monoid(4).size() == 8);
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(tetris_monoid(n).size() == (std::size_t{1} << (n - 1)));
    const auto fns = tetris_functions(n);
    CHECK(std::find(fns.begin(), fns.end(), tetris_map(n)) != fns.end());
  }
  CHECK(tetris_map(4).to_string() == "[0,0,1,2]");
}

TEST_CASE("1-level-Lipschitz on chains is the tetris condition") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto chain = FinitePoset::chain(n);
    const auto op = all_op_regressive(chain, 1'000'000);
    CHECK(as_set(k_level_lipschitz_filter(chain, op, 1)) == as_set(tetris_functions(n)));
  }
  // brute force: every map of [4], filtered by the metric definition
  std::set<std::vector<Index>> brute;
  for (const auto& f : oracle::brute_maps(FinitePoset::chain(4), true)) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const long d = static_cast<long>(f[i + 1]) - static_cast<long>(f[i]);
      ok = ok && d >= -1 && d <= 1;
    }
    if (ok) brute.insert(f);
  }
  CHECK(brute.size() == 8);
  CHECK(as_set(tetris_functions(4)) == brute);
}

TEST_CASE("k at least the height keeps everything") {
  for (const auto& p : enumerate_posets(5)) {
    const auto fns = all_op_regressive(p);
    CHECK(k_level_lipschitz_filter(p, fns, p.height()).size() == fns.size());
    for (const auto& f : k_level_lipschitz_filter(p, fns, 1)) CHECK(is_k_level_lipschitz(p, f, 1));
  }
}

TEST_CASE("function_class") {
  FunctionClassSpec spec{FinitePoset::chain(4), true, std::nullopt, true};
  CHECK(function_class(spec).size() == 8);
  spec.chain_1_lipschitz = false;
  spec.level_lipschitz_k = 1;
  CHECK(function_class(spec).size() == 8);
  spec.level_lipschitz_k.reset();
  CHECK(function_class(spec).size() == 14);
  spec.order_preserving = false;
  CHECK(function_class(spec).size() == 24);
  FunctionClassSpec bad{FinitePoset::antichain(2), false, std::nullopt, true};
  CHECK_THROWS_AS(function_class(bad), InputError);
}

TEST_CASE("comparability witness for the tetris pair") {
  const auto chain = FinitePoset::chain(4);
  const Transformation f({0, 1, 1, 1}), g({0, 0, 1, 2});
  const std::vector<Transformation> pair{f, g};
  const auto w = comparability_witness(pair, chain);
  REQUIRE(w);
  CHECK(w->f == 0);
  CHECK(w->g == 1);
  CHECK(w->x == 1);
  CHECK(w->y == 3);
  // f(3) = 1 < 2 = g(3) and f(1) = 1 > 0 = g(1)
  CHECK(f(3) == 1);
  CHECK(g(3) == 2);
  CHECK(f(1) == 1);
  CHECK(g(1) == 0);
  CHECK_FALSE(comparability_witness(tetris_functions(3), FinitePoset::chain(3)));
  CHECK_FALSE(comparability_witness(std::vector<Transformation>{f}, chain));
  const std::vector<Transformation> bad{Transformation({0, 2, 2, 3})};
  CHECK_THROWS_AS(comparability_witness(bad, chain), InputError);
}

TEST_CASE("a comparability witness certifies non-linearity on every poset up to 5") {
  std::size_t witnessed = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const auto fns = all_op_regressive(p);
      if (!comparability_witness(fns, p)) continue;
      ++witnessed;
      for (auto order : {ProductOrder::left_action, ProductOrder::right_action}) {
        CHECK_FALSE(is_xm_linear(function_monoid(n, fns, order)).linear);
      }
    }
  }
  CHECK(witnessed > 0);
}

TEST_CASE("minimal constants") {
  CHECK(minimal_constants(FinitePoset::chain(3)).size() == 1);
  CHECK(minimal_constants(FinitePoset::antichain(3)).size() == 3);
  const std::vector<IndexPair> v{{0, 2}, {1, 2}};
  const auto c = minimal_constants(FinitePoset::from_covers(3, v));
  REQUIRE(c.size() == 2);
  CHECK(c[0].to_string() == "[0,0,0]");
  CHECK(c[1].to_string() == "[1,1,1]");
}

TEST_CASE("constants leave X(M) linearity unchanged on posets up to 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const auto fns = all_regressive(p);
      const auto plain = function_monoid(n, fns, ProductOrder::right_action);
      const auto aug = augment_with_constants(fns, p);
      CHECK(is_xm_linear(aug).linear == is_xm_linear(plain).linear);
      CHECK(is_almost_r_trivial(aug));
    }
  }
  const auto one = FinitePoset::chain(1);
  CHECK(augment_with_constants(all_regressive(one), one).size() == 1);
  const std::vector<Transformation> not_regressive{Transformation({1, 1})};
  CHECK_THROWS_AS(augment_with_constants(not_regressive, FinitePoset::chain(2)), InputError);
}

TEST_CASE("the two product orders disagree on known instances") {
  // pinned: the 3-chain under each order
  const auto chain3 = FinitePoset::chain(3);
  const auto all3 = all_regressive(chain3);
  CHECK_FALSE(is_xm_linear(function_monoid(3, all3, ProductOrder::right_action)).linear);
  CHECK(is_r_trivial(function_monoid(3, all3, ProductOrder::right_action)));
  CHECK_FALSE(is_r_trivial(function_monoid(3, all3, ProductOrder::left_action)));
  CHECK(is_xm_linear(tetris_monoid(3, ProductOrder::left_action)).linear);
  CHECK_FALSE(is_xm_linear(tetris_monoid(3, ProductOrder::right_action)).linear);
}
