#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "ramsey/cosets.hpp"
#include "ramsey/coxeter.hpp"

using namespace ramsey;

namespace {

std::vector<CoxeterType> bundled() {
  std::vector<CoxeterType> types{{CoxeterFamily::A, 1}, {CoxeterFamily::A, 2},
                                 {CoxeterFamily::A, 3}, {CoxeterFamily::B, 2},
                                 {CoxeterFamily::B, 3}};
  for (unsigned m = 3; m <= 6; ++m) types.push_back({CoxeterFamily::I2, m});
  return types;
}

std::string pi_name(const FiniteMonoid& h, Index e) {
  return e == h.identity() ? "id" : "π_" + h.word(e);
}

}  // namespace

TEST_CASE("group orders") {
  const std::map<std::string, std::size_t> expected{
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48},
      {"I2(3)", 6}, {"I2(4)", 8}, {"I2(5)", 10}, {"I2(6)", 12}};
  for (const auto& t : bundled()) {
    const auto w = build_coxeter_group(realization(t));
    CHECK(w.size() == expected.at(to_string(t)));
    CHECK(w.length[0] == 0);
  }
  CHECK(build_coxeter_group(realization({CoxeterFamily::A, 2})).length.back() == 3);
}

TEST_CASE("unsupported parameters") {
  CHECK_THROWS_AS(realization({CoxeterFamily::A, 0}), InputError);
  CHECK_THROWS_AS(realization({CoxeterFamily::B, 1}), InputError);
  CHECK_THROWS_AS(realization({CoxeterFamily::I2, 2}), InputError);
  CHECK_THROWS_AS(build_coxeter_group(realization({CoxeterFamily::A, 5}), 100), BudgetError);
}

TEST_CASE("custom realizations are checked") {
  const std::vector<Permutation> gens{{1, 0, 2}, {0, 2, 1}};
  CHECK(build_coxeter_group(custom_realization(gens, CoxeterMatrix{{{1, 3}, {3, 1}}})).size() == 6);
  CHECK_THROWS_AS(custom_realization(gens, CoxeterMatrix{{{1, 2}, {2, 1}}}), InputError);
  CHECK_THROWS_AS(custom_realization(gens, CoxeterMatrix{{{1, 3}, {2, 1}}}), InputError);
  const std::vector<Permutation> not_involution{{1, 2, 0}, {0, 2, 1}};
  CHECK_THROWS_AS(custom_realization(not_involution, CoxeterMatrix{{{1, 3}, {3, 1}}}), InputError);
}

TEST_CASE("0-Hecke monoids") {
  for (const auto& t : bundled()) {
    for (auto order : {ProductOrder::left_action, ProductOrder::right_action}) {
      const auto w = build_coxeter_group(realization(t));
      const auto h = hecke_monoid(w, order);
      CHECK(h.size() == w.size());
      CHECK(is_r_trivial(h));
      CHECK(is_j_trivial(h));
      CHECK(oracle::r_trivial(h));
      CHECK(is_xm_linear(h).linear == (w.rank() < 2));
      CHECK(oracle::xm_linear(h) == (w.rank() < 2));
      CHECK(verify_initial_subword(h, w.length.back()).ok());
    }
  }
}

TEST_CASE("H0(A2) coset table") {
  const auto h = hecke_monoid(build_coxeter_group(realization({CoxeterFamily::A, 2})));
  const std::vector<std::pair<std::string, std::vector<std::string>>> expected{
      {"id", {"id", "π_a", "π_b", "π_ab", "π_ba", "π_aba"}},
      {"π_a", {"π_a", "π_ab", "π_aba"}},
      {"π_b", {"π_b", "π_ba", "π_aba"}},
      {"π_ab", {"π_ab", "π_aba"}},
      {"π_ba", {"π_ba", "π_aba"}},
      {"π_aba", {"π_aba"}},
  };
  const auto cp = coset_poset(h);
  REQUIRE(cp.cosets.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    REQUIRE(cp.owners[i].size() == 1);
    CHECK(pi_name(h, cp.owners[i][0]) == expected[i].first);
    std::vector<std::string> members;
    for (Index e : cp.cosets[i]) members.push_back(pi_name(h, e));
    CHECK(members == expected[i].second);
  }
  // π_aba = π_bab
  const std::vector<std::size_t> bab{1, 0, 1};
  CHECK(pi_name(h, h.evaluate(bab)) == "π_aba");
  const auto lin = is_xm_linear(h);
  REQUIRE_FALSE(lin.linear);
  CHECK(pi_name(h, lin.witness->first) == "π_a");
  CHECK(pi_name(h, lin.witness->second) == "π_b");
}

TEST_CASE("initial subword report on A2") {
  const auto h = hecke_monoid(build_coxeter_group(realization({CoxeterFamily::A, 2})));
  const auto r = verify_initial_subword(h, 3);
  CHECK(r.ok());
  CHECK(r.pairs_checked == 36);
  CHECK(r.words_enumerated == 1 + 2 + 4 + 8);
}

TEST_CASE("permutation order") {
  CHECK(permutation_order({1, 2, 0, 4, 3}) == 6);
  CHECK(permutation_order({0, 1}) == 1);
}
