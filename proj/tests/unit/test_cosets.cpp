#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/cosets.hpp"
#include "ramsey/function_monoids.hpp"
#include "ramsey/poset_enum.hpp"

using namespace ramsey;

namespace {

void check_against_oracle(const FiniteMonoid& m) {
  const auto cosets = oracle::cosets(m);
  for (Index a = 0; a < m.size(); ++a) {
    const auto mine = left_coset(m, a);
    CHECK(std::set<Index>(mine.begin(), mine.end()) == cosets[a]);
  }
  const auto cp = coset_poset(m);
  CHECK(cp.cosets.size() == oracle::count_r_classes(m));
  for (Index i = 0; i < cp.cosets.size(); ++i) {
    for (Index j = 0; j < cp.cosets.size(); ++j) {
      const std::set<Index> a(cp.cosets[i].begin(), cp.cosets[i].end());
      const std::set<Index> b(cp.cosets[j].begin(), cp.cosets[j].end());
      CHECK(cp.order.leq(i, j) == oracle::subset(a, b));
    }
  }
  const auto lin = is_xm_linear(m);
  CHECK(lin.linear == oracle::xm_linear(m));
  if (!lin.linear) {
    const auto [x, y] = *lin.witness;
    CHECK_FALSE(oracle::subset(cosets[x], cosets[y]));
    CHECK_FALSE(oracle::subset(cosets[y], cosets[x]));
  }
  CHECK(is_r_trivial(m) == oracle::r_trivial(m));
  CHECK(is_almost_r_trivial(m) == oracle::almost_r_trivial(m));
}

}  // namespace

TEST_CASE("cosets match direct products on many monoids") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const auto fns = all_regressive(p);
      for (auto order : {ProductOrder::left_action, ProductOrder::right_action}) {
        check_against_oracle(function_monoid(n, fns, order));
        check_against_oracle(augment_with_constants(all_op_regressive(p), p, order));
      }
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) check_against_oracle(tetris_monoid(n));
}

TEST_CASE("tetris linearity threshold by direct computation") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(is_xm_linear(tetris_monoid(n)).linear == (n < 4));
}

TEST_CASE("Green triviality on small examples") {
  // Z/2: a group, one R-class
  const std::vector<std::vector<Index>> z2{{0, 1}, {1, 0}};
  const auto g = monoid_from_cayley(z2, 0);
  CHECK_FALSE(is_r_trivial(g));
  CHECK_FALSE(is_l_trivial(g));
  CHECK_FALSE(is_j_trivial(g));
  CHECK(r_classes(g).size() == 1);

  // left-zero band plus identity: ab = a, so aM = {a}, Ma = {a, b}
  const std::vector<std::vector<Index>> lz{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  const auto m = monoid_from_cayley(lz, 0);
  CHECK(is_r_trivial(m));
  CHECK_FALSE(is_l_trivial(m));
  CHECK_FALSE(is_j_trivial(m));
  CHECK_FALSE(is_xm_linear(m).linear);

  CHECK(is_j_trivial(catalan_monoid(4)));
}

TEST_CASE("antichain of two plus constants") {
  const auto p = FinitePoset::antichain(2);
  const auto right = augment_with_constants(all_regressive(p), p, ProductOrder::right_action);
  CHECK(right.size() == 3);
  CHECK_FALSE(is_r_trivial(right));
  CHECK(is_almost_r_trivial(right));
  const auto left = augment_with_constants(all_regressive(p), p, ProductOrder::left_action);
  CHECK(is_r_trivial(left));
}

TEST_CASE("regressive representation") {
  const auto m = tetris_monoid(5);
  const auto rep = regressive_representation(m);
  CHECK(rep.maps.size() == m.size());
  CHECK(check_representation(m, rep).ok());
  for (Index e = 0; e < m.size(); ++e) {
    CHECK(rep.maps[e](m.identity()) == e);
    CHECK(rep.maps[e].is_regressive(rep.order));
  }
  const std::vector<std::vector<Index>> z2{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(regressive_representation(monoid_from_cayley(z2, 0)), InputError);
}

TEST_CASE("representation check catches a broken map") {
  const auto m = catalan_monoid(3);
  auto rep = regressive_representation(m);
  std::swap(rep.maps[1], rep.maps[2]);
  CHECK_FALSE(check_representation(m, rep).ok());
}
