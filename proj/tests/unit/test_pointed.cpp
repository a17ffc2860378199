#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ramsey/pointed.hpp"

using namespace ramsey;

namespace {

FiniteMonoid trivial_monoid() { return monoid_from_cayley(std::vector<std::vector<Index>>{{0}}, 0); }

// M = {1, T}, T*T = T, acting on {0, 1} with T constant 0
FiniteMonoid one_idempotent() {
  return monoid_from_cayley(std::vector<std::vector<Index>>{{0, 1}, {1, 1}}, 0);
}

}  // namespace

TEST_CASE("pointed set validation") {
  const auto m = one_idempotent();
  CHECK_NOTHROW(PointedMSet(m, {{0, 1}, {0, 0}}, 1));
  // orbit of 0 is {0}
  CHECK_THROWS_AS(PointedMSet(m, {{0, 1}, {0, 0}}, 0), InputError);
  // identity must act trivially
  CHECK_THROWS_AS(PointedMSet(m, {{1, 0}, {0, 0}}, 1), InputError);
  // T acting as a swap breaks T*T = T
  CHECK_THROWS_AS(PointedMSet(m, {{0, 1}, {1, 0}}, 1), InputError);
  CHECK_THROWS_AS(PointedMSet(m, {{0, 1}}, 1), InputError);
}

TEST_CASE("block order") {
  const auto m = trivial_monoid();
  const PointedMSet x(m, {{0}}, 0);
  CHECK_NOTHROW(BlockSequence({{{0, 0}, {2, 0}}, {{3, 0}}}, x));
  CHECK_THROWS_AS(BlockSequence({{{0, 0}, {3, 0}}, {{3, 0}}}, x), InputError);
  CHECK_THROWS_AS(BlockSequence({{}}, x), InputError);
  CHECK_THROWS_AS(BlockSequence({{{0, 4}}}, x), InputError);
}

TEST_CASE("small subspaces") {
  const auto m = trivial_monoid();
  const PointedMSet x(m, {{0}}, 0);
  const Block f1{{0, 0}}, f2{{1, 0}};
  CHECK(subspace_of_blocks(BlockSequence({f1}, x), x, 0) == std::set<Block>{f1});
  const auto two = subspace_of_blocks(BlockSequence({f1, f2}, x), x, 1);
  CHECK(two == std::set<Block>{f1, f2, Block{{0, 0}, {1, 0}}});

  const auto t = one_idempotent();
  const PointedMSet y(t, {{0, 1}, {0, 0}}, 1);
  const BlockSequence b({{{0, 1}}, {{1, 1}}}, y);
  const auto s = subspace_of_blocks(b, y, 1);
  CHECK(s == oracle::subspace(b.blocks(), y, 1));
  // {1}, {1}', and the three glued pairs with at least one identity
  CHECK(s.size() == 5);
}

TEST_CASE("subspace grows with depth and every member keeps an unmoved block") {
  const auto t = one_idempotent();
  const PointedMSet y(t, {{0, 1}, {0, 0}}, 1);
  const BlockSequence b({{{0, 1}}, {{1, 1}, {2, 1}}, {{4, 1}}}, y);
  std::size_t last = 0;
  for (std::size_t depth = 0; depth <= 3; ++depth) {
    const auto s = subspace_of_blocks(b, y, depth);
    CHECK(s.size() >= last);
    last = s.size();
    for (const auto& member : s) {
      bool untouched = false;
      for (const auto& block : b.blocks()) {
        bool same = true;
        for (const auto& [k, v] : block) {
          const auto it = member.find(k);
          same = same && it != member.end() && it->second == v;
        }
        untouched = untouched || same;
      }
      CHECK(untouched);
    }
  }
}
