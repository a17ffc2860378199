#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "ramsey/poset.hpp"
#include "ramsey/poset_enum.hpp"

using namespace ramsey;

namespace {

FinitePoset diamond() {
  const std::vector<IndexPair> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FinitePoset::from_covers(4, covers);
}

// 0 < 1 < 2 < 4 and 0 < 3 < 4: the pentagon N5
FinitePoset pentagon() {
  const std::vector<IndexPair> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return FinitePoset::from_covers(5, covers);
}

}  // namespace

TEST_CASE("covers close transitively") {
  const auto p = FinitePoset::chain(4);
  CHECK(p.leq(0, 3));
  CHECK_FALSE(p.leq(3, 0));
  CHECK(p.covers() == std::vector<IndexPair>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p.comparable_pair_count() == 6);
  CHECK(FinitePoset::antichain(3).comparable_pair_count() == 0);
}

TEST_CASE("cyclic covers report the cycle") {
  const std::vector<IndexPair> covers{{0, 1}, {1, 2}, {2, 0}};
  try {
    (void)FinitePoset::from_covers(3, covers);
    FAIL("expected CycleError");
  } catch (const CycleError& e) {
    CHECK(e.cycle().size() == 3);
  }
  const std::vector<IndexPair> bad{{0, 5}};
  CHECK_THROWS_AS(FinitePoset::from_covers(3, bad), InputError);
}

TEST_CASE("from_relation validates the axioms") {
  // 0 <= 1, 1 <= 2 but not 0 <= 2
  std::vector<std::uint8_t> r{1, 1, 0, 0, 1, 1, 0, 0, 1};
  CHECK_THROWS_AS(FinitePoset::from_relation(3, r), InputError);
  r[2] = 1;
  CHECK(FinitePoset::from_relation(3, r) == FinitePoset::chain(3));
}

TEST_CASE("levels count elements of the longest chain below") {
  const auto d = diamond();
  CHECK(d.level(0) == 1);
  CHECK(d.level(1) == 2);
  CHECK(d.level(2) == 2);
  CHECK(d.level(3) == 3);
  CHECK(d.height() == 3);
  const auto n5 = pentagon();
  CHECK(n5.level(3) == 2);
  CHECK(n5.level(4) == 4);
}

TEST_CASE("lattice check") {
  const auto d = is_lattice(diamond());
  REQUIRE(d);
  CHECK(d.lattice->meet(1, 2) == 0);
  CHECK(d.lattice->join(1, 2) == 3);
  CHECK(d.lattice->bottom() == 0);
  CHECK(d.lattice->top() == 3);

  // two minimal elements below two maximal ones: no meets, no joins
  const std::vector<IndexPair> bowtie{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const auto b = is_lattice(FinitePoset::from_covers(4, bowtie));
  CHECK_FALSE(b);
  CHECK(b.missing_bound.has_value());
  CHECK_FALSE(is_lattice(FinitePoset{}));
  CHECK(is_lattice(pentagon()));
}

TEST_CASE("lattice check agrees with the brute-force oracle on all posets up to 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      CHECK(static_cast<bool>(is_lattice(p)) == oracle::relation_is_lattice(oracle::relation_of(p)));
    }
  }
}

TEST_CASE("linear order test") {
  CHECK(is_linear_order(FinitePoset::chain(5)).linear);
  const auto d = is_linear_order(diamond());
  CHECK_FALSE(d.linear);
  CHECK(*d.incomparable == IndexPair{1, 2});
}

TEST_CASE("maximal chains") {
  const auto chains = maximal_chains(pentagon());
  CHECK(chains == std::vector<Chain>{{0, 1, 2, 4}, {0, 3, 4}});
  const std::vector<Index> short_chain{0, 1, 4};
  CHECK(is_chain(pentagon(), short_chain));
  CHECK_FALSE(is_maximal_chain(pentagon(), short_chain));
  CHECK(is_maximal_chain(pentagon(), chains[1]));
  const std::vector<Index> not_chain{1, 3};
  CHECK_FALSE(is_chain(pentagon(), not_chain));
}

TEST_CASE("level lemma witness on every admissible triple up to size 6") {
  std::size_t triples = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          for (Index z = 0; z < n; ++z) {
            if (!p.leq(y, x) || !p.leq(z, x) || p.comparable(y, z)) continue;
            const auto [y2, z2] = level_lemma_witness(p, x, y, z);
            CHECK(p.leq(y2, y));
            CHECK(p.leq(z2, z));
            CHECK_FALSE(p.comparable(y2, z2));
            CHECK(p.level(y2) == p.level(z2));
            ++triples;
          }
        }
      }
    }
  }
  CHECK(triples > 0);
  CHECK_THROWS_AS(level_lemma_witness(FinitePoset::chain(3), 2, 0, 1), InputError);
}

TEST_CASE("phi of a maximal chain is regressive, order-preserving and fixes the chain") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_posets(n, true)) {
      const auto lattice = *is_lattice(p).lattice;
      for (const auto& c : maximal_chains(p)) {
        const auto f = phi_chain(lattice, c);
        CHECK(f.is_regressive(p));
        CHECK(f.is_order_preserving(p));
        for (Index x : c) CHECK(f(x) == x);
      }
    }
  }
  const auto d = *is_lattice(diamond()).lattice;
  const std::vector<Index> partial{0, 3};
  CHECK_THROWS_AS(phi_chain(d, partial), InputError);
}

TEST_CASE("relabeling preserves the order") {
  const auto d = diamond();
  const std::vector<Index> perm{3, 2, 1, 0};
  const auto r = d.relabeled(perm);
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) CHECK(d.leq(a, b) == r.leq(perm[a], perm[b]));
}
