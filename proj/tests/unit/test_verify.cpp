#include <doctest.h>

#include <sstream>

#include "ramsey/coxeter.hpp"
#include "ramsey/faces.hpp"
#include "ramsey/function_monoids.hpp"
#include "ramsey/poset_enum.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

FiniteLattice lattice(const FinitePoset& p) { return *is_lattice(p).lattice; }

FiniteLattice diamond() {
  const std::vector<IndexPair> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return lattice(FinitePoset::from_covers(4, covers));
}

}  // namespace

TEST_CASE("predictions") {
  CHECK(predict_all_regressive(FinitePoset::antichain(4)));
  CHECK_FALSE(predict_all_regressive(FinitePoset::chain(3)));
  const std::vector<IndexPair> one_edge{{0, 1}};
  CHECK(predict_all_regressive(FinitePoset::from_covers(3, one_edge)));

  for (unsigned k = 1; k <= 3; ++k) CHECK(predict_k_lip(lattice(FinitePoset::chain(2)), k));
  CHECK(predict_op_lattice(lattice(FinitePoset::chain(2))));
  CHECK(predict_k_lip(lattice(FinitePoset::chain(3)), 1));
  CHECK_FALSE(predict_k_lip(lattice(FinitePoset::chain(3)), 2));
  CHECK_FALSE(predict_op_lattice(diamond()));
  CHECK_FALSE(predict_k_lip(diamond(), 1));
  CHECK_FALSE(predict_k_lip(diamond(), 2));
}

TEST_CASE("all-regressive classification") {
  const auto r = run_classification({Family::all_regressive}, 5);
  CHECK(r.instances.size() == 87);
  CHECK(r.disagreements() == 0);
  CHECK(r.skipped() == 0);
  CHECK(r.instances.front().id == "n1-0");
}

TEST_CASE("lattice classifications") {
  for (FamilySpec f : {FamilySpec{Family::op_lattice}, FamilySpec{Family::k_lip, 1},
                       FamilySpec{Family::k_lip, 2}}) {
    const auto r = run_classification(f, 6);
    CHECK(r.instances.size() == 1 + 1 + 1 + 2 + 5 + 15);
    CHECK(r.ok());
  }
}

TEST_CASE("k_lip(1) on chains matches the tetris table") {
  const auto r = run_classification({Family::k_lip, 1}, 6);
  const auto table = tetris_linearity_table(6);
  for (const auto& rec : r.instances) {
    if (!is_linear_order(rec.poset).linear) continue;
    CHECK(*rec.observed == table[rec.poset.size() - 1].linear);
  }
}

TEST_CASE("constants lemma") {
  const auto r = run_classification({Family::constants_lemma}, 4);
  CHECK(r.instances.size() == 1 + 2 + 5 + 16);
  CHECK(r.ok());
}

TEST_CASE("range limits and budgets") {
  CHECK_THROWS_AS(run_classification({Family::all_regressive}, 6), InputError);
  CHECK_THROWS_AS(run_classification({Family::op_lattice}, 7), InputError);
  CHECK_THROWS_AS(run_classification({Family::k_lip, 0}, 3), InputError);
  const auto tight = run_classification({Family::all_regressive}, 3, 4);
  CHECK(tight.skipped() > 0);
  CHECK(tight.disagreements() == 0);
  CHECK_FALSE(tight.ok());
}

TEST_CASE("JSON lines report") {
  const auto r = run_classification({Family::op_lattice}, 4);
  std::ostringstream out;
  write_jsonl(r, out);
  const auto text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(r.instances.size() + 1));
  CHECK(text.find("\"summary\"") != std::string::npos);
  std::ostringstream again;
  write_jsonl(run_classification({Family::op_lattice}, 4), again);
  CHECK(again.str() == text);
}

TEST_CASE("tetris table") {
  const auto t = tetris_linearity_table(8);
  REQUIRE(t.size() == 8);
  for (const auto& row : t) CHECK(row.linear == (row.n < 4));
  CHECK_THROWS_AS(tetris_linearity_table(9), InputError);
}

TEST_CASE("generator incomparability") {
  const auto h = hecke_monoid(build_coxeter_group(realization({CoxeterFamily::A, 2})));
  const auto w = generator_incomparability(h);
  REQUIRE(w);
  CHECK(h.generator_names()[w->a] == "a");
  CHECK(h.generator_names()[w->b] == "b");
  const auto h1 = hecke_monoid(build_coxeter_group(realization({CoxeterFamily::A, 1})));
  CHECK_FALSE(generator_incomparability(h1));
  const auto faces = face_monoid(arrangement_from_normals(2, {{1, 0}, {0, 1}, {1, -1}}));
  CHECK(generator_incomparability(faces.monoid));
}
