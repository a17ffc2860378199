#include <doctest.h>

#include "ramsey/io.hpp"

using namespace ramsey;

TEST_CASE("poset JSON round trip") {
  const std::vector<IndexPair> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const auto p = FinitePoset::from_covers(4, covers);
  const auto j = poset_to_json(p);
  CHECK(j.dump() == R"({"covers":[[0,1],[0,2],[1,3],[2,3]],"n":4})");
  CHECK(poset_from_json(j) == p);
  CHECK_THROWS_WITH_AS(poset_from_json(parse_json(R"({"covers": []})")),
                       doctest::Contains("\"n\""), InputError);
  CHECK_THROWS_WITH_AS(poset_from_json(parse_json(R"({"n": 2, "covers": 3})")),
                       doctest::Contains("\"covers\""), InputError);
  CHECK_THROWS_AS(parse_json("{"), InputError);
}

TEST_CASE("monoid JSON round trip") {
  const auto m = catalan_monoid(3);
  const auto j = monoid_to_json(m);
  const auto back = monoid_from_json(j);
  REQUIRE(back.size() == m.size());
  for (Index a = 0; a < m.size(); ++a) {
    CHECK(back.name(a) == m.name(a));
    for (Index b = 0; b < m.size(); ++b) CHECK(back.product(a, b) == m.product(a, b));
  }
  auto bad = j;
  bad["size"] = 4;
  CHECK_THROWS_AS(monoid_from_json(bad), InputError);
}

TEST_CASE("arrangement JSON") {
  const auto a = arrangement_from_json(
      parse_json(R"({"dim": 2, "normals": [["1","0"],["0","1"],["1","-1"]]})"));
  CHECK(a.normals.size() == 3);
  CHECK(arrangement_to_json(a)["normals"][2][1] == "-1");
  const auto halves = arrangement_from_json(parse_json(R"({"dim": 1, "normals": [["1/2"]]})"));
  CHECK(halves.normals[0][0] == Rational(1, 2));
  CHECK_THROWS_AS(arrangement_from_json(parse_json(R"({"dim": 2, "normals": [["1","0"]]})")),
                  InputError);
  const auto faces = faces_to_json(realizable_sign_vectors(a));
  CHECK(faces.size() == 13);
  CHECK(faces[0]["sign"] == "000");
}

TEST_CASE("function class spec JSON") {
  const auto spec = function_class_spec_from_json(parse_json(
      R"({"poset": {"n": 4, "covers": [[0,1],[1,2],[2,3]]}, "order_preserving": true,
          "k_level_lipschitz": null, "chain_1_lipschitz": true})"));
  CHECK(function_class(spec).size() == 8);
  CHECK_THROWS_AS(function_class_spec_from_json(parse_json(
                      R"({"poset": {"n": 1, "covers": []}, "k_level_lipschitz": 0})")),
                  InputError);
}

TEST_CASE("Coxeter spec JSON") {
  CHECK(coxeter_from_json(parse_json(R"({"type": "B", "n": 3})")).gens.size() == 3);
  CHECK(coxeter_from_json(parse_json(R"({"custom_gens": [[1,0,2],[0,2,1]], "matrix": [[1,3],[3,1]]})"))
            .degree == 3);
  CHECK_THROWS_AS(coxeter_from_json(parse_json(R"({"type": "E", "n": 6})")), InputError);
}

TEST_CASE("DOT export is deterministic and lists covers bottom up") {
  const auto h = hecke_monoid(build_coxeter_group(realization({CoxeterFamily::A, 2})));
  const auto cp = coset_poset(h);
  const auto namer = [&](Index e) { return h.name(e); };
  const auto dot = coset_dot(cp, namer);
  CHECK(dot == coset_dot(coset_poset(h), namer));
  CHECK(dot.find("n5 -> n3;") != std::string::npos);  // {aba} below {ab, aba}
  CHECK(dot.find("n1 -> n0;") != std::string::npos);
  CHECK(dot.find("label=\"aba\"") != std::string::npos);
  const auto table = coset_table(cp, namer);
  CHECK(table.rfind("id | {id, a, b, ab, ba, aba}\n", 0) == 0);
  const auto j = coset_json(h, cp, namer);
  CHECK(j["linear"] == false);
  CHECK(j["cosets"].size() == 6);
}
