#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/io.hpp"

using namespace wrep;

TEST_CASE("rationals and matrices") {
  CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), ParseError);

  const Matrix m(2, 1, {Rational(1, 3), Rational(-2)});
  CHECK(to_json(m).dump() == R"({"rows":2,"cols":1,"entries":["1/3","-2"]})");
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":["1"]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":-1,"cols":0,"entries":[]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"cols":0,"entries":[]})")), ParseError);
}

TEST_CASE("groupoids round trip and bad tables are parse errors") {
  for (const auto& g : {z2_groupoid(), pair_groupoid(), cyclic_group(4), product_groupoid({{2, 2}, {1, 3}})})
    CHECK(groupoid_from_json(to_json(g)) == g);
  Json j = to_json(z2_groupoid());
  j["compose"][0][2] = "nope";
  CHECK_THROWS_AS(groupoid_from_json(j), ParseError);
  j = to_json(z2_groupoid());
  j.erase("inverse");
  CHECK_THROWS_AS(groupoid_from_json(j), ParseError);
}

TEST_CASE("random instances round trip exactly") {
  Rng rng(11);
  const RandomBounds bounds{3, 8, 2};
  for (int trial = 0; trial < 20; ++trial) {
    const Ruth r = random_ruth(rng, bounds);
    CHECK(ruth_from_json(to_json(r)) == r);
    CHECK(complex_from_json(to_json(r.complex)) == r.complex);
    const GaugeResult gr = random_morphism_into(r, rng);
    CHECK(ruth_morphism_from_json(r.groupoid, to_json(r.groupoid, gr.morphism)) == gr.morphism);

    const VBGroupoid v = random_vb(rng, bounds);
    CHECK(vb_from_json(to_json(v)) == v);
    const VBMap id = identity_vb_map(v);
    CHECK(vb_map_from_json(v.base, to_json(v.base, id)) == id);

    const WeakRepresentation w = wrep_from_ruth(r);
    CHECK(wrep_from_json(to_json(w)) == w);
    const EquivariantMap e = equivariant_from_ruth_morphism(gr.source, r, gr.morphism);
    CHECK(equivariant_from_json(r.groupoid, to_json(r.groupoid, e)) == e);
  }
}

TEST_CASE("ruth payload errors") {
  const Json good = to_json(z2_ruth(Rational(1)));
  Json j = good;
  j["omega"][0]["g"] = "h";
  CHECK_THROWS_AS(ruth_from_json(j), ParseError);
  j = good;
  j["omega"].push_back(j["omega"][0]);
  CHECK_THROWS_AS(ruth_from_json(j), ParseError);
  j = good;
  j["lambda0"].erase("g");
  CHECK_THROWS_AS(ruth_from_json(j), ParseError);
  j = good;
  j["lambda1"]["g"] = to_json(Matrix(2, 2));
  CHECK_THROWS_AS(ruth_from_json(j), ParseError);
}

TEST_CASE("instances") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"payload": {}})"), ParseError);
  const Instance inst{"ruth", to_json(z2_ruth(Rational(0))), {{"seed", 3}}};
  const std::string text = dump_instance(inst);
  CHECK(dump_instance(parse_instance(text)) == text);
  const Instance back = parse_instance(text);
  CHECK(back.kind == "ruth");
  CHECK(ruth_from_json(back.payload) == z2_ruth(Rational(0)));
  CHECK(back.metadata.at("seed") == 3);
}
