#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gen.hpp"
#include "pgroups/serialize.hpp"

using namespace pgroups;

TEST_CASE("round trips through JSON text") {
  testgen::Gen g(61);
  for (int t = 0; t < 40; ++t) {
    const int m = static_cast<int>(g.range(1, 5)), n = static_cast<int>(g.range(1, 4));
    const Squaring sq = g.quadratic(m, n);
    CHECK(squaring_from_json(json::parse(to_json(sq).dump())) == sq);
    const GroupSpec spec = from_squaring(sq);
    CHECK(group_spec_from_json(json::parse(to_json(spec).dump())) == spec);
    CHECK(load_group_spec(to_json(spec).dump()) == spec);
    CHECK(load_group_spec(to_json(sq).dump()) == spec);
    CHECK(load_group_spec(export_pc_presentation(spec)) == spec);
    CHECK(load_squaring(to_json(sq).dump()) == sq);
    CHECK(load_squaring(to_json(spec).dump()) == sq);
    CHECK(load_squaring(export_pc_presentation(spec)) == sq);
  }
  const Predatum P = singer_squaring(6, SingerVariant::A, 1, 2, 3);
  const Predatum Q = predatum_from_json(json::parse(to_json(P).dump()));
  CHECK(Q.squaring == P.squaring);
  CHECK(Q.a_params == P.a_params);
  CHECK(Q.target == P.target);
  const Field f(2, 6);
  CHECK(field_from_json(field_to_json(f)) == f);
}

TEST_CASE("GroupSpec JSON uses one-based commutator keys") {
  GroupSpec s(3, 2);
  s.set_pi(0, 2, 3);
  const json j = to_json(s);
  CHECK(j.at("pi").at("1,3") == 3);
  CHECK(j.at("pi").size() == 1);
}

TEST_CASE("parsers reject malformed documents") {
  const json good = to_json(singer_squaring(3, SingerVariant::A, 0, 1, 0).squaring);
  json j = good;
  j.erase("table");
  CHECK_THROWS_AS(squaring_from_json(j), std::invalid_argument);
  j = good;
  j["table"].push_back(0);
  CHECK_THROWS_AS(squaring_from_json(j), std::invalid_argument);
  j = good;
  j["table"][3] = 64;
  CHECK_THROWS_AS(squaring_from_json(j), std::invalid_argument);
  j = good;
  j["m"] = "three";
  CHECK_THROWS_AS(squaring_from_json(j), std::invalid_argument);

  json spec = to_json(homocyclic_spec(2));
  spec["pi"] = {{"2,1", 1}};
  CHECK_THROWS_AS(group_spec_from_json(spec), std::invalid_argument);
  spec["pi"] = {{"1,2,", 1}};
  CHECK_THROWS_AS(group_spec_from_json(spec), std::invalid_argument);
  spec["pi"] = {{"1,2", 4}};
  CHECK_THROWS_AS(group_spec_from_json(spec), std::invalid_argument);
  spec["pi"] = {{"1,2", -1}};
  CHECK_THROWS_AS(group_spec_from_json(spec), std::invalid_argument);
  spec = to_json(homocyclic_spec(2));
  spec["sigma"] = {1};
  CHECK_THROWS_AS(group_spec_from_json(spec), std::invalid_argument);

  CHECK_THROWS_AS(standard_params_from_json(json{{"p", 2}, {"m", 6}, {"d", 5}, {"e", 0}, {"s", 6}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(field_from_json(json{{"p", 2}, {"m", 6}, {"omega", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(load_group_spec("   "), std::invalid_argument);
  CHECK_THROWS_AS(load_group_spec("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(load_group_spec("{\"x\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(load_squaring("[]"), std::invalid_argument);
  CHECK_THROWS_AS(load_squaring(""), std::invalid_argument);
}

TEST_CASE("reports and classifications serialize") {
  Report r;
  r.claim = "c";
  r.range = "r";
  r.fail("boom");
  const json j = to_json(r);
  CHECK(j.at("violations").size() == 1);
  CHECK_FALSE(j.contains("notes"));
  const json c = to_json(theorem_list(64));
  CHECK(c.at("entries").size() == 6);
}
