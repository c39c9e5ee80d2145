#include <doctest.h>

#include "nilgen/errors.hpp"
#include "nilgen/json_io.hpp"

using namespace nilgen;

TEST_CASE("integers round-trip, switching to strings past 53 bits") {
    CHECK(integer_to_json(Integer(42)).is_number());
    CHECK(integer_from_json(integer_to_json(Integer(42))) == 42);
    CHECK(integer_from_json(integer_to_json(Integer(-17))) == -17);

    const Integer big = ipow(Integer(2), 80) + 3;
    CHECK(integer_to_json(big).is_string());
    CHECK(integer_from_json(integer_to_json(big)) == big);

    CHECK(integer_from_json(Json("123456789012345678901234567890")) ==
          Integer("123456789012345678901234567890"));
    CHECK_THROWS_AS(integer_from_json(Json("12x")), invalid_input_error);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), invalid_input_error);
}

TEST_CASE("rationals serialize as num/den strings") {
    const Rational q = make_rational(Integer(21), Integer(32));
    const Json j = rational_to_json(q);
    CHECK(j.at("num") == "21");
    CHECK(j.at("den") == "32");
    CHECK(rational_from_json(j) == q);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}}), invalid_input_error);
}

TEST_CASE("group and element schemas") {
    const AbelianGroup g = group_from_json(Json::parse(R"({"divisors": [12, 2]})"));
    CHECK(g.order() == 24);
    CHECK(group_from_json(group_to_json(g)) == g);

    const Element e = element_from_json(g, Json::parse(R"({"coords": [3, 0, 1]})"));
    CHECK(e.coords.size() == 3);
    CHECK(element_from_json(g, element_to_json(e)) == e);
    // bare-array form also accepted
    CHECK(element_from_json(g, Json::parse("[3, 0, 1]")) == e);

    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"divisors": [1]})")), invalid_input_error);
    CHECK_THROWS_AS(element_from_json(g, Json::parse(R"({"coords": [1]})")),
                    invalid_input_error);
}

TEST_CASE("subgroup JSON carries generators, decimal order and basis") {
    const AbelianGroup g = group_from_json(Json::parse(R"({"divisors": [4, 2]})"));
    const Subgroup s = subgroup_from_generators(
        g, {element_from_json(g, Json::parse("[2, 1]"))});
    const Json j = subgroup_to_json(s);
    CHECK(j.at("order").is_string());
    CHECK(j.at("order") == s.order().get_str());
    CHECK(j.at("basis").is_array());
    CHECK(j.at("generators").is_array());

    // Generators listed in the JSON regenerate the same subgroup.
    std::vector<Element> gens;
    for (const auto& row : j.at("generators")) gens.push_back(element_from_json(g, row));
    CHECK(subgroups_equal(subgroup_from_generators(g, gens), s));
}

TEST_CASE("profile JSON round trip") {
    const NilpotentProfile p = parse_profile("2:3:4,7:1:2");
    CHECK(profile_from_json(profile_to_json(p)) == p);
}

TEST_CASE("hsp instance schema") {
    const Json j = Json::parse(
        R"({"group": {"divisors": [2, 2]}, "hidden_subgroup_generators": [[1, 0]]})");
    const HspInstance inst = hsp_instance_from_json(j);
    CHECK(inst.group.order() == 4);
    CHECK(inst.hidden.order() == 2);

    const HspInstance again = hsp_instance_from_json(hsp_instance_to_json(inst));
    CHECK(subgroups_equal(again.hidden, inst.hidden));

    // Missing generator list means the trivial hidden subgroup.
    const HspInstance trivial =
        hsp_instance_from_json(Json::parse(R"({"group": {"divisors": [6]}})"));
    CHECK(trivial.hidden.order() == 1);

    CHECK_THROWS_AS(hsp_instance_from_json(Json::parse(R"({"divisors": [2]})")),
                    invalid_input_error);
}

TEST_CASE("parse_rational accepts fractions only") {
    CHECK(parse_rational("1/10") == make_rational(Integer(1), Integer(10)));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2/4") == make_rational(Integer(-1), Integer(2)));
    CHECK_THROWS_AS(parse_rational("0.5"), invalid_input_error);
    CHECK_THROWS_AS(parse_rational("1e-3"), invalid_input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), invalid_input_error);
    CHECK_THROWS_AS(parse_rational(""), invalid_input_error);
    CHECK_THROWS_AS(parse_rational("a/b"), invalid_input_error);
}

TEST_CASE("halfwidth convention") {
    CHECK(normal99_halfwidth(Integer(0), Integer(100)) == 0);
    CHECK(normal99_halfwidth(Integer(100), Integer(100)) == 0);
    const Rational h = normal99_halfwidth(Integer(50), Integer(100));
    // z * sqrt(1/4 / 100) = 2.576 * 0.05 = 0.1288; upper rounding only.
    CHECK(h >= make_rational(Integer(1288), Integer(10000)));
    CHECK(h < make_rational(Integer(1289), Integer(10000)));
}
