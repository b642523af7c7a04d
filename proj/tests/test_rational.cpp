#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/errors.hpp"
#include "leibniz/rational.hpp"

using namespace leibniz;

TEST_CASE("parsing accepts integers and fractions") {
    CHECK(rat_from_string("0") == Rat(0));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-3/4") == Rat(-3, 4));
    CHECK(rat_from_string("+5/2") == Rat(5, 2));
}

TEST_CASE("parsing canonicalizes") {
    CHECK(rat_to_string(rat_from_string("6/8")) == "3/4");
    CHECK(rat_to_string(rat_from_string("-6/8")) == "-3/4");
    CHECK(rat_to_string(rat_from_string("0/5")) == "0");
    CHECK(rat_to_string(rat_from_string("12/4")) == "3");
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS_AS(rat_from_string(""), parse_error);
    CHECK_THROWS_AS(rat_from_string("1.5"), parse_error);
    CHECK_THROWS_AS(rat_from_string("a/b"), parse_error);
    CHECK_THROWS_AS(rat_from_string("3/0"), parse_error);
    CHECK_THROWS_AS(rat_from_string("3/-4"), parse_error);
    CHECK_THROWS_AS(rat_from_string("1/2/3"), parse_error);
    CHECK_THROWS_AS(rat_from_string(" 1"), parse_error);
    CHECK_THROWS_AS(rat_from_string("1 "), parse_error);
    CHECK_THROWS_AS(rat_from_string("/2"), parse_error);
    CHECK_THROWS_AS(rat_from_string("2/"), parse_error);
}

TEST_CASE("serialization uses p/q with positive denominator") {
    CHECK(rat_to_string(Rat(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(-1, 2)) == "-1/2");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_string(Rat(0)) == "0");
}

TEST_CASE("round trip on arithmetic results") {
    Rat a = rat_from_string("22/7");
    Rat b = rat_from_string("-1/3");
    Rat c = a * b + Rat(2);
    CHECK(rat_from_string(rat_to_string(c)) == c);
    CHECK(rat_to_string(c) == "20/21");
}

TEST_CASE("vector helpers") {
    QVector v = vec_add(vec_scale(Rat(2), vec_unit(3, 0)), vec_unit(3, 2));
    CHECK(vec_to_string(v) == "(2, 0, 1)");
    CHECK(vec_is_zero(vec_sub(v, v)));
    CHECK_FALSE(vec_is_zero(v));
}
