#include "surfsym/rational.hpp"

#include <doctest.h>

using namespace surfsym;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Rat a(6, 8);
    CHECK(a.num() == 3);
    CHECK(a.den() == 4);
    Rat b(3, -9);
    CHECK(b.num() == -1);
    CHECK(b.den() == 3);
    CHECK(Rat(0, 5) == Rat(0));
    CHECK(Rat(0).den() == 1);
}

TEST_CASE("arithmetic") {
    Rat half(1, 2), third(1, 3);
    CHECK(half + third == Rat(5, 6));
    CHECK(half * third == Rat(1, 6));
    CHECK(half - third == Rat(1, 6));
    CHECK(half / third == Rat(3, 2));
    CHECK((-half).num() == -1);
    CHECK_THROWS(half / Rat(0));
    CHECK(Rat(-2, 3).abs() == Rat(2, 3));
    CHECK(Rat(2, 3).inv() == Rat(3, 2));
    CHECK(Rat(-3, 2).pow(3) == Rat(-27, 8));
}

TEST_CASE("parse and print") {
    CHECK(Rat::parse("22/7") == Rat(22, 7));
    CHECK(Rat::parse("-5") == Rat(-5));
    CHECK(Rat::parse("-6/4") == Rat(-3, 2));
    CHECK(Rat(7, 3).str() == "7/3");
    CHECK(Rat(-4).str() == "-4");
    CHECK_THROWS(Rat::parse("1/0"));
}

TEST_CASE("floor, ceil and decimal rendering") {
    CHECK(Rat(7, 2).floor() == Rat(3));
    CHECK(Rat(7, 2).ceil() == Rat(4));
    CHECK(Rat(-7, 2).floor() == Rat(-4));
    CHECK(Rat(-7, 2).ceil() == Rat(-3));
    CHECK(Rat(1, 3).decimal(4, false) == "0.3333");
    CHECK(Rat(1, 3).decimal(4, true) == "0.3334");
    CHECK(Rat(-1, 3).decimal(3, false) == "-0.334");
    CHECK(Rat(5, 4).decimal(2, false) == "1.25");
    CHECK(Rat(5, 4).decimal(2, true) == "1.25");
}
