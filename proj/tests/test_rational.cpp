#include <doctest.h>

#include "modist/rational.hpp"
#include "test_support.hpp"

using namespace modist;

TEST_CASE("canonical form") {
    CHECK(Rational(22, 8).str() == "11/4");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(-9, -3).str() == "3/1");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse round trip") {
    for (const char* s : {"11/4", "-1/2", "0/1", "123456789012345678901234567891/97"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    Rational a(3, 4), b(-5, 6);
    CHECK(a + b == Rational(-1, 12));
    CHECK(a - b == Rational(19, 12));
    CHECK(a * b == Rational(-5, 8));
    CHECK(a / b == Rational(-9, 10));
    CHECK(-a == Rational(-3, 4));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inv(), std::domain_error);
}

TEST_CASE("pow and comparisons") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK(Rational(7, 2).abs() == Rational(7, 2));
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("field axiom samples") {
    testing::Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
    }
}
