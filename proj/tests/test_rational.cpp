#include <doctest.h>

#include <sstream>

#include "kwise/rational.hpp"

using kwise::Rational;

TEST_CASE("construction keeps lowest terms and positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 1).str() == "6");
    CHECK(Rational(2, 4).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("string parsing accepts fractions, integers and finite decimals") {
    CHECK(Rational::from_string("1/6") == Rational(1, 6));
    CHECK(Rational::from_string("6/1") == Rational(6));
    CHECK(Rational::from_string("6") == Rational(6));
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational::from_string("0.3") == Rational(3, 10));
    CHECK(Rational::from_string("0.25") == Rational(1, 4));
    CHECK(Rational::from_string("-1.5") == Rational(-3, 2));
    CHECK(Rational::from_string("2/4") == Rational(1, 2));

    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1e5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1."), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    // a long alternating sum that floating point would mangle
    Rational acc(0);
    for (long i = 1; i <= 200; ++i) {
        acc += Rational(i % 2 == 0 ? -1 : 1, i);
    }
    Rational back = acc;
    for (long i = 200; i >= 1; --i) {
        back -= Rational(i % 2 == 0 ? -1 : 1, i);
    }
    CHECK(back == Rational(0));
}

TEST_CASE("ordering and helpers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(kwise::abs(Rational(-3, 4)) == Rational(3, 4));
    CHECK(kwise::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(kwise::pow(Rational(2, 3), 0) == Rational(1));
    CHECK(kwise::pow(Rational(2), -2) == Rational(1, 4));
    CHECK(kwise::floor(Rational(7, 2)) == 3);
    CHECK(kwise::floor(Rational(-7, 2)) == -4);
    CHECK(kwise::floor(Rational(4)) == 4);
}

TEST_CASE("serialization round-trips") {
    for (const char* text : {"1/6", "-22/7", "6", "0", "123456789123456789/2"}) {
        const Rational q = Rational::from_string(text);
        CHECK(Rational::from_string(q.str()) == q);
        CHECK(q.str() == text);
    }
    std::ostringstream os;
    os << Rational(5, 10);
    CHECK(os.str() == "1/2");
}
