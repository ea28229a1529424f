#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tribo/rational.hpp"

using tribo::Rational;
using tribo::parse_rational;

TEST_CASE("ratio and integer literals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("123456789012345678901234567890/3") ==
        Rational(mpz_class("41152263004115226300411522630")));
}

TEST_CASE("decimal literals convert exactly") {
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational(".1") == Rational(1, 10));
  CHECK(parse_rational("2.") == Rational(2));
  CHECK(parse_rational("3e-2") == Rational(3, 100));
  CHECK(parse_rational("1.5E2") == Rational(150));
  CHECK(parse_rational("0.1") != Rational(0.1));  // not the binary double
}

TEST_CASE("malformed literals are rejected") {
  for (const char* bad : {"", "abc", "1/0", "/3", "1/", "1/-2", "1.2.3", "--1", "1e", "e5", ".", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("serialization is lossless") {
  oracle::RationalSource src(11);
  for (int i = 0; i < 500; ++i) {
    Rational q = src.in_range(-1000, 1000, 997);
    q *= Rational(src.integer(1, 1 << 20), src.integer(1, 1 << 20));
    q.canonicalize();
    CHECK(parse_rational(tribo::to_string(q)) == q);
    CHECK(parse_rational(tribo::to_ratio_string(q)) == q);
  }
  CHECK(tribo::to_ratio_string(Rational(5)) == "5/1");
  CHECK(tribo::to_string(Rational(5)) == "5");
  CHECK(tribo::to_string(Rational(-3, 9)) == "-1/3");
}

TEST_CASE("decimal rendering honours the digit count") {
  CHECK(tribo::to_decimal(Rational(1, 3), 12) == "0.333333333333");
  CHECK(tribo::to_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(tribo::to_decimal(-0.0, 12) == "0");
}
