#include <doctest.h>

#include <lts/rational.hpp>

using lts::Rational;

TEST_CASE("rational parsing accepts canonical and non-canonical forms") {
  CHECK(lts::rational_from_string("3") == Rational(3));
  CHECK(lts::rational_from_string("-7") == Rational(-7));
  CHECK(lts::rational_from_string("-2/3") == Rational(-2, 3));
  CHECK(lts::rational_from_string("+4/6") == Rational(2, 3));
  CHECK(lts::rational_from_string("0") == Rational(0));
  CHECK(lts::rational_from_string("0/5") == Rational(0));
  // Canonicalization: 6/4 and 3/2 are the same number.
  CHECK(lts::rational_from_string("6/4") == Rational(3, 2));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(lts::rational_from_string(""), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::rational_from_string("abc"), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::rational_from_string("1.5"), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::rational_from_string("2/"), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::rational_from_string("/3"), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::rational_from_string("1/0"), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::rational_from_string("1 / 2"), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::rational_from_string("--1"), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::rational_from_string("0x10"), lts::InvalidInputError);
}

TEST_CASE("rational to_string round-trips through parsing") {
  for (const char* s : {"0", "1", "-1", "2/3", "-7/5", "13"}) {
    Rational q = lts::rational_from_string(s);
    CHECK(lts::to_string(q) == s);
    CHECK(lts::rational_from_string(lts::to_string(q)) == q);
  }
}

TEST_CASE("exactness: a telescoping sum of thirds is exactly zero") {
  Rational sum = 0;
  for (int i = 0; i < 3000; ++i) sum += Rational(1, 3);
  sum -= 1000;
  CHECK(lts::is_zero(sum));
}
