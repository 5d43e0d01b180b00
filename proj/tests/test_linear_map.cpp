#include <doctest.h>

#include <lts/linear_map.hpp>

using lts::LinearMap;
using lts::Rational;
using lts::Vec;

TEST_CASE("linear map apply uses the column convention") {
  // A(i, j) holds the coefficient of e_i in A e_j, so columns are images
  // of the domain basis.
  LinearMap a(2, 3);
  a.at(0, 0) = 1;
  a.at(1, 0) = 2;
  a.at(0, 2) = -1;
  CHECK(a.column(0) == Vec{1, 2});
  CHECK(a.column(1) == Vec{0, 0});
  CHECK(a.column(2) == Vec{-1, 0});
  CHECK(a.apply(Vec{1, 0, 3}) == Vec{-2, 2});
}

TEST_CASE("compose applies the argument first") {
  LinearMap a(2, 2);  // a = [[0, 1], [0, 0]]
  a.at(0, 1) = 1;
  LinearMap b(2, 2);  // b = [[0, 0], [1, 0]]
  b.at(1, 0) = 1;
  LinearMap ab = a.compose(b);  // a(b(x))
  CHECK(ab.at(0, 0) == Rational(1));
  CHECK(ab.at(1, 1) == Rational(0));
  LinearMap ba = b.compose(a);
  CHECK(ba.at(0, 0) == Rational(0));
  CHECK(ba.at(1, 1) == Rational(1));
  CHECK(lts::commutator(a, b) == ab - ba);
}

TEST_CASE("identity, arithmetic, and zero tests") {
  LinearMap id = LinearMap::identity(3);
  Vec x{1, -2, Rational(1, 2)};
  CHECK(id.apply(x) == x);
  CHECK((id - id).is_zero());
  CHECK(id.scaled(2).apply(x) == Vec{2, -4, 1});
  CHECK((id + id) == id.scaled(2));
  CHECK_FALSE(id.is_zero());
}

TEST_CASE("dimension mismatches are rejected") {
  LinearMap a(2, 3);
  LinearMap b(2, 2);
  CHECK_THROWS_AS(a.apply(Vec{1, 2}), lts::InvalidInputError);
  CHECK_THROWS_AS(a.compose(a), lts::InvalidInputError);
  CHECK_THROWS_AS(a + b, lts::InvalidInputError);
}
