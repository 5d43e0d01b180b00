#include <doctest.h>

#include <lts/representation.hpp>

#include "common/fixtures.hpp"

using lts::Rational;
using lts::Representation;
using lts::TripleSystem;
using lts::Vec;

TEST_CASE("adjoint representation: rho(x,y)z = [z,x,y]") {
  TripleSystem t = fixtures::example1();
  Representation r = lts::adjoint_representation(t);
  // rho(e1, e2) e2 = [e2, e1, e2] = -e1.
  CHECK(r.rho(0, 1).column(1) == Vec{-1, 0});
  // rho(e2, e2) e1 = [e1, e2, e2] = e1.
  CHECK(r.rho(1, 1).column(0) == Vec{1, 0});
  CHECK(r.rho(0, 0).is_zero());
}

TEST_CASE("derived map is computed from rho, never stored") {
  TripleSystem t = fixtures::example1();
  Representation r = lts::adjoint_representation(t);
  // D(x,y) = rho(y,x) - rho(x,y) by definition.
  CHECK(r.derived(0, 1) == r.rho(1, 0) - r.rho(0, 1));
  // For the adjoint this is D(x,y)z = [x,y,z]: D(e1,e2)e2 = [e1,e2,e2].
  CHECK(r.derived(0, 1).column(1) == Vec{1, 0});
  // Mutating rho afterwards changes the derived map accordingly.
  r.rho(0, 1).at(0, 0) += 5;
  CHECK(r.derived(0, 1).at(0, 0) == Rational(-5));
}

TEST_CASE("adjoint representations of the running examples verify") {
  for (const TripleSystem& t :
       {fixtures::example1(), fixtures::example2(),
        lts::from_lie_algebra(fixtures::sl2_like())}) {
    Representation r = lts::adjoint_representation(t);
    lts::RepresentationReport rep = lts::check_representation(t, r);
    CHECK(rep.identity1_ok);
    CHECK(rep.identity2_ok);
    CHECK(rep.pass());
  }
}

TEST_CASE("a corrupted action fails the representation identities") {
  TripleSystem t = fixtures::example1();
  Representation r = lts::adjoint_representation(t);
  r.rho(0, 1).at(0, 0) += 1;
  lts::RepresentationReport rep = lts::check_representation(t, r);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("semidirect bracket: frozen example value") {
  TripleSystem t = fixtures::example1();
  Representation r = lts::adjoint_representation(t);
  TripleSystem s = lts::semidirect_product(t, r);
  REQUIRE(s.dim() == 4);
  // [(e1,0), (e2,0), (0,e2)] = (0, D(e1,e2) e2) = (0, e1), which is basis
  // vector 2 of the sum space (block g first).
  const Rational* b = s.bracket_basis(0, 1, 3);
  CHECK(b[0] == Rational(0));
  CHECK(b[1] == Rational(0));
  CHECK(b[2] == Rational(1));
  CHECK(b[3] == Rational(0));
  // Pure-g tuples reproduce the original bracket.
  const Rational* c = s.bracket_basis(0, 1, 1);
  CHECK(c[0] == Rational(1));
  // Tuples with two carrier arguments vanish for an ordinary action.
  CHECK(lts::is_zero_vec(s.bracket(Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1},
                                   Vec{1, 0, 0, 0})));
}

TEST_CASE("semidirect product is a system exactly when the action is a "
          "representation") {
  TripleSystem t = fixtures::example1();

  // Valid action: semidirect table satisfies the identities.
  Representation good = lts::adjoint_representation(t);
  CHECK(lts::check_representation(t, good).pass());
  CHECK(lts::lts_axioms_check(lts::semidirect_product(t, good)).pass());

  // Several corrupted actions: the two checks always agree.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Representation r = lts::adjoint_representation(t);
      r.rho(i, j).at(1, 0) += 1;
      bool rep_ok = lts::check_representation(t, r).pass();
      bool sys_ok = lts::lts_axioms_check(lts::semidirect_product(t, r)).pass();
      CHECK(rep_ok == sys_ok);
    }
  }
}

TEST_CASE("dimension mismatches are rejected") {
  TripleSystem t = fixtures::example1();
  Representation r(3, 2);  // wrong base dimension
  CHECK_THROWS_AS(lts::check_representation(t, r), lts::InvalidInputError);
  CHECK_THROWS_AS(lts::semidirect_product(t, r), lts::InvalidInputError);
}
