#include <doctest.h>

#include <lts/constructions.hpp>
#include <lts/twisting.hpp>

#include "common/fixtures.hpp"

#include <random>

using lts::Cochain;
using lts::LinearMap;
using lts::Rational;
using lts::SplitContext;
using lts::TripleSystem;
using lts::Vec;

namespace {

/// Semidirect structure of the 2-dimensional example with its adjoint
/// action: the standard strict structure on a 4-dimensional split space.
Cochain example1_theta() {
  TripleSystem t = fixtures::example1();
  return lts::structure_cochain(
      lts::semidirect_product(t, lts::adjoint_representation(t)));
}

}  // namespace

TEST_CASE("validated structures reject bad input") {
  const SplitContext ctx{2, 2};

  // Not in the constrained subspace.
  Cochain bad(4, 1);
  int args[3] = {1, 1, 0};
  bad.set_value(args, 0, 1);
  CHECK_THROWS_AS(lts::ProtoStructure::create(bad, ctx),
                  lts::InvalidStructureError);

  // In the subspace but not square-zero.
  TripleSystem nf = fixtures::invalid_fundamental();
  lts::Representation pad(2, 2);  // zero action keeps the block shape
  Cochain theta(4, 1);
  Cochain mu = lts::structure_cochain(nf);
  // Embed the 2-dimensional table in the first block by hand.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        int a[3] = {i, j, k};
        for (int o = 0; o < 2; ++o) {
          Rational v = mu.coeff(a, o);
          if (!lts::is_zero(v)) theta.set_value(a, o, v);
        }
      }
    }
  }
  CHECK(lts::is_lts_cochain(theta).ok);
  CHECK_THROWS_AS(lts::ProtoStructure::create(theta, ctx),
                  lts::InvalidStructureError);

  // Wrong split dimensions: the parts must sum to the cochain dimension.
  CHECK_THROWS_AS(lts::ProtoStructure::create(example1_theta(),
                                              SplitContext{3, 2}),
                  lts::InvalidInputError);

  // The valid semidirect structure is accepted and is strict.
  lts::ProtoStructure ok = lts::ProtoStructure::create(example1_theta(), ctx);
  CHECK(lts::classify(ok.theta(), ctx).is_strict());
}

TEST_CASE("classification of the semidirect structure is strict") {
  const SplitContext ctx{2, 2};
  lts::Classification cls = lts::classify(example1_theta(), ctx);
  CHECK(cls.kind == lts::Classification::Kind::Strict);
  CHECK(cls.phi1_zero);
  CHECK(cls.phi2_zero);
  CHECK(cls.psi_zero);
  CHECK(cls.conditions_ok);
  CHECK(cls.is_twilled());
  CHECK(cls.name() == std::string("strict"));
}

TEST_CASE("series and conjugation twists agree on random data") {
  std::mt19937 rng(20260818);
  for (auto [n1, n2] : {std::pair{2, 2}, {3, 3}}) {
    const SplitContext ctx{n1, n2};
    for (int draw = 0; draw < 6; ++draw) {
      Cochain theta = lts::lts_project(
          fixtures::random_cochain(n1 + n2, 1, rng, 0.3));
      LinearMap h = fixtures::random_map(n1, n2, rng);
      Cochain s = lts::twist_series(theta, h, ctx);
      Cochain c = lts::twist_conjugation(theta, h, ctx);
      CHECK(s == c);
    }
  }
}

TEST_CASE("twisting by zero is the identity") {
  const SplitContext ctx{2, 2};
  Cochain theta = example1_theta();
  LinearMap zero(2, 2);
  CHECK(lts::twist_series(theta, zero, ctx) == theta);
  CHECK(lts::twist_conjugation(theta, zero, ctx) == theta);
}

TEST_CASE("twists compose additively in the twisting map") {
  std::mt19937 rng(171717);
  const SplitContext ctx{2, 2};
  for (int draw = 0; draw < 4; ++draw) {
    Cochain theta = lts::lts_project(
        fixtures::random_cochain(4, 1, rng, 0.35));
    LinearMap h1 = fixtures::random_map(2, 2, rng);
    LinearMap h2 = fixtures::random_map(2, 2, rng);
    Cochain once = lts::twist_series(lts::twist_series(theta, h1, ctx), h2,
                                     ctx);
    CHECK(once == lts::twist_series(theta, h1 + h2, ctx));
  }
}

TEST_CASE("componentwise twist matches the decomposition of the full twist") {
  std::mt19937 rng(9090);
  const SplitContext ctx{2, 2};
  for (int draw = 0; draw < 4; ++draw) {
    Cochain theta = lts::lts_project(
        fixtures::random_cochain(4, 1, rng, 0.35));
    LinearMap h = fixtures::random_map(2, 2, rng);
    lts::ThetaComponents before = lts::decompose_theta(theta, ctx);
    lts::ThetaComponents after = lts::twist_components(before, h, ctx);
    lts::ThetaComponents direct =
        lts::decompose_theta(lts::twist_series(theta, h, ctx), ctx);
    CHECK(after.phi1 == direct.phi1);
    CHECK(after.mu1 == direct.mu1);
    CHECK(after.psi == direct.psi);
    CHECK(after.mu2 == direct.mu2);
    CHECK(after.phi2 == direct.phi2);
    // The leading component never moves.
    CHECK(after.phi1 == before.phi1);
  }
}

TEST_CASE("frozen twisted values of the 2-dimensional example") {
  // Twisting the semidirect structure by T with T e1' = 0,
  // T e2' = a e1 + b e2 at a = 1, b = 2.
  const SplitContext ctx{2, 2};
  Cochain twisted =
      lts::twist_series(example1_theta(), fixtures::example1_T(1, 2), ctx);

  // Twisted bracket of (e1, e2, e2'): b e1 + e1', frozen by hand from the
  // series: only X contributes, via Theta(e1, e2, T e2').
  int args1[3] = {0, 1, 3};
  CHECK(twisted.coeff(args1, 0) == Rational(2));
  CHECK(twisted.coeff(args1, 1) == Rational(0));
  CHECK(twisted.coeff(args1, 2) == Rational(1));
  CHECK(twisted.coeff(args1, 3) == Rational(0));

  // Same value at (e1, e2', e2) by the subspace antisymmetry.
  int args2[3] = {0, 3, 1};
  CHECK(twisted.coeff(args2, 0) == Rational(2));
  CHECK(twisted.coeff(args2, 2) == Rational(1));

  // Pure first-block tuples are untouched by the twist.
  int args3[3] = {0, 1, 1};
  CHECK(twisted.coeff(args3, 0) == Rational(1));
  CHECK(twisted.coeff(args3, 2) == Rational(0));
}

TEST_CASE("relative Rota-Baxter operators twist to twilled structures") {
  TripleSystem t = fixtures::example1();
  lts::Representation r = lts::adjoint_representation(t);

  int rb_count = 0;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      LinearMap T = fixtures::example1_T(a, b);
      bool rb = lts::check_relative_rb(t, r, T).ok;
      lts::RBTwistResult res = lts::rb_twist(t, r, T);
      CHECK(res.classification.is_twilled() == rb);
      // A twist of a strict structure never regrows phi1.
      CHECK(res.classification.phi1_zero);
      // The twisted table is always a valid system.
      CHECK(lts::lts_axioms_check(lts::cochain_to_system(res.twisted)).pass());
      rb_count += rb ? 1 : 0;
    }
  }
  CHECK(rb_count >= 1);  // T = 0 at the very least
}

TEST_CASE("the induced second-block bracket matches both computations") {
  TripleSystem t = fixtures::example1();
  lts::Representation r = lts::adjoint_representation(t);
  const SplitContext ctx{2, 2};
  lts::TwilledStructure tw =
      lts::TwilledStructure::create(example1_theta(), ctx);

  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      LinearMap T = fixtures::example1_T(a, b);
      if (!lts::check_relative_rb(t, r, T).ok) continue;
      // The twisted-structure bracket on the second block coincides with
      // the bracket the operator induces on the carrier.
      TripleSystem from_twist = lts::twisted_g2_bracket(tw, T);
      TripleSystem induced = lts::induced_structures(t, r, T).on_v;
      CHECK(from_twist == induced);
    }
  }
}

TEST_CASE("twisted_g2_bracket refuses a twist that is not twilled") {
  TripleSystem t = fixtures::example1();
  lts::Representation r = lts::adjoint_representation(t);
  const SplitContext ctx{2, 2};
  lts::TwilledStructure tw =
      lts::TwilledStructure::create(example1_theta(), ctx);

  // The identity is not a Rota-Baxter operator here: with the adjoint
  // action the defining identity would force [u,v,w] = 3 [u,v,w].
  LinearMap T = LinearMap::identity(2);
  CHECK_FALSE(lts::check_relative_rb(t, r, T).ok);
  CHECK_THROWS_AS(lts::twisted_g2_bracket(tw, T),
                  lts::InvalidStructureError);
}
