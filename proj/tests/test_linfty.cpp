#include <doctest.h>

#include <lts/constructions.hpp>
#include <lts/linfty.hpp>

#include "common/fixtures.hpp"

#include <random>

using lts::Cochain;
using lts::HomCochain;
using lts::LinearMap;
using lts::Rational;
using lts::SplitContext;
using lts::TripleSystem;
using lts::Vec;

namespace {

lts::TwilledStructure example1_twilled() {
  TripleSystem t = fixtures::example1();
  Cochain theta = lts::structure_cochain(
      lts::semidirect_product(t, lts::adjoint_representation(t)));
  return lts::TwilledStructure::create(theta, SplitContext{2, 2});
}

/// A twilled structure that is not strict: the Rota-Baxter twist of the
/// strict double of the 2-dimensional example.  The twist moves part of
/// the structure into the mixed component, so psi is nonzero.
lts::TwilledStructure example1_twisted_twilled() {
  TripleSystem t = fixtures::example1();
  Cochain theta = lts::rb_twist(t, lts::adjoint_representation(t),
                                fixtures::example1_T(1, 2))
                      .twisted;
  return lts::TwilledStructure::create(theta, SplitContext{2, 2});
}

}  // namespace

TEST_CASE("hom-cochain lifts round-trip") {
  const SplitContext ctx{2, 3};
  std::mt19937 rng(424242);

  HomCochain f = HomCochain::from_linear_map(fixtures::random_map(2, 3, rng));
  Cochain lifted = f.lift(ctx);
  // The lift has bidegree -1 | 2p+1.
  lts::BidegreeResult b = lts::bidegree_of(lifted, ctx);
  REQUIRE(b.kind == lts::BidegreeKind::Homogeneous);
  CHECK(b.value == lts::Bidegree{-1, 1});
  CHECK(HomCochain::from_lift(lifted, ctx) == f);

  // A cochain supported off the lift shape is rejected.
  Cochain off(5, 1);
  int args[3] = {0, 2, 2};  // first slot in block 1: not lift-shaped
  off.set_value(args, 0, 1);
  CHECK_THROWS_AS(HomCochain::from_lift(off, ctx), lts::InvalidInputError);
}

TEST_CASE("composed lifts of linear maps vanish") {
  // Lifts kill the first block and land in it, so any two compose to
  // zero; this is what makes iterated twists additive.
  const SplitContext ctx{2, 2};
  std::mt19937 rng(1001);
  Cochain h1 = lts::lift_linear_map(fixtures::random_map(2, 2, rng), ctx);
  Cochain h2 = lts::lift_linear_map(fixtures::random_map(2, 2, rng), ctx);
  CHECK(lts::circle_product(h1, h2).is_zero());
  CHECK(lts::graded_bracket(h1, h2).is_zero());
}

TEST_CASE("spanning set covers both degrees and survives projection") {
  std::vector<HomCochain> span = lts::spanning_homcochains(2, 2, 1);
  CHECK(span.size() >= 4);  // at least the degree-0 deltas
  int deg0 = 0, deg1 = 0;
  for (const HomCochain& f : span) {
    if (f.degree() == 0) ++deg0;
    if (f.degree() == 1) ++deg1;
    CHECK_FALSE(f.is_zero());
    // Degree-1 elements lie in the constrained subspace after lifting.
    if (f.degree() == 1) {
      CHECK(lts::is_lts_cochain(f.lift(SplitContext{2, 2})).ok);
    }
  }
  CHECK(deg0 == 4);
  CHECK(deg1 >= 1);
}

TEST_CASE("unary bracket squares to zero on the spanning set") {
  for (const lts::TwilledStructure& tw :
       {example1_twilled(), example1_twisted_twilled()}) {
    for (const HomCochain& f :
         lts::spanning_homcochains(2, 2, 1)) {
      HomCochain once = lts::l1(tw, f);
      CHECK(lts::l1(tw, once).is_zero());
    }
  }
}

TEST_CASE("derived differentials satisfy all five exchange conditions") {
  for (const lts::TwilledStructure& tw :
       {example1_twilled(), example1_twisted_twilled()}) {
    lts::DerivedDifferentialReport rep = lts::derived_differential_check(tw);
    CHECK(rep.d00_ok);
    CHECK(rep.d01_ok);
    CHECK(rep.d02_11_ok);
    CHECK(rep.d12_ok);
    CHECK(rep.d22_ok);
    CHECK(rep.pass());
  }
}

TEST_CASE("Maurer-Cartan residual detects Rota-Baxter operators") {
  TripleSystem t = fixtures::example1();
  lts::Representation r = lts::adjoint_representation(t);
  lts::TwilledStructure tw = example1_twilled();

  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      LinearMap T = fixtures::example1_T(a, b);
      bool rb = lts::check_relative_rb(t, r, T).ok;
      CHECK(lts::mc_residual(tw, T).is_zero() == rb);
    }
  }
  // The identity is not Rota-Baxter here; its residual must be nonzero.
  CHECK_FALSE(lts::mc_residual(tw, LinearMap::identity(2)).is_zero());
}

TEST_CASE("the residual equals the leading obstruction of the twist") {
  // For a twilled start, the phi2 component of the twist by H is exactly
  // l1(H) + l2(H,H)/2 + l3(H,H,H)/6.
  TripleSystem t = fixtures::example1();
  const SplitContext ctx{2, 2};
  lts::TwilledStructure tw = example1_twilled();
  std::mt19937 rng(777);

  for (int draw = 0; draw < 5; ++draw) {
    LinearMap h = fixtures::random_map(2, 2, rng);
    HomCochain residual = lts::mc_residual(tw, h);
    Cochain twisted = lts::twist_series(tw.theta(), h, ctx);
    lts::ThetaComponents comps = lts::decompose_theta(twisted, ctx);
    if (comps.phi2.is_zero()) {
      CHECK(residual.is_zero());
    } else {
      CHECK(residual == HomCochain::from_lift(comps.phi2, ctx));
    }
  }
}

TEST_CASE("the residual of the non-strict twilled structure also works") {
  lts::TwilledStructure tw = example1_twisted_twilled();
  const SplitContext ctx{2, 2};
  REQUIRE_FALSE(lts::classify(tw.theta(), ctx).is_strict());
  std::mt19937 rng(555);
  for (int draw = 0; draw < 3; ++draw) {
    LinearMap h = fixtures::random_map(2, 2, rng);
    HomCochain residual = lts::mc_residual(tw, h);
    lts::ThetaComponents comps =
        lts::decompose_theta(lts::twist_series(tw.theta(), h, ctx), ctx);
    bool twilled_after = comps.phi2.is_zero();
    CHECK(residual.is_zero() == twilled_after);
  }
}

TEST_CASE("hom-cochain arithmetic") {
  std::mt19937 rng(2468);
  HomCochain f = HomCochain::from_linear_map(fixtures::random_map(2, 2, rng));
  HomCochain g = HomCochain::from_linear_map(fixtures::random_map(2, 2, rng));
  CHECK((f + g) - g == f);
  CHECK((f - f).is_zero());
  CHECK(f.scaled(Rational(2)) == f + f);
}
