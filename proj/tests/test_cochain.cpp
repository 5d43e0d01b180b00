#include <doctest.h>

#include <lts/cochain.hpp>
#include <lts/detail/sparse.hpp>
#include <lts/representation.hpp>

#include "common/fixtures.hpp"

#include <random>

using lts::Cochain;
using lts::Rational;
using lts::SplitContext;
using lts::TripleSystem;
using lts::Vec;

TEST_CASE("structure cochain round-trips through the table view") {
  TripleSystem t = fixtures::example1();
  Cochain mu = lts::structure_cochain(t);
  CHECK(mu.degree() == 1);
  CHECK(mu.arity() == 3);
  CHECK(lts::cochain_to_system(mu) == t);
  int args[3] = {0, 1, 1};
  CHECK(mu.coeff(args, 0) == Rational(1));
}

TEST_CASE("structure cochains of valid systems square to zero") {
  for (const TripleSystem& t :
       {fixtures::example1(), fixtures::example2(),
        lts::from_lie_algebra(fixtures::sl2_like())}) {
    Cochain mu = lts::structure_cochain(t);
    CHECK(lts::graded_bracket(mu, mu).is_zero());
  }
}

TEST_CASE("a fundamental-identity violation shows up in the self-bracket") {
  Cochain mu = lts::structure_cochain(fixtures::invalid_fundamental());
  // The table satisfies the two linear identities, so it lies in the
  // constrained subspace...
  CHECK(lts::is_lts_cochain(mu).ok);
  // ...but the quadratic condition fails.
  CHECK_FALSE(lts::graded_bracket(mu, mu).is_zero());
}

TEST_CASE("self-bracket vanishing is equivalent to the fundamental "
          "identity for projected random tables") {
  std::mt19937 rng(814021);
  for (int dim : {2, 3}) {
    for (int draw = 0; draw < 8; ++draw) {
      Cochain raw = fixtures::random_cochain(dim, 1, rng, 0.35);
      Cochain theta = lts::lts_project(raw);
      TripleSystem t = lts::cochain_to_system(theta);
      lts::AxiomReport axioms = lts::lts_axioms_check(t);
      // Projection enforces the two linear identities...
      CHECK(axioms.alternating_ok);
      CHECK(axioms.cyclic_ok);
      // ...and the self-bracket decides the quadratic one.
      bool mc = lts::graded_bracket(theta, theta).is_zero();
      CHECK(mc == axioms.fundamental_ok);
    }
  }
}

TEST_CASE("circle product on degree-0 cochains is plain composition") {
  // Degree-0 cochains are linear maps; the bracket must be the matrix
  // commutator.
  std::mt19937 rng(5150);
  Cochain p = fixtures::random_cochain(3, 0, rng, 0.8);
  Cochain q = fixtures::random_cochain(3, 0, rng, 0.8);
  Cochain pq = lts::circle_product(p, q);
  for (int j = 0; j < 3; ++j) {
    int arg = j;
    Vec qv(3), expect(3, Rational(0));
    for (int o = 0; o < 3; ++o) qv[o] = q.coeff(&arg, o);
    for (int m = 0; m < 3; ++m) {
      int mid = m;
      for (int o = 0; o < 3; ++o) expect[o] += qv[m] * p.coeff(&mid, o);
    }
    for (int o = 0; o < 3; ++o) CHECK(pq.coeff(&arg, o) == expect[o]);
  }
}

TEST_CASE("bracket with a degree-0 cochain acts by derivation") {
  // For degree-1 Q and a linear map f (degree 0),
  //   [Q, f](t0,t1,t2) = Q(f t0,t1,t2) + Q(t0,f t1,t2) + Q(t0,t1,f t2)
  //                      - f(Q(t0,t1,t2)).
  std::mt19937 rng(99417);
  const int n = 3;
  Cochain q = fixtures::random_cochain(n, 1, rng, 0.4);
  Cochain f = fixtures::random_cochain(n, 0, rng, 0.8);
  Cochain direct(n, 1);

  auto feval = [&](int j, int o) { return f.coeff(&j, o); };
  int args[3];
  for (args[0] = 0; args[0] < n; ++args[0]) {
    for (args[1] = 0; args[1] < n; ++args[1]) {
      for (args[2] = 0; args[2] < n; ++args[2]) {
        Vec acc(n, Rational(0));
        for (int slot = 0; slot < 3; ++slot) {
          for (int m = 0; m < n; ++m) {
            Rational w = feval(args[slot], m);
            if (lts::is_zero(w)) continue;
            int sub[3] = {args[0], args[1], args[2]};
            sub[slot] = m;
            for (int o = 0; o < n; ++o) acc[o] += w * q.coeff(sub, o);
          }
        }
        for (int m = 0; m < n; ++m) {
          Rational w = q.coeff(args, m);
          if (lts::is_zero(w)) continue;
          for (int o = 0; o < n; ++o) acc[o] -= w * feval(m, o);
        }
        if (!lts::is_zero_vec(acc)) direct.set_values(args, acc);
      }
    }
  }
  CHECK(lts::graded_bracket(q, f) == direct);
}

TEST_CASE("graded antisymmetry of the bracket") {
  std::mt19937 rng(271828);
  const int n = 2;
  for (auto [p, q] : {std::pair{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}) {
    Cochain P = fixtures::random_cochain(n, p, rng, 0.4);
    Cochain Q = fixtures::random_cochain(n, q, rng, 0.4);
    Cochain lhs = lts::graded_bracket(P, Q);
    Cochain rhs = lts::graded_bracket(Q, P).scaled(
        (p * q) % 2 == 0 ? Rational(-1) : Rational(1));
    CHECK(lhs == rhs);
  }
  // Degree-1 brackets are symmetric: [P,Q] = [Q,P].
  Cochain P = fixtures::random_cochain(n, 1, rng, 0.5);
  Cochain Q = fixtures::random_cochain(n, 1, rng, 0.5);
  CHECK(lts::graded_bracket(P, Q) == lts::graded_bracket(Q, P));
}

TEST_CASE("graded Jacobi holds on raw cochains") {
  // Left Leibniz form: [P,[Q,R]] = [[P,Q],R] + (-1)^(pq) [Q,[P,R]].
  std::mt19937 rng(31337);
  auto check_triple = [&](int n, int p, int q, int r, double density) {
    Cochain P = fixtures::random_cochain(n, p, rng, density);
    Cochain Q = fixtures::random_cochain(n, q, rng, density);
    Cochain R = fixtures::random_cochain(n, r, rng, density);
    Cochain lhs = lts::graded_bracket(P, lts::graded_bracket(Q, R));
    Cochain rhs = lts::graded_bracket(lts::graded_bracket(P, Q), R);
    rhs.add_scaled(lts::graded_bracket(Q, lts::graded_bracket(P, R)),
                   (p * q) % 2 == 0 ? Rational(1) : Rational(-1));
    CHECK(lhs == rhs);
  };
  check_triple(2, 0, 0, 1, 0.6);
  check_triple(2, 0, 1, 1, 0.5);
  check_triple(2, 1, 1, 1, 0.4);
  check_triple(2, 1, 1, 2, 0.25);
  check_triple(2, 0, 1, 2, 0.3);
  check_triple(3, 1, 1, 1, 0.2);
}

TEST_CASE("the sparse product agrees with the dense product") {
  std::mt19937 rng(44203);
  for (auto [n, p, q, density] :
       {std::tuple{2, 0, 1, 0.6}, {2, 1, 0, 0.6}, {2, 1, 1, 0.5},
        {2, 1, 2, 0.3}, {2, 2, 1, 0.3}, {3, 1, 1, 0.25}}) {
    Cochain P = fixtures::random_cochain(n, p, rng, density);
    Cochain Q = fixtures::random_cochain(n, q, rng, density);
    Cochain dense = lts::circle_product(P, Q);
    lts::detail::SparseCochain sparse = lts::detail::circle_product_sparse(
        lts::detail::to_sparse(P), lts::detail::to_sparse(Q));
    CHECK(lts::detail::to_dense(sparse) == dense);

    Cochain bdense = lts::graded_bracket(P, Q);
    lts::detail::SparseCochain bsparse = lts::detail::graded_bracket_sparse(
        lts::detail::to_sparse(P), lts::detail::to_sparse(Q));
    CHECK(lts::detail::to_dense(bsparse) == bdense);
  }
}

TEST_CASE("projection onto the constrained subspace") {
  std::mt19937 rng(60601);
  for (int n : {2, 3}) {
    for (int degree : {1, 2}) {
      Cochain raw = fixtures::random_cochain(n, degree, rng, 0.4);
      Cochain proj = lts::lts_project(raw);
      // Lands in the subspace and is idempotent.
      CHECK(lts::is_lts_cochain(proj).ok);
      CHECK(lts::lts_project(proj) == proj);
    }
  }
  // Fixes valid structure cochains pointwise.
  Cochain mu = lts::structure_cochain(fixtures::example1());
  CHECK(lts::lts_project(mu) == mu);
}

TEST_CASE("the bracket preserves the constrained subspace") {
  std::mt19937 rng(7447);
  for (auto [n, p, q] : {std::tuple{2, 1, 1}, {2, 1, 2}, {3, 1, 1}}) {
    Cochain P = lts::lts_project(fixtures::random_cochain(n, p, rng, 0.35));
    Cochain Q = lts::lts_project(fixtures::random_cochain(n, q, rng, 0.35));
    CHECK(lts::is_lts_cochain(lts::graded_bracket(P, Q)).ok);
  }
}

TEST_CASE("subspace membership reports the violated constraint") {
  // Antisymmetry violation: a lone value at a tuple with equal slots in
  // the final pair.
  Cochain a(2, 1);
  int bad1[3] = {1, 1, 0};
  a.set_value(bad1, 0, 1);
  lts::SubcomplexReport ra = lts::is_lts_cochain(a);
  CHECK_FALSE(ra.ok);
  CHECK(ra.constraint == "antisymmetry");
  CHECK(ra.tuple == std::vector<int>{1, 1, 0});

  // Cyclic violation with antisymmetry intact.
  Cochain c = lts::structure_cochain(fixtures::invalid_cyclic());
  lts::SubcomplexReport rc = lts::is_lts_cochain(c);
  CHECK_FALSE(rc.ok);
  CHECK(rc.constraint == "cyclic");

  // Degree-0 cochains satisfy the constraints vacuously.
  Cochain f(3, 0);
  int arg = 1;
  f.set_value(&arg, 2, 5);
  CHECK(lts::is_lts_cochain(f).ok);
}

TEST_CASE("bidegrees with respect to a splitting") {
  TripleSystem t = fixtures::example1();
  lts::Representation r = lts::adjoint_representation(t);
  const SplitContext ctx{2, 2};
  Cochain theta = lts::structure_cochain(lts::semidirect_product(t, r));

  // A semidirect structure is concentrated in bidegree 2|0.
  lts::BidegreeResult b = lts::bidegree_of(theta, ctx);
  REQUIRE(b.kind == lts::BidegreeKind::Homogeneous);
  CHECK(b.value == lts::Bidegree{2, 0});

  // Lifts of linear maps sit in bidegree -1|1.
  lts::LinearMap h = fixtures::example1_T(1, 2);
  Cochain hhat = lts::lift_linear_map(h, ctx);
  lts::BidegreeResult bh = lts::bidegree_of(hhat, ctx);
  REQUIRE(bh.kind == lts::BidegreeKind::Homogeneous);
  CHECK(bh.value == lts::Bidegree{-1, 1});

  // The zero cochain fits every bidegree.
  CHECK(lts::bidegree_of(Cochain(4, 1), ctx).kind ==
        lts::BidegreeKind::Indeterminate);

  // A sum across mixtures has no single bidegree.
  Cochain mixed = theta;
  int args[3] = {2, 3, 2};  // pure second-block tuple, second-block value
  mixed.set_value(args, 2, 1);
  CHECK(lts::bidegree_of(mixed, ctx).kind ==
        lts::BidegreeKind::Inhomogeneous);
}

TEST_CASE("bracket bidegrees add componentwise") {
  TripleSystem t = fixtures::example1();
  lts::Representation r = lts::adjoint_representation(t);
  const SplitContext ctx{2, 2};
  Cochain mu1 = lts::structure_cochain(lts::semidirect_product(t, r));
  Cochain hhat = lts::lift_linear_map(fixtures::example1_T(1, 2), ctx);

  // (2|0) bracket (-1|1) lands in (1|1).
  auto b1 = lts::bidegree_bracket_law(mu1, hhat, ctx);
  REQUIRE(b1.has_value());
  CHECK(*b1 == lts::Bidegree{1, 1});

  // Iterating lowers the first index again: (1|1) bracket (-1|1) = (0|2).
  Cochain x = lts::graded_bracket(mu1, hhat);
  auto b2 = lts::bidegree_bracket_law(x, hhat, ctx);
  REQUIRE(b2.has_value());
  CHECK(*b2 == lts::Bidegree{0, 2});
}

TEST_CASE("decomposition into the five components") {
  TripleSystem t = fixtures::example1();
  lts::Representation r = lts::adjoint_representation(t);
  const SplitContext ctx{2, 2};
  Cochain theta = lts::structure_cochain(lts::semidirect_product(t, r));

  lts::ThetaComponents comps = lts::decompose_theta(theta, ctx);
  CHECK(comps.sum() == theta);
  CHECK(comps.phi1.is_zero());
  CHECK(comps.psi.is_zero());
  CHECK(comps.mu2.is_zero());
  CHECK(comps.phi2.is_zero());
  CHECK(comps.mu1 == theta);

  // Random degree-1 cochains always reassemble from their components,
  // and each nonzero component is homogeneous of its nominal bidegree.
  std::mt19937 rng(123321);
  Cochain raw = fixtures::random_cochain(4, 1, rng, 0.5);
  lts::ThetaComponents rc = lts::decompose_theta(raw, ctx);
  CHECK(rc.sum() == raw);
  const lts::Bidegree expected[5] = {{3, -1}, {2, 0}, {1, 1}, {0, 2}, {-1, 3}};
  const Cochain* parts[5] = {&rc.phi1, &rc.mu1, &rc.psi, &rc.mu2, &rc.phi2};
  for (int i = 0; i < 5; ++i) {
    lts::BidegreeResult br = lts::bidegree_of(*parts[i], ctx);
    if (br.kind == lts::BidegreeKind::Homogeneous) {
      CHECK(br.value == expected[i]);
    } else {
      CHECK(br.kind == lts::BidegreeKind::Indeterminate);
    }
  }
}

TEST_CASE("component lifting places a tensor on one block mixture") {
  const SplitContext ctx{2, 2};
  // Pattern (g1, g2, g1) -> g2 with tensor value e_1' at (0, 1, 1) only.
  std::vector<Rational> tensor(2 * 2 * 2 * 2, Rational(0));
  // Row-major over (i, v, k), value vector length 2: entry (0, 1, 1),
  // coordinate 0.
  tensor[(((0 * 2) + 1) * 2 + 1) * 2 + 0] = 7;
  Cochain c = lts::lift_component({0, 1, 0}, 1, tensor, ctx);
  int hit[3] = {0, 3, 1};  // g2 argument offset by n1
  CHECK(c.coeff(hit, 2) == Rational(7));  // g2 output offset by n1
  CHECK(c.coeff(hit, 0) == Rational(0));
  int miss[3] = {0, 1, 1};
  CHECK(c.eval(miss) == nullptr);
  lts::BidegreeResult br = lts::bidegree_of(c, ctx);
  REQUIRE(br.kind == lts::BidegreeKind::Homogeneous);
  CHECK(br.value == lts::Bidegree{2, 0});
}

TEST_CASE("zero-flag bookkeeping survives arithmetic") {
  Cochain a(2, 1);
  int args[3] = {0, 1, 1};
  a.set_values(args, Vec{1, 0});
  CHECK_FALSE(a.is_zero());
  Cochain b = a;
  b.add_scaled(a, Rational(-1));
  CHECK(b.is_zero());
  CHECK(b == Cochain(2, 1));
  // Writing an explicit zero keeps the cochain logically zero.
  Cochain c(2, 1);
  c.set_values(args, Vec{0, 0});
  CHECK(c.is_zero());
  CHECK(c == Cochain(2, 1));
}
