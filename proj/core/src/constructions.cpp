#include <lts/constructions.hpp>

#include <functional>
#include <utility>

namespace lts {

// ---------------------------------------------------------------------------
// Generalized actions
// ---------------------------------------------------------------------------

GeneralizedAction::GeneralizedAction(int base_dim, int carrier_dim)
    : m_base(base_dim), m_carrier(carrier_dim) {
  if (base_dim < 1 || carrier_dim < 1) {
    throw InvalidInputError("generalized action dimensions must be >= 1");
  }
  m_tau.resize(static_cast<std::size_t>(base_dim) * carrier_dim * carrier_dim *
               carrier_dim);
}

std::size_t GeneralizedAction::index(int x, int u, int v) const {
  return ((static_cast<std::size_t>(x) * m_carrier + u) * m_carrier + v) *
         m_carrier;
}

const Rational& GeneralizedAction::tau(int x, int u, int v, int out) const {
  return m_tau[index(x, u, v) + static_cast<std::size_t>(out)];
}

void GeneralizedAction::set_tau(int x, int u, int v, const Vec& value) {
  if (x < 0 || x >= m_base || u < 0 || u >= m_carrier || v < 0 ||
      v >= m_carrier) {
    throw InvalidInputError("tau index out of range");
  }
  if (static_cast<int>(value.size()) != m_carrier) {
    throw InvalidInputError("tau value has wrong dimension");
  }
  std::size_t base = index(x, u, v);
  for (int o = 0; o < m_carrier; ++o) m_tau[base + o] = value[o];
}

Vec GeneralizedAction::tau_vec(int x, int u, int v) const {
  Vec r = zero_vec(m_carrier);
  std::size_t base = index(x, u, v);
  for (int o = 0; o < m_carrier; ++o) r[o] = m_tau[base + o];
  return r;
}

Vec GeneralizedAction::dtau_vec(int x, int u, int v) const {
  Vec r = tau_vec(x, v, u);
  std::size_t base = index(x, u, v);
  for (int o = 0; o < m_carrier; ++o) r[o] -= m_tau[base + o];
  return r;
}

// ---------------------------------------------------------------------------
// Lift assembly helpers
// ---------------------------------------------------------------------------

namespace {

/// Build the dense tensor of one trilinear component: fill(i, j, k) must
/// return the value vector (length dout) at the component basis tuple.
std::vector<Rational> tensor3(
    int d0, int d1, int d2, int dout,
    const std::function<Vec(int, int, int)>& fill) {
  std::vector<Rational> t(static_cast<std::size_t>(d0) * d1 * d2 * dout);
  std::size_t pos = 0;
  for (int i = 0; i < d0; ++i) {
    for (int j = 0; j < d1; ++j) {
      for (int k = 0; k < d2; ++k) {
        Vec v = fill(i, j, k);
        for (int o = 0; o < dout; ++o) t[pos++] = v[o];
      }
    }
  }
  return t;
}

/// Lifted bracket-plus-action cochain of a triple system with an ordinary
/// representation, placed on the side `block` of the splitting (0: the
/// system lives on g1 and acts on g2; 1: the system lives on g2 and acts
/// on g1).  This is the degree-1 cochain of the semidirect bracket
///   [x+u, y+v, z+w] = [x,y,z] + D(x,y)w + rho(y,z)u - rho(x,z)v
/// with (x,y,z) in the system block and (u,v,w) in the carrier block.
Cochain lifted_bracket_action(const TripleSystem& t, const Representation& r,
                              const SplitContext& ctx, int block) {
  const int n = t.dim();
  const int m = r.carrier_dim();
  if (t.dim() != r.base_dim()) {
    throw InvalidInputError("representation base does not match the system");
  }
  if ((block == 0 && (ctx.n1 != n || ctx.n2 != m)) ||
      (block == 1 && (ctx.n2 != n || ctx.n1 != m))) {
    throw InvalidInputError("splitting does not match the acting pair");
  }
  const int S = block;      // system block
  const int C = 1 - block;  // carrier block

  Cochain out = lift_component(
      {S, S, S}, S,
      tensor3(n, n, n, n,
              [&](int i, int j, int k) {
                Vec v = zero_vec(n);
                const Rational* b = t.bracket_basis(i, j, k);
                for (int o = 0; o < n; ++o) v[o] = b[o];
                return v;
              }),
      ctx);
  // (S, S, C) -> C: D(x, y) w.
  out.add_scaled(
      lift_component({S, S, C}, C,
                     tensor3(n, n, m, m,
                             [&](int i, int j, int w) {
                               return r.derived(i, j).column(w);
                             }),
                     ctx),
      1);
  // (C, S, S) -> C: rho(y, z) u.
  out.add_scaled(
      lift_component({C, S, S}, C,
                     tensor3(m, n, n, m,
                             [&](int u, int j, int k) {
                               return r.rho(j, k).column(u);
                             }),
                     ctx),
      1);
  // (S, C, S) -> C: -rho(x, z) v.
  out.add_scaled(
      lift_component({S, C, S}, C,
                     tensor3(n, m, n, m,
                             [&](int i, int v, int k) {
                               Vec c = r.rho(i, k).column(v);
                               for (Rational& q : c) q = -q;
                               return c;
                             }),
                     ctx),
      1);
  return out;
}

/// Lifted generalized part of an action: with (x,y,z) in the system block
/// and (u,v,w) in the carrier block,
///   tauhat(x+u, y+v, z+w) = Dtau(z)(u,v) + tau(x)(v,w) - tau(y)(u,w),
/// placed on side `block` like lifted_bracket_action.
Cochain lifted_tau(const GeneralizedAction& act, const SplitContext& ctx,
                   int block) {
  const int n = act.base_dim();
  const int m = act.carrier_dim();
  if ((block == 0 && (ctx.n1 != n || ctx.n2 != m)) ||
      (block == 1 && (ctx.n2 != n || ctx.n1 != m))) {
    throw InvalidInputError("splitting does not match the acting pair");
  }
  const int S = block;
  const int C = 1 - block;

  // (C, C, S) -> C: Dtau(z)(u, v).
  Cochain out = lift_component(
      {C, C, S}, C,
      tensor3(m, m, n, m,
              [&](int u, int v, int z) { return act.dtau_vec(z, u, v); }),
      ctx);
  // (S, C, C) -> C: tau(x)(v, w).
  out.add_scaled(
      lift_component({S, C, C}, C,
                     tensor3(n, m, m, m,
                             [&](int x, int v, int w) {
                               return act.tau_vec(x, v, w);
                             }),
                     ctx),
      1);
  // (C, S, C) -> C: -tau(y)(u, w).
  out.add_scaled(
      lift_component({C, S, C}, C,
                     tensor3(m, n, m, m,
                             [&](int u, int y, int w) {
                               Vec c = act.tau_vec(y, u, w);
                               for (Rational& q : c) q = -q;
                               return c;
                             }),
                     ctx),
      1);
  return out;
}

/// First nonzero tuple + value block of a cochain, as a counterexample.
std::optional<AxiomCounterexample> cochain_counterexample(const Cochain& c) {
  auto t = c.first_nonzero_tuple();
  if (!t) return std::nullopt;
  Vec defect = zero_vec(c.dim());
  const Rational* v = c.eval(t->data());
  for (int o = 0; o < c.dim(); ++o) defect[o] = v[o];
  return AxiomCounterexample{*t, defect};
}

}  // namespace

// ---------------------------------------------------------------------------
// Matched pairs
// ---------------------------------------------------------------------------

MatchedPairReport check_matched_pair(const MatchedPair& mp) {
  const int n1 = mp.t1.dim();
  const int n2 = mp.t2.dim();
  if (mp.rho1.base_dim() != n1 || mp.rho1.carrier_dim() != n2 ||
      mp.rho2.base_dim() != n2 || mp.rho2.carrier_dim() != n1) {
    throw InvalidInputError("matched pair dimensions are inconsistent");
  }
  if (!lts_axioms_check(mp.t1).pass() || !lts_axioms_check(mp.t2).pass()) {
    throw InvalidStructureError(
        "matched pairs are checked over two valid systems");
  }
  MatchedPairReport rep;
  rep.rep1 = check_representation(mp.t1, mp.rho1);
  rep.rep2 = check_representation(mp.t2, mp.rho2);

  const SplitContext ctx{n1, n2};
  Cochain mu1hat = lifted_bracket_action(mp.t1, mp.rho1, ctx, 0);
  Cochain mu2hat = lifted_bracket_action(mp.t2, mp.rho2, ctx, 1);
  Cochain mixed = graded_bracket(mu1hat, mu2hat);
  rep.mixed_ok = mixed.is_zero();
  if (!rep.mixed_ok) rep.mixed_fail = cochain_counterexample(mixed);
  return rep;
}

TripleSystem double_system(const MatchedPair& mp) {
  const SplitContext ctx{mp.t1.dim(), mp.t2.dim()};
  Cochain theta = lifted_bracket_action(mp.t1, mp.rho1, ctx, 0);
  theta.add_scaled(lifted_bracket_action(mp.t2, mp.rho2, ctx, 1), 1);
  return cochain_to_system(theta);
}

MatchedPair extract_matched_pair(const Cochain& theta,
                                 const SplitContext& ctx) {
  Classification cls = classify(theta, ctx);
  if (!cls.is_strict()) {
    throw InvalidStructureError(
        "matched pair extraction needs a strict structure");
  }
  const int n1 = ctx.n1;
  const int n2 = ctx.n2;
  MatchedPair mp{TripleSystem(n1), TripleSystem(n2), Representation(n1, n2),
                 Representation(n2, n1)};

  int args[3];
  // Pure-block brackets.
  Vec v1 = zero_vec(n1);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      for (int k = 0; k < n1; ++k) {
        args[0] = i; args[1] = j; args[2] = k;
        for (int o = 0; o < n1; ++o) v1[o] = theta.coeff(args, o);
        mp.t1.set_bracket(i, j, k, v1);
      }
    }
  }
  Vec v2 = zero_vec(n2);
  for (int i = 0; i < n2; ++i) {
    for (int j = 0; j < n2; ++j) {
      for (int k = 0; k < n2; ++k) {
        args[0] = n1 + i; args[1] = n1 + j; args[2] = n1 + k;
        for (int o = 0; o < n2; ++o) v2[o] = theta.coeff(args, n1 + o);
        mp.t2.set_bracket(i, j, k, v2);
      }
    }
  }
  // Actions: rho1(x,y)u = [u,x,y] read in the second block; rho2(u,v)x =
  // [x,u,v] read in the first block.
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      LinearMap& m = mp.rho1.rho(i, j);
      for (int u = 0; u < n2; ++u) {
        args[0] = n1 + u; args[1] = i; args[2] = j;
        for (int o = 0; o < n2; ++o) m.at(o, u) = theta.coeff(args, n1 + o);
      }
    }
  }
  for (int u = 0; u < n2; ++u) {
    for (int v = 0; v < n2; ++v) {
      LinearMap& m = mp.rho2.rho(u, v);
      for (int x = 0; x < n1; ++x) {
        args[0] = x; args[1] = n1 + u; args[2] = n1 + v;
        for (int o = 0; o < n1; ++o) m.at(o, x) = theta.coeff(args, o);
      }
    }
  }
  return mp;
}

// ---------------------------------------------------------------------------
// Generalized representations
// ---------------------------------------------------------------------------

GeneralizedRepReport check_generalized_representation(
    const TripleSystem& t, const GeneralizedRepData& data) {
  if (data.rho.base_dim() != t.dim() ||
      data.action.base_dim() != t.dim() ||
      data.action.carrier_dim() != data.rho.carrier_dim()) {
    throw InvalidInputError("generalized representation dimensions mismatch");
  }
  if (!lts_axioms_check(t).pass()) {
    throw InvalidStructureError(
        "generalized representations are checked over a valid system");
  }
  const SplitContext ctx{t.dim(), data.rho.carrier_dim()};
  Cochain e = lifted_bracket_action(t, data.rho, ctx, 0);
  e.add_scaled(lifted_tau(data.action, ctx, 0), 1);

  // The lift-sum lies in the constrained subspace for any rho and tau
  // once the system's own table does; anything else is a library bug.
  if (!is_lts_cochain(e).ok) {
    throw InternalError("lifted action left the constrained subspace");
  }

  Cochain sq = graded_bracket(e, e);
  GeneralizedRepReport rep;
  rep.ok = sq.is_zero();
  if (!rep.ok) rep.fail = cochain_counterexample(sq);
  return rep;
}

GeneralizedRepData adjoint_generalized_representation(const TripleSystem& t) {
  const int n = t.dim();
  GeneralizedRepData data{adjoint_representation(t), GeneralizedAction(n, n)};
  Vec v = zero_vec(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const Rational* b = t.bracket_basis(x, y, z);
        for (int o = 0; o < n; ++o) v[o] = b[o];
        data.action.set_tau(x, y, z, v);
      }
    }
  }
  return data;
}

TripleSystem generalized_semidirect(const TripleSystem& t,
                                    const GeneralizedRepData& data) {
  const SplitContext ctx{t.dim(), data.rho.carrier_dim()};
  Cochain e = lifted_bracket_action(t, data.rho, ctx, 0);
  e.add_scaled(lifted_tau(data.action, ctx, 0), 1);
  return cochain_to_system(e);
}

// ---------------------------------------------------------------------------
// Generalized matched pairs
// ---------------------------------------------------------------------------

namespace {

/// The four lifted pieces of a generalized matched pair: the two pure
/// brackets and the two action sums E_i = rhohat_i + tauhat_i.
struct GmpLifts {
  Cochain pi1, pi2, e1, e2;
};

GmpLifts gmp_lifts(const GeneralizedMatchedPair& gmp, const SplitContext& ctx) {
  const int n1 = gmp.t1.dim();
  const int n2 = gmp.t2.dim();

  GmpLifts L{Cochain(ctx.total(), 1), Cochain(ctx.total(), 1),
             Cochain(ctx.total(), 1), Cochain(ctx.total(), 1)};

  L.pi1 = lift_component(
      {0, 0, 0}, 0,
      tensor3(n1, n1, n1, n1,
              [&](int i, int j, int k) {
                Vec v = zero_vec(n1);
                const Rational* b = gmp.t1.bracket_basis(i, j, k);
                for (int o = 0; o < n1; ++o) v[o] = b[o];
                return v;
              }),
      ctx);
  L.pi2 = lift_component(
      {1, 1, 1}, 1,
      tensor3(n2, n2, n2, n2,
              [&](int i, int j, int k) {
                Vec v = zero_vec(n2);
                const Rational* b = gmp.t2.bracket_basis(i, j, k);
                for (int o = 0; o < n2; ++o) v[o] = b[o];
                return v;
              }),
      ctx);

  // E_i = ordinary action terms + generalized terms, without the bracket.
  L.e1 = lifted_bracket_action(gmp.t1, gmp.act1.rho, ctx, 0);
  L.e1.add_scaled(L.pi1, -1);
  L.e1.add_scaled(lifted_tau(gmp.act1.action, ctx, 0), 1);
  L.e2 = lifted_bracket_action(gmp.t2, gmp.act2.rho, ctx, 1);
  L.e2.add_scaled(L.pi2, -1);
  L.e2.add_scaled(lifted_tau(gmp.act2.action, ctx, 1), 1);
  return L;
}

void check_gmp_dims(const GeneralizedMatchedPair& gmp) {
  const int n1 = gmp.t1.dim();
  const int n2 = gmp.t2.dim();
  if (gmp.act1.rho.base_dim() != n1 || gmp.act1.rho.carrier_dim() != n2 ||
      gmp.act1.action.base_dim() != n1 ||
      gmp.act1.action.carrier_dim() != n2 ||
      gmp.act2.rho.base_dim() != n2 || gmp.act2.rho.carrier_dim() != n1 ||
      gmp.act2.action.base_dim() != n2 ||
      gmp.act2.action.carrier_dim() != n1) {
    throw InvalidInputError(
        "generalized matched pair dimensions are inconsistent");
  }
}

}  // namespace

GeneralizedMatchedPairReport check_generalized_matched_pair(
    const GeneralizedMatchedPair& gmp) {
  check_gmp_dims(gmp);
  if (!lts_axioms_check(gmp.t1).pass() || !lts_axioms_check(gmp.t2).pass()) {
    throw InvalidStructureError(
        "generalized matched pairs are checked over two valid systems");
  }
  const SplitContext ctx{gmp.t1.dim(), gmp.t2.dim()};
  GmpLifts L = gmp_lifts(gmp, ctx);

  // Regroup the lifted pieces by block bidegree: mu1 = pi1 + rho1 terms,
  // mu2 = pi2 + rho2 terms, psi = both tau terms.  The three conditions
  // are the bidegree components of the squared sum, so their conjunction
  // is exactly "the double closes"; grouping per side instead would be
  // strictly stronger (see the report's documentation).
  Cochain theta = L.pi1;
  theta.add_scaled(L.pi2, 1);
  theta.add_scaled(L.e1, 1);
  theta.add_scaled(L.e2, 1);
  ThetaComponents comps = decompose_theta(theta, ctx);
  if (!comps.phi1.is_zero() || !comps.phi2.is_zero()) {
    throw InternalError("matched-pair lifts left their bidegrees");
  }

  GeneralizedMatchedPairReport rep;

  Cochain eq1 = graded_bracket(comps.mu1, comps.mu1).scaled(Rational(1, 2));
  rep.eq1_ok = eq1.is_zero();
  if (!rep.eq1_ok) rep.eq1_fail = cochain_counterexample(eq1);

  Cochain eq2 = graded_bracket(comps.mu2, comps.mu2).scaled(Rational(1, 2));
  rep.eq2_ok = eq2.is_zero();
  if (!rep.eq2_ok) rep.eq2_fail = cochain_counterexample(eq2);

  Cochain eq3 = graded_bracket(comps.mu1, comps.psi);
  eq3.add_scaled(graded_bracket(comps.mu2, comps.psi), 1);
  eq3.add_scaled(graded_bracket(comps.psi, comps.psi), Rational(1, 2));
  eq3.add_scaled(graded_bracket(comps.mu1, comps.mu2), 1);
  rep.eq3_ok = eq3.is_zero();
  if (!rep.eq3_ok) rep.eq3_fail = cochain_counterexample(eq3);

  return rep;
}

TripleSystem generalized_double(const GeneralizedMatchedPair& gmp) {
  check_gmp_dims(gmp);
  const SplitContext ctx{gmp.t1.dim(), gmp.t2.dim()};
  GmpLifts L = gmp_lifts(gmp, ctx);
  Cochain theta = L.pi1;
  theta.add_scaled(L.pi2, 1);
  theta.add_scaled(L.e1, 1);
  theta.add_scaled(L.e2, 1);
  return cochain_to_system(theta);
}

GeneralizedMatchedPair extract_generalized_matched_pair(
    const Cochain& theta, const SplitContext& ctx) {
  Classification cls = classify(theta, ctx);
  if (!cls.is_twilled()) {
    throw InvalidStructureError(
        "generalized matched pair extraction needs a twilled structure");
  }
  const int n1 = ctx.n1;
  const int n2 = ctx.n2;
  GeneralizedMatchedPair gmp{
      TripleSystem(n1), TripleSystem(n2),
      GeneralizedRepData{Representation(n1, n2), GeneralizedAction(n1, n2)},
      GeneralizedRepData{Representation(n2, n1), GeneralizedAction(n2, n1)}};

  int args[3];
  Vec v1 = zero_vec(n1);
  Vec v2 = zero_vec(n2);

  // Pure-block brackets and ordinary actions (same reads as for matched
  // pairs).
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      for (int k = 0; k < n1; ++k) {
        args[0] = i; args[1] = j; args[2] = k;
        for (int o = 0; o < n1; ++o) v1[o] = theta.coeff(args, o);
        gmp.t1.set_bracket(i, j, k, v1);
      }
      LinearMap& m = gmp.act1.rho.rho(i, j);
      for (int u = 0; u < n2; ++u) {
        args[0] = n1 + u; args[1] = i; args[2] = j;
        for (int o = 0; o < n2; ++o) m.at(o, u) = theta.coeff(args, n1 + o);
      }
    }
  }
  for (int u = 0; u < n2; ++u) {
    for (int v = 0; v < n2; ++v) {
      for (int k = 0; k < n2; ++k) {
        args[0] = n1 + u; args[1] = n1 + v; args[2] = n1 + k;
        for (int o = 0; o < n2; ++o) v2[o] = theta.coeff(args, n1 + o);
        gmp.t2.set_bracket(u, v, k, v2);
      }
      LinearMap& m = gmp.act2.rho.rho(u, v);
      for (int x = 0; x < n1; ++x) {
        args[0] = x; args[1] = n1 + u; args[2] = n1 + v;
        for (int o = 0; o < n1; ++o) m.at(o, x) = theta.coeff(args, o);
      }
    }
  }

  // Generalized parts: tau1(x)(u,v) = [x,u,v] read in the second block,
  // tau2(u)(x,y) = [u,x,y] read in the first block.
  for (int x = 0; x < n1; ++x) {
    for (int u = 0; u < n2; ++u) {
      for (int v = 0; v < n2; ++v) {
        args[0] = x; args[1] = n1 + u; args[2] = n1 + v;
        for (int o = 0; o < n2; ++o) v2[o] = theta.coeff(args, n1 + o);
        gmp.act1.action.set_tau(x, u, v, v2);
      }
    }
  }
  for (int u = 0; u < n2; ++u) {
    for (int x = 0; x < n1; ++x) {
      for (int y = 0; y < n1; ++y) {
        args[0] = n1 + u; args[1] = x; args[2] = y;
        for (int o = 0; o < n1; ++o) v1[o] = theta.coeff(args, o);
        gmp.act2.action.set_tau(u, x, y, v1);
      }
    }
  }
  return gmp;
}

// ---------------------------------------------------------------------------
// Relative Rota-Baxter operators
// ---------------------------------------------------------------------------

namespace {

void check_rb_dims(const TripleSystem& t, const Representation& r,
                   const LinearMap& T) {
  if (r.base_dim() != t.dim()) {
    throw InvalidInputError(
        "representation base dimension does not match the triple system");
  }
  if (T.rows() != t.dim() || T.cols() != r.carrier_dim()) {
    throw InvalidInputError(
        "operator must map the carrier into the system (rows = dim, "
        "cols = carrier dimension)");
  }
}

/// D(a, b) w for coordinate vectors a, b on g and basis w on V.
Vec derived_apply(const Representation& r, const Vec& a, const Vec& b,
                  const Vec& w) {
  LinearMap d = r.rho_vec(b, a) - r.rho_vec(a, b);
  return d.apply(w);
}

}  // namespace

RelativeRBReport check_relative_rb(const TripleSystem& t,
                                   const Representation& r,
                                   const LinearMap& T) {
  check_rb_dims(t, r, T);
  const int m = r.carrier_dim();
  RelativeRBReport rep;
  rep.ok = true;

  for (int u = 0; u < m && rep.ok; ++u) {
    Vec Tu = T.column(u);
    Vec eu = zero_vec(m);
    eu[u] = 1;
    for (int v = 0; v < m && rep.ok; ++v) {
      Vec Tv = T.column(v);
      Vec ev = zero_vec(m);
      ev[v] = 1;
      for (int w = 0; w < m && rep.ok; ++w) {
        Vec Tw = T.column(w);
        Vec ew = zero_vec(m);
        ew[w] = 1;
        // [Tu, Tv, Tw] - T(D(Tu,Tv)w + rho(Tv,Tw)u - rho(Tu,Tw)v).
        Vec lhs = t.bracket(Tu, Tv, Tw);
        Vec inner = derived_apply(r, Tu, Tv, ew);
        Vec t2 = r.rho_vec(Tv, Tw).apply(eu);
        Vec t3 = r.rho_vec(Tu, Tw).apply(ev);
        for (int o = 0; o < m; ++o) inner[o] += t2[o] - t3[o];
        Vec rhs = T.apply(inner);
        bool bad = false;
        Vec defect = zero_vec(t.dim());
        for (int o = 0; o < t.dim(); ++o) {
          defect[o] = lhs[o] - rhs[o];
          bad = bad || !is_zero(defect[o]);
        }
        if (bad) {
          rep.ok = false;
          rep.fail = AxiomCounterexample{{u, v, w}, defect};
        }
      }
    }
  }
  return rep;
}

RBTwistResult rb_twist(const TripleSystem& t, const Representation& r,
                       const LinearMap& T) {
  check_rb_dims(t, r, T);
  if (!lts_axioms_check(t).pass()) {
    throw InvalidStructureError("twisting needs a valid triple system");
  }
  if (!check_representation(t, r).pass()) {
    throw InvalidStructureError("twisting needs a valid representation");
  }
  const SplitContext ctx{t.dim(), r.carrier_dim()};
  Cochain theta = structure_cochain(semidirect_product(t, r));

  RBTwistResult result{twist_series(theta, T, ctx), ThetaComponents{},
                       Classification{}};
  result.components = decompose_theta(result.twisted, ctx);
  result.classification = classify(result.twisted, ctx);
  return result;
}

InducedStructures induced_structures(const TripleSystem& t,
                                     const Representation& r,
                                     const LinearMap& T) {
  check_rb_dims(t, r, T);
  RelativeRBReport rb = check_relative_rb(t, r, T);
  if (!rb.ok) {
    throw InvalidStructureError(
        "induced structures exist only for a relative Rota-Baxter operator");
  }
  const int n = t.dim();
  const int m = r.carrier_dim();
  InducedStructures out{TripleSystem(m), Representation(m, n)};

  // Bracket on V: [u,v,w]_T = D(Tu,Tv)w + rho(Tv,Tw)u - rho(Tu,Tw)v.
  for (int u = 0; u < m; ++u) {
    Vec Tu = T.column(u);
    Vec eu = zero_vec(m);
    eu[u] = 1;
    for (int v = 0; v < m; ++v) {
      Vec Tv = T.column(v);
      Vec ev = zero_vec(m);
      ev[v] = 1;
      for (int w = 0; w < m; ++w) {
        Vec Tw = T.column(w);
        Vec ew = zero_vec(m);
        ew[w] = 1;
        Vec val = derived_apply(r, Tu, Tv, ew);
        Vec t2 = r.rho_vec(Tv, Tw).apply(eu);
        Vec t3 = r.rho_vec(Tu, Tw).apply(ev);
        for (int o = 0; o < m; ++o) val[o] += t2[o] - t3[o];
        out.on_v.set_bracket(u, v, w, val);
      }
    }
  }

  // varrho(u,v)x = [x,Tu,Tv] - T(D(x,Tu)v - rho(x,Tv)u).
  for (int u = 0; u < m; ++u) {
    Vec Tu = T.column(u);
    Vec eu = zero_vec(m);
    eu[u] = 1;
    for (int v = 0; v < m; ++v) {
      Vec Tv = T.column(v);
      Vec ev = zero_vec(m);
      ev[v] = 1;
      LinearMap& mat = out.varrho.rho(u, v);
      for (int x = 0; x < n; ++x) {
        Vec ex = zero_vec(n);
        ex[x] = 1;
        Vec val = t.bracket(ex, Tu, Tv);
        Vec inner = derived_apply(r, ex, Tu, ev);
        Vec sub = r.rho_vec(ex, Tv).apply(eu);
        for (int o = 0; o < m; ++o) inner[o] -= sub[o];
        Vec correction = T.apply(inner);
        for (int o = 0; o < n; ++o) mat.at(o, x) = val[o] - correction[o];
      }
    }
  }
  return out;
}

Cochain closed_form_rb_twist(const TripleSystem& t, const Representation& r,
                             const LinearMap& T) {
  check_rb_dims(t, r, T);
  if (!lts_axioms_check(t).pass()) {
    throw InvalidStructureError("twisting needs a valid triple system");
  }
  if (!check_representation(t, r).pass()) {
    throw InvalidStructureError("twisting needs a valid representation");
  }
  const int n = t.dim();
  const int m = r.carrier_dim();
  const SplitContext ctx{n, m};
  const int N = ctx.total();

  auto e_g = [&](int i) {
    Vec v = zero_vec(n);
    v[i] = 1;
    return v;
  };
  auto e_v = [&](int i) {
    Vec v = zero_vec(m);
    v[i] = 1;
    return v;
  };

  // sigma(u)(y,z) = [Tu, y, z] - T(rho(y,z) u) for basis u, y, z.
  auto sigma = [&](int u, int y, int z) {
    Vec val = t.bracket(T.column(u), e_g(y), e_g(z));
    Vec corr = T.apply(r.rho(y, z).column(u));
    for (int o = 0; o < n; ++o) val[o] -= corr[o];
    return val;
  };
  // Dsigma(w)(x,y) = [x, y, Tw] - T(D(x,y) w).
  auto dsigma = [&](int w, int x, int y) {
    Vec val = t.bracket(e_g(x), e_g(y), T.column(w));
    Vec corr = T.apply(r.derived(x, y).column(w));
    for (int o = 0; o < n; ++o) val[o] -= corr[o];
    return val;
  };
  // varrho(u,v)x = [x, Tu, Tv] - T(D(x,Tu)v - rho(x,Tv)u).
  auto varrho = [&](int u, int v, int x) {
    Vec val = t.bracket(e_g(x), T.column(u), T.column(v));
    Vec inner = derived_apply(r, e_g(x), T.column(u), e_v(v));
    Vec sub = r.rho_vec(e_g(x), T.column(v)).apply(e_v(u));
    for (int o = 0; o < m; ++o) inner[o] -= sub[o];
    Vec corr = T.apply(inner);
    for (int o = 0; o < n; ++o) val[o] -= corr[o];
    return val;
  };
  // tau(x)(v,w) = D(x,Tv)w - rho(x,Tw)v.
  auto tau = [&](int x, int v, int w) {
    Vec val = derived_apply(r, e_g(x), T.column(v), e_v(w));
    Vec sub = r.rho_vec(e_g(x), T.column(w)).apply(e_v(v));
    for (int o = 0; o < m; ++o) val[o] -= sub[o];
    return val;
  };
  // Dtau(z)(u,v) = rho(Tv,z)u - rho(Tu,z)v.
  auto dtau = [&](int z, int u, int v) {
    Vec val = r.rho_vec(T.column(v), e_g(z)).apply(e_v(u));
    Vec sub = r.rho_vec(T.column(u), e_g(z)).apply(e_v(v));
    for (int o = 0; o < m; ++o) val[o] -= sub[o];
    return val;
  };
  // [u,v,w]_T and the closing obstruction [Tu,Tv,Tw] - T([u,v,w]_T).
  auto bracket_T = [&](int u, int v, int w) {
    Vec val = derived_apply(r, T.column(u), T.column(v), e_v(w));
    Vec t2 = r.rho_vec(T.column(v), T.column(w)).apply(e_v(u));
    Vec t3 = r.rho_vec(T.column(u), T.column(w)).apply(e_v(v));
    for (int o = 0; o < m; ++o) val[o] += t2[o] - t3[o];
    return val;
  };

  Cochain out(N, 1);
  int args[3];
  Vec val = zero_vec(N);
  auto clear = [&]() { for (Rational& q : val) q = 0; };
  auto put_g = [&](const Vec& g) {
    for (int o = 0; o < n; ++o) val[o] += g[o];
  };
  auto put_v = [&](const Vec& v) {
    for (int o = 0; o < m; ++o) val[n + o] += v[o];
  };

  // (g, g, g): the original bracket, untouched by the twist.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        clear();
        const Rational* b = t.bracket_basis(x, y, z);
        for (int o = 0; o < n; ++o) val[o] = b[o];
        args[0] = x; args[1] = y; args[2] = z;
        if (!is_zero_vec(val)) out.set_values(args, val);
      }
    }
  }
  // (g, g, V): g-part Dsigma(w)(x,y), V-part D(x,y)w.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int w = 0; w < m; ++w) {
        clear();
        put_g(dsigma(w, x, y));
        put_v(r.derived(x, y).column(w));
        args[0] = x; args[1] = y; args[2] = n + w;
        if (!is_zero_vec(val)) out.set_values(args, val);
      }
    }
  }
  // (V, g, g): g-part sigma(u)(y,z), V-part rho(y,z)u.
  for (int u = 0; u < m; ++u) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        clear();
        put_g(sigma(u, y, z));
        put_v(r.rho(y, z).column(u));
        args[0] = n + u; args[1] = y; args[2] = z;
        if (!is_zero_vec(val)) out.set_values(args, val);
      }
    }
  }
  // (g, V, g): g-part -sigma(v)(x,z), V-part -rho(x,z)v.
  for (int x = 0; x < n; ++x) {
    for (int v = 0; v < m; ++v) {
      for (int z = 0; z < n; ++z) {
        clear();
        Vec s = sigma(v, x, z);
        for (Rational& q : s) q = -q;
        put_g(s);
        Vec c = r.rho(x, z).column(v);
        for (Rational& q : c) q = -q;
        put_v(c);
        args[0] = x; args[1] = n + v; args[2] = z;
        if (!is_zero_vec(val)) out.set_values(args, val);
      }
    }
  }
  // (V, V, g): g-part Dvarrho(u,v)z = varrho(v,u)z - varrho(u,v)z,
  // V-part Dtau(z)(u,v).
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      for (int z = 0; z < n; ++z) {
        clear();
        Vec a = varrho(v, u, z);
        Vec b = varrho(u, v, z);
        for (int o = 0; o < n; ++o) a[o] -= b[o];
        put_g(a);
        put_v(dtau(z, u, v));
        args[0] = n + u; args[1] = n + v; args[2] = z;
        if (!is_zero_vec(val)) out.set_values(args, val);
      }
    }
  }
  // (g, V, V): g-part varrho(v,w)x, V-part tau(x)(v,w).
  for (int x = 0; x < n; ++x) {
    for (int v = 0; v < m; ++v) {
      for (int w = 0; w < m; ++w) {
        clear();
        put_g(varrho(v, w, x));
        put_v(tau(x, v, w));
        args[0] = x; args[1] = n + v; args[2] = n + w;
        if (!is_zero_vec(val)) out.set_values(args, val);
      }
    }
  }
  // (V, g, V): g-part -varrho(u,w)y, V-part -tau(y)(u,w).
  for (int u = 0; u < m; ++u) {
    for (int y = 0; y < n; ++y) {
      for (int w = 0; w < m; ++w) {
        clear();
        Vec a = varrho(u, w, y);
        for (Rational& q : a) q = -q;
        put_g(a);
        Vec b = tau(y, u, w);
        for (Rational& q : b) q = -q;
        put_v(b);
        args[0] = n + u; args[1] = y; args[2] = n + w;
        if (!is_zero_vec(val)) out.set_values(args, val);
      }
    }
  }
  // (V, V, V): g-part the closing obstruction, V-part [u,v,w]_T.
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      for (int w = 0; w < m; ++w) {
        clear();
        Vec bt = bracket_T(u, v, w);
        Vec obstruction =
            t.bracket(T.column(u), T.column(v), T.column(w));
        Vec tb = T.apply(bt);
        for (int o = 0; o < n; ++o) obstruction[o] -= tb[o];
        put_g(obstruction);
        put_v(bt);
        args[0] = n + u; args[1] = n + v; args[2] = n + w;
        if (!is_zero_vec(val)) out.set_values(args, val);
      }
    }
  }

  return out;
}

}  // namespace lts
