#include <lts/linfty.hpp>

#include <lts/detail/sparse.hpp>

#include <string>

namespace lts {

// ---------------------------------------------------------------------------
// HomCochain storage
// ---------------------------------------------------------------------------

namespace {

std::size_t pow_st(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace

HomCochain::HomCochain(int n1, int n2, int degree)
    : m_n1(n1), m_n2(n2), m_degree(degree) {
  if (n1 < 1 || n2 < 1) {
    throw InvalidInputError("hom cochain dimensions must be >= 1");
  }
  if (degree < 0) throw InvalidInputError("hom cochain degree must be >= 0");
  m_tuples = pow_st(n2, arity());
  m_c.resize(m_tuples * static_cast<std::size_t>(n1));
  m_nz.assign(m_tuples, 0);
}

HomCochain HomCochain::from_linear_map(const LinearMap& h) {
  HomCochain f(h.rows(), h.cols(), 0);
  int args[1];
  for (int u = 0; u < h.cols(); ++u) {
    args[0] = u;
    for (int o = 0; o < h.rows(); ++o) {
      if (!lts::is_zero(h.at(o, u))) f.set_value(args, o, h.at(o, u));
    }
  }
  return f;
}

std::size_t HomCochain::tuple_index(const int* args) const {
  std::size_t ti = 0;
  for (int a = 0; a < arity(); ++a) {
    ti = ti * static_cast<std::size_t>(m_n2) + static_cast<std::size_t>(args[a]);
  }
  return ti;
}

const Rational* HomCochain::eval(const int* args) const {
  std::size_t ti = tuple_index(args);
  return m_nz[ti] ? m_c.data() + ti * static_cast<std::size_t>(m_n1) : nullptr;
}

void HomCochain::set_value(const int* args, int out, const Rational& v) {
  std::size_t ti = tuple_index(args);
  m_c[ti * m_n1 + out] = v;
  if (!lts::is_zero(v)) m_nz[ti] = 1;
}

void HomCochain::refresh_zero_flags() {
  for (std::size_t ti = 0; ti < m_tuples; ++ti) {
    bool nz = false;
    for (int o = 0; o < m_n1 && !nz; ++o) {
      nz = !lts::is_zero(m_c[ti * m_n1 + o]);
    }
    m_nz[ti] = nz ? 1 : 0;
  }
}

bool HomCochain::is_zero() const {
  for (std::size_t ti = 0; ti < m_tuples; ++ti) {
    if (!m_nz[ti]) continue;
    for (int o = 0; o < m_n1; ++o) {
      if (!lts::is_zero(m_c[ti * m_n1 + o])) return false;
    }
  }
  return true;
}

HomCochain HomCochain::operator+(const HomCochain& other) const {
  if (other.m_n1 != m_n1 || other.m_n2 != m_n2 ||
      other.m_degree != m_degree) {
    throw InvalidInputError("hom cochain shape mismatch in addition");
  }
  HomCochain r = *this;
  for (std::size_t i = 0; i < m_c.size(); ++i) r.m_c[i] += other.m_c[i];
  r.refresh_zero_flags();
  return r;
}

HomCochain HomCochain::operator-(const HomCochain& other) const {
  if (other.m_n1 != m_n1 || other.m_n2 != m_n2 ||
      other.m_degree != m_degree) {
    throw InvalidInputError("hom cochain shape mismatch in subtraction");
  }
  HomCochain r = *this;
  for (std::size_t i = 0; i < m_c.size(); ++i) r.m_c[i] -= other.m_c[i];
  r.refresh_zero_flags();
  return r;
}

HomCochain HomCochain::scaled(const Rational& s) const {
  HomCochain r = *this;
  for (Rational& v : r.m_c) v *= s;
  r.refresh_zero_flags();
  return r;
}

bool HomCochain::operator==(const HomCochain& other) const {
  return m_n1 == other.m_n1 && m_n2 == other.m_n2 &&
         m_degree == other.m_degree && m_c == other.m_c;
}

Cochain HomCochain::lift(const SplitContext& ctx) const {
  if (ctx.n1 != m_n1 || ctx.n2 != m_n2) {
    throw InvalidInputError("splitting does not match hom cochain dimensions");
  }
  Cochain c(ctx.total(), m_degree);
  const int ar = arity();
  std::vector<int> u(ar), args(ar);
  for (std::size_t ti = 0; ti < m_tuples; ++ti) {
    if (!m_nz[ti]) continue;
    std::size_t rest = ti;
    for (int a = ar - 1; a >= 0; --a) {
      u[a] = static_cast<int>(rest % static_cast<std::size_t>(m_n2));
      rest /= static_cast<std::size_t>(m_n2);
    }
    for (int a = 0; a < ar; ++a) args[a] = ctx.n1 + u[a];
    for (int o = 0; o < m_n1; ++o) {
      const Rational& v = m_c[ti * m_n1 + o];
      if (!lts::is_zero(v)) c.set_value(args.data(), o, v);
    }
  }
  return c;
}

HomCochain HomCochain::from_lift(const Cochain& c, const SplitContext& ctx) {
  if (c.dim() != ctx.total()) {
    throw InvalidInputError("splitting does not match cochain dimension");
  }
  HomCochain f(ctx.n1, ctx.n2, c.degree());
  const int ar = c.arity();
  std::vector<int> t(ar), u(ar);
  for (std::size_t ti = 0; ti < c.tuple_count(); ++ti) {
    const Rational* v = c.eval_flat(ti);
    if (!v) continue;
    c.unpack_tuple(ti, t.data());
    bool pure_g2 = true;
    for (int a = 0; a < ar; ++a) pure_g2 = pure_g2 && ctx.in_second(t[a]);
    for (int o = 0; o < c.dim(); ++o) {
      if (lts::is_zero(v[o])) continue;
      if (!pure_g2 || ctx.in_second(o)) {
        throw InvalidInputError(
            "cochain is not supported like a lift of a hom cochain");
      }
      for (int a = 0; a < ar; ++a) u[a] = t[a] - ctx.n1;
      f.set_value(u.data(), o, v[o]);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Induced brackets
// ---------------------------------------------------------------------------

namespace {

using detail::SparseCochain;

/// Sparse lift of a HomCochain (argument indices shifted into the g2
/// block, values padded into the g1 block of an N-long vector).
SparseCochain sparse_lift(const HomCochain& f, const SplitContext& ctx) {
  SparseCochain s;
  s.dim = ctx.total();
  s.degree = f.degree();
  const int ar = f.arity();
  std::vector<int> u(ar), args(ar);
  std::size_t tuples = 1;
  for (int a = 0; a < ar; ++a) tuples *= static_cast<std::size_t>(f.n2());
  for (std::size_t ti = 0; ti < tuples; ++ti) {
    std::size_t rest = ti;
    for (int a = ar - 1; a >= 0; --a) {
      u[a] = static_cast<int>(rest % static_cast<std::size_t>(f.n2()));
      rest /= static_cast<std::size_t>(f.n2());
    }
    const Rational* v = f.eval(u.data());
    if (!v) continue;
    bool nz = false;
    for (int o = 0; o < f.n1() && !nz; ++o) nz = !is_zero(v[o]);
    if (!nz) continue;
    for (int a = 0; a < ar; ++a) args[a] = ctx.n1 + u[a];
    Vec& slot = s.slot(args.data());
    for (int o = 0; o < f.n1(); ++o) slot[o] = v[o];
  }
  return s;
}

/// Read a lift-supported sparse cochain back as a HomCochain; throws
/// InternalError if support leaks outside the lift shape, since every
/// call site produces brackets whose bidegree guarantees that shape.
HomCochain hom_from_sparse(const SparseCochain& s, const SplitContext& ctx) {
  HomCochain f(ctx.n1, ctx.n2, s.degree);
  const int ar = s.arity();
  std::vector<int> t(ar), u(ar);
  for (const auto& [ti, vec] : s.entries) {
    s.unpack_tuple(ti, t.data());
    bool pure_g2 = true;
    for (int a = 0; a < ar; ++a) pure_g2 = pure_g2 && ctx.in_second(t[a]);
    for (int o = 0; o < s.dim; ++o) {
      if (is_zero(vec[o])) continue;
      if (!pure_g2 || ctx.in_second(o)) {
        throw InternalError(
            "derived bracket left the induced graded space");
      }
      for (int a = 0; a < ar; ++a) u[a] = t[a] - ctx.n1;
      f.set_value(u.data(), o, vec[o]);
    }
  }
  return f;
}

}  // namespace

HomCochain l1(const TwilledStructure& tw, const HomCochain& f) {
  const SplitContext& ctx = tw.ctx();
  if (f.n1() != ctx.n1 || f.n2() != ctx.n2) {
    throw InvalidInputError("hom cochain does not match the splitting");
  }
  SparseCochain b = detail::graded_bracket_sparse(
      detail::to_sparse(tw.mu2()), sparse_lift(f, ctx));
  return hom_from_sparse(b, ctx);
}

HomCochain l2(const TwilledStructure& tw, const HomCochain& f,
              const HomCochain& g) {
  const SplitContext& ctx = tw.ctx();
  if (f.n1() != ctx.n1 || f.n2() != ctx.n2 || g.n1() != ctx.n1 ||
      g.n2() != ctx.n2) {
    throw InvalidInputError("hom cochain does not match the splitting");
  }
  SparseCochain inner = detail::graded_bracket_sparse(
      detail::to_sparse(tw.psi()), sparse_lift(f, ctx));
  SparseCochain b =
      detail::graded_bracket_sparse(inner, sparse_lift(g, ctx));
  return hom_from_sparse(b, ctx);
}

HomCochain l3(const TwilledStructure& tw, const HomCochain& f,
              const HomCochain& g, const HomCochain& h) {
  const SplitContext& ctx = tw.ctx();
  if (f.n1() != ctx.n1 || f.n2() != ctx.n2 || g.n1() != ctx.n1 ||
      g.n2() != ctx.n2 || h.n1() != ctx.n1 || h.n2() != ctx.n2) {
    throw InvalidInputError("hom cochain does not match the splitting");
  }
  SparseCochain b = detail::graded_bracket_sparse(
      detail::to_sparse(tw.mu1()), sparse_lift(f, ctx));
  b = detail::graded_bracket_sparse(b, sparse_lift(g, ctx));
  b = detail::graded_bracket_sparse(b, sparse_lift(h, ctx));
  return hom_from_sparse(b, ctx);
}

HomCochain mc_residual(const TwilledStructure& tw, const LinearMap& h) {
  const SplitContext& ctx = tw.ctx();
  if (h.rows() != ctx.n1 || h.cols() != ctx.n2) {
    throw InvalidInputError("twisting map must have shape n1 x n2");
  }
  HomCochain f = HomCochain::from_linear_map(h);
  HomCochain r = l1(tw, f);
  r = r + l2(tw, f, f).scaled(Rational(1, 2));
  r = r + l3(tw, f, f, f).scaled(Rational(1, 6));
  return r;
}

// ---------------------------------------------------------------------------
// Spanning sets and the derived differentials
// ---------------------------------------------------------------------------

std::vector<HomCochain> spanning_homcochains(int n1, int n2, int max_degree) {
  if (max_degree < 0 || max_degree > 1) {
    throw InvalidInputError("spanning sets are provided for degrees 0 and 1");
  }
  std::vector<HomCochain> out;

  // Degree 0: all delta maps e_u -> e_a.
  for (int u = 0; u < n2; ++u) {
    for (int a = 0; a < n1; ++a) {
      HomCochain f(n1, n2, 0);
      int args[1] = {u};
      f.set_value(args, a, 1);
      out.push_back(std::move(f));
    }
  }
  if (max_degree == 0) return out;

  // Degree 1: constrained projections of the delta maps
  // (e_i, e_j, e_k) -> e_a.  The projection kills i = j and identifies
  // i > j with the negative of i < j, so i < j suffices to span.
  // Constraints act on the three g2 argument slots, so the projection is
  // computed on the lift and read back.
  SplitContext ctx{n1, n2};
  for (int i = 0; i < n2; ++i) {
    for (int j = i + 1; j < n2; ++j) {
      for (int k = 0; k < n2; ++k) {
        for (int a = 0; a < n1; ++a) {
          HomCochain f(n1, n2, 1);
          int args[3] = {i, j, k};
          f.set_value(args, a, 1);
          Cochain projected = lts_project(f.lift(ctx));
          if (projected.is_zero()) continue;
          out.push_back(HomCochain::from_lift(projected, ctx));
        }
      }
    }
  }
  return out;
}

DerivedDifferentialReport derived_differential_check(
    const TwilledStructure& tw) {
  const SplitContext& ctx = tw.ctx();
  DerivedDifferentialReport rep;
  rep.d00_ok = rep.d01_ok = rep.d02_11_ok = rep.d12_ok = rep.d22_ok = true;

  const SparseCochain d0 = detail::to_sparse(tw.mu2());
  const SparseCochain d1 = detail::to_sparse(tw.psi());
  const SparseCochain d2 = detail::to_sparse(tw.mu1());
  const SparseCochain* d[3] = {&d0, &d1, &d2};

  std::vector<HomCochain> spanning =
      spanning_homcochains(ctx.n1, ctx.n2, 1);

  auto note_failure = [&](bool& flag, const std::string& what,
                          std::size_t element, const SparseCochain& residual) {
    if (!flag) return;  // keep the first failure per condition
    flag = false;
    if (rep.failure.empty()) {
      std::string tuple_text;
      if (auto t = residual.first_nonzero_tuple()) {
        for (int a : *t) tuple_text += " " + std::to_string(a);
      }
      rep.failure = what + " fails on spanning element " +
                    std::to_string(element) + " at tuple(" + tuple_text + " )";
    }
  };

  for (std::size_t e = 0; e < spanning.size(); ++e) {
    const SparseCochain fhat = sparse_lift(spanning[e], ctx);

    SparseCochain first[3] = {
        detail::graded_bracket_sparse(*d[0], fhat),
        detail::graded_bracket_sparse(*d[1], fhat),
        detail::graded_bracket_sparse(*d[2], fhat),
    };
    auto composite = [&](int i, int j) {
      return detail::graded_bracket_sparse(*d[i], first[j]);
    };

    // d0 d0 = 0.
    SparseCochain c00 = composite(0, 0);
    if (!c00.is_zero()) note_failure(rep.d00_ok, "d0 d0", e, c00);

    // d0 d1 + d1 d0 = 0.
    SparseCochain c01 = composite(0, 1);
    c01.add_scaled(composite(1, 0), 1);
    if (!c01.is_zero()) note_failure(rep.d01_ok, "d0 d1 + d1 d0", e, c01);

    // d0 d2 + d1 d1 + d2 d0 = 0.
    SparseCochain c02 = composite(0, 2);
    c02.add_scaled(composite(1, 1), 1);
    c02.add_scaled(composite(2, 0), 1);
    if (!c02.is_zero()) {
      note_failure(rep.d02_11_ok, "d0 d2 + d1 d1 + d2 d0", e, c02);
    }

    // d1 d2 + d2 d1 = 0.
    SparseCochain c12 = composite(1, 2);
    c12.add_scaled(composite(2, 1), 1);
    if (!c12.is_zero()) note_failure(rep.d12_ok, "d1 d2 + d2 d1", e, c12);

    // d2 d2 = 0.
    SparseCochain c22 = composite(2, 2);
    if (!c22.is_zero()) note_failure(rep.d22_ok, "d2 d2", e, c22);
  }

  return rep;
}

}  // namespace lts
