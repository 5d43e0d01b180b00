#include <lts/representation.hpp>

namespace lts {

Representation::Representation(int base_dim, int carrier_dim)
    : m_base(base_dim), m_carrier(carrier_dim) {
  if (base_dim < 1 || carrier_dim < 1) {
    throw InvalidInputError("representation dimensions must be >= 1");
  }
  m_rho.assign(static_cast<std::size_t>(base_dim) * base_dim,
               LinearMap(carrier_dim, carrier_dim));
}

LinearMap Representation::rho_vec(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != m_base ||
      static_cast<int>(y.size()) != m_base) {
    throw InvalidInputError("rho argument has wrong dimension");
  }
  LinearMap acc(m_carrier, m_carrier);
  for (int i = 0; i < m_base; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < m_base; ++j) {
      if (is_zero(y[j])) continue;
      acc = acc + rho(i, j).scaled(x[i] * y[j]);
    }
  }
  return acc;
}

LinearMap Representation::derived(int i, int j) const {
  return rho(j, i) - rho(i, j);
}

bool Representation::operator==(const Representation& other) const {
  return m_base == other.m_base && m_carrier == other.m_carrier &&
         m_rho == other.m_rho;
}

namespace {

/// Flatten a matrix row-major into a vector (for counterexample defects).
Vec flatten(const LinearMap& m) {
  Vec v = zero_vec(m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  }
  return v;
}

/// rho(e_x, [e_y, e_z, e_w]) extended bilinearly in the second slot.
LinearMap rho_second_bracket(const TripleSystem& t, const Representation& r,
                             int x, int y, int z, int w) {
  LinearMap acc(r.carrier_dim(), r.carrier_dim());
  const Rational* b = t.bracket_basis(y, z, w);
  for (int m = 0; m < t.dim(); ++m) {
    if (is_zero(b[m])) continue;
    acc = acc + r.rho(x, m).scaled(b[m]);
  }
  return acc;
}

/// rho([e_x, e_y, e_z], e_w) extended bilinearly in the first slot.
LinearMap rho_first_bracket(const TripleSystem& t, const Representation& r,
                            int x, int y, int z, int w) {
  LinearMap acc(r.carrier_dim(), r.carrier_dim());
  const Rational* b = t.bracket_basis(x, y, z);
  for (int m = 0; m < t.dim(); ++m) {
    if (is_zero(b[m])) continue;
    acc = acc + r.rho(m, w).scaled(b[m]);
  }
  return acc;
}

}  // namespace

RepresentationReport check_representation(const TripleSystem& t,
                                          const Representation& r) {
  if (t.dim() != r.base_dim()) {
    throw InvalidInputError(
        "representation base dimension does not match the triple system");
  }
  const int n = t.dim();
  RepresentationReport rep;
  rep.identity1_ok = true;
  rep.identity2_ok = true;

  // (1) rho(z,w) rho(x,y) - rho(y,w) rho(x,z) - rho(x,[y,z,w])
  //       + D(y,z) rho(x,w) = 0.
  for (int x = 0; x < n && rep.identity1_ok; ++x) {
    for (int y = 0; y < n && rep.identity1_ok; ++y) {
      for (int z = 0; z < n && rep.identity1_ok; ++z) {
        for (int w = 0; w < n && rep.identity1_ok; ++w) {
          LinearMap defect = r.rho(z, w).compose(r.rho(x, y)) -
                             r.rho(y, w).compose(r.rho(x, z)) -
                             rho_second_bracket(t, r, x, y, z, w) +
                             r.derived(y, z).compose(r.rho(x, w));
          if (!defect.is_zero()) {
            rep.identity1_ok = false;
            rep.identity1_fail =
                AxiomCounterexample{{x, y, z, w}, flatten(defect)};
          }
        }
      }
    }
  }

  // (2) rho([x,y,z], w) + rho(z, [x,y,w]) = [D(x,y), rho(z,w)].
  for (int x = 0; x < n && rep.identity2_ok; ++x) {
    for (int y = 0; y < n && rep.identity2_ok; ++y) {
      for (int z = 0; z < n && rep.identity2_ok; ++z) {
        for (int w = 0; w < n && rep.identity2_ok; ++w) {
          LinearMap defect = rho_first_bracket(t, r, x, y, z, w) +
                             rho_second_bracket(t, r, z, x, y, w) -
                             commutator(r.derived(x, y), r.rho(z, w));
          if (!defect.is_zero()) {
            rep.identity2_ok = false;
            rep.identity2_fail =
                AxiomCounterexample{{x, y, z, w}, flatten(defect)};
          }
        }
      }
    }
  }

  return rep;
}

Representation adjoint_representation(const TripleSystem& t) {
  const int n = t.dim();
  Representation r(n, n);
  // R(e_i, e_j) e_k = [e_k, e_i, e_j]: column k of R(e_i, e_j).
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LinearMap& m = r.rho(i, j);
      for (int k = 0; k < n; ++k) {
        const Rational* b = t.bracket_basis(k, i, j);
        for (int o = 0; o < n; ++o) m.at(o, k) = b[o];
      }
    }
  }
  return r;
}

TripleSystem semidirect_product(const TripleSystem& t,
                                const Representation& r) {
  if (t.dim() != r.base_dim()) {
    throw InvalidInputError(
        "representation base dimension does not match the triple system");
  }
  const int n = t.dim();
  const int m = r.carrier_dim();
  const int N = n + m;
  TripleSystem s(N);

  // Basis: e_0..e_{n-1} span g (bare indices below), e_n..e_{N-1} span V
  // (offset indices).  [x+u, y+v, z+w] = [x,y,z] + D(x,y)w + rho(y,z)u
  // - rho(x,z)v; on basis vectors each argument is purely in g or V, so
  // exactly one term survives per tuple shape.
  Vec value = zero_vec(N);
  auto clear = [&]() { for (Rational& q : value) q = 0; };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (g, g, g): the bracket of t.
      for (int k = 0; k < n; ++k) {
        clear();
        const Rational* b = t.bracket_basis(i, j, k);
        for (int o = 0; o < n; ++o) value[o] = b[o];
        s.set_bracket(i, j, k, value);
      }
      // (g, g, V): D(e_i, e_j) w.
      LinearMap d = r.derived(i, j);
      for (int w = 0; w < m; ++w) {
        clear();
        for (int o = 0; o < m; ++o) value[n + o] = d.at(o, w);
        s.set_bracket(i, j, n + w, value);
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const LinearMap& rjk = r.rho(j, k);
      // (V, g, g): rho(y, z) u.
      for (int u = 0; u < m; ++u) {
        clear();
        for (int o = 0; o < m; ++o) value[n + o] = rjk.at(o, u);
        s.set_bracket(n + u, j, k, value);
      }
      // (g, V, g): -rho(x, z) v, with x = e_j, z = e_k.
      for (int v = 0; v < m; ++v) {
        clear();
        for (int o = 0; o < m; ++o) value[n + o] = -rjk.at(o, v);
        s.set_bracket(j, n + v, k, value);
      }
    }
  }
  // All other shapes (two or three V arguments) are zero.
  return s;
}

}  // namespace lts
