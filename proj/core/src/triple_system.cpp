#include <lts/triple_system.hpp>

namespace lts {

namespace {

/// acc += s * block, where block is a dim-long coefficient vector.
void axpy(Vec& acc, const Rational& s, const Rational* block, int dim) {
  if (is_zero(s)) return;
  for (int o = 0; o < dim; ++o) acc[o] += s * block[o];
}

}  // namespace

TripleSystem::TripleSystem(int dim) : m_dim(dim) {
  if (dim < 1) throw InvalidInputError("triple system dimension must be >= 1");
  m_c.resize(static_cast<std::size_t>(dim) * dim * dim * dim);
}

void TripleSystem::set_bracket(int i, int j, int k, const Vec& value) {
  if (i < 0 || j < 0 || k < 0 || i >= m_dim || j >= m_dim || k >= m_dim) {
    throw InvalidInputError("bracket index out of range");
  }
  if (static_cast<int>(value.size()) != m_dim) {
    throw InvalidInputError("bracket value has wrong dimension");
  }
  std::size_t base = block(i, j, k);
  for (int o = 0; o < m_dim; ++o) m_c[base + o] = value[o];
}

Vec TripleSystem::bracket(const Vec& x, const Vec& y, const Vec& z) const {
  if (static_cast<int>(x.size()) != m_dim ||
      static_cast<int>(y.size()) != m_dim ||
      static_cast<int>(z.size()) != m_dim) {
    throw InvalidInputError("bracket argument has wrong dimension");
  }
  Vec acc = zero_vec(m_dim);
  for (int i = 0; i < m_dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < m_dim; ++j) {
      if (is_zero(y[j])) continue;
      Rational xy = x[i] * y[j];
      for (int k = 0; k < m_dim; ++k) {
        if (is_zero(z[k])) continue;
        axpy(acc, xy * z[k], bracket_basis(i, j, k), m_dim);
      }
    }
  }
  return acc;
}

bool TripleSystem::operator==(const TripleSystem& other) const {
  return m_dim == other.m_dim && m_c == other.m_c;
}

AxiomReport lts_axioms_check(const TripleSystem& t) {
  const int n = t.dim();
  AxiomReport rep;
  rep.alternating_ok = true;
  rep.cyclic_ok = true;
  rep.fundamental_ok = true;

  // [x,x,y] = 0 is equivalent, by bilinearity, to the symmetric part of
  // the first two slots vanishing on basis vectors:
  // [e_i,e_j,e_k] + [e_j,e_i,e_k] = 0 (i = j covers the diagonal).
  for (int i = 0; i < n && rep.alternating_ok; ++i) {
    for (int j = i; j < n && rep.alternating_ok; ++j) {
      for (int k = 0; k < n && rep.alternating_ok; ++k) {
        Vec defect = zero_vec(n);
        const Rational* a = t.bracket_basis(i, j, k);
        const Rational* b = t.bracket_basis(j, i, k);
        bool nonzero = false;
        for (int o = 0; o < n; ++o) {
          defect[o] = a[o] + b[o];
          nonzero = nonzero || !is_zero(defect[o]);
        }
        if (nonzero) {
          rep.alternating_ok = false;
          rep.alternating_fail = AxiomCounterexample{{i, j, k}, defect};
        }
      }
    }
  }

  // [x,y,z] + [y,z,x] + [z,x,y] = 0 on all basis triples.
  for (int i = 0; i < n && rep.cyclic_ok; ++i) {
    for (int j = 0; j < n && rep.cyclic_ok; ++j) {
      for (int k = 0; k < n && rep.cyclic_ok; ++k) {
        Vec defect = zero_vec(n);
        const Rational* a = t.bracket_basis(i, j, k);
        const Rational* b = t.bracket_basis(j, k, i);
        const Rational* c = t.bracket_basis(k, i, j);
        bool nonzero = false;
        for (int o = 0; o < n; ++o) {
          defect[o] = a[o] + b[o] + c[o];
          nonzero = nonzero || !is_zero(defect[o]);
        }
        if (nonzero) {
          rep.cyclic_ok = false;
          rep.cyclic_fail = AxiomCounterexample{{i, j, k}, defect};
        }
      }
    }
  }

  // [u,v,[x,y,z]] = [[u,v,x],y,z] + [x,[u,v,y],z] + [x,y,[u,v,z]]
  // on all basis 5-tuples (u,v,x,y,z).
  for (int u = 0; u < n && rep.fundamental_ok; ++u) {
    for (int v = 0; v < n && rep.fundamental_ok; ++v) {
      for (int x = 0; x < n && rep.fundamental_ok; ++x) {
        for (int y = 0; y < n && rep.fundamental_ok; ++y) {
          for (int z = 0; z < n && rep.fundamental_ok; ++z) {
            Vec defect = zero_vec(n);
            // Left side: [e_u, e_v, [e_x, e_y, e_z]].
            const Rational* inner = t.bracket_basis(x, y, z);
            for (int m = 0; m < n; ++m) {
              axpy(defect, inner[m], t.bracket_basis(u, v, m), n);
            }
            // Right side, subtracted term by term.
            const Rational* a = t.bracket_basis(u, v, x);
            for (int m = 0; m < n; ++m) {
              axpy(defect, -a[m], t.bracket_basis(m, y, z), n);
            }
            const Rational* b = t.bracket_basis(u, v, y);
            for (int m = 0; m < n; ++m) {
              axpy(defect, -b[m], t.bracket_basis(x, m, z), n);
            }
            const Rational* c = t.bracket_basis(u, v, z);
            for (int m = 0; m < n; ++m) {
              axpy(defect, -c[m], t.bracket_basis(x, y, m), n);
            }
            if (!is_zero_vec(defect)) {
              rep.fundamental_ok = false;
              rep.fundamental_fail =
                  AxiomCounterexample{{u, v, x, y, z}, defect};
            }
          }
        }
      }
    }
  }

  return rep;
}

LieAlgebra::LieAlgebra(int dim) : m_dim(dim) {
  if (dim < 1) throw InvalidInputError("Lie algebra dimension must be >= 1");
  m_c.resize(static_cast<std::size_t>(dim) * dim * dim);
}

void LieAlgebra::set_bracket(int i, int j, const Vec& value) {
  if (i < 0 || j < 0 || i >= m_dim || j >= m_dim) {
    throw InvalidInputError("bracket index out of range");
  }
  if (static_cast<int>(value.size()) != m_dim) {
    throw InvalidInputError("bracket value has wrong dimension");
  }
  std::size_t base = block(i, j);
  for (int o = 0; o < m_dim; ++o) m_c[base + o] = value[o];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec acc = zero_vec(m_dim);
  for (int i = 0; i < m_dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < m_dim; ++j) {
      if (is_zero(y[j])) continue;
      axpy(acc, x[i] * y[j], bracket_basis(i, j), m_dim);
    }
  }
  return acc;
}

TripleSystem from_lie_algebra(const LieAlgebra& g) {
  const int n = g.dim();

  // Antisymmetry: [e_i, e_j] + [e_j, e_i] = 0 for i <= j.
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Rational* a = g.bracket_basis(i, j);
      const Rational* b = g.bracket_basis(j, i);
      for (int o = 0; o < n; ++o) {
        if (!is_zero(a[o] + b[o])) {
          throw InvalidStructureError(
              "not a Lie algebra: bracket is not antisymmetric at basis pair "
              "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
      }
    }
  }

  // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec defect = zero_vec(n);
        const Rational* ij = g.bracket_basis(i, j);
        const Rational* jk = g.bracket_basis(j, k);
        const Rational* ki = g.bracket_basis(k, i);
        for (int m = 0; m < n; ++m) {
          axpy(defect, ij[m], g.bracket_basis(m, k), n);
          axpy(defect, jk[m], g.bracket_basis(m, i), n);
          axpy(defect, ki[m], g.bracket_basis(m, j), n);
        }
        if (!is_zero_vec(defect)) {
          throw InvalidStructureError(
              "not a Lie algebra: Jacobi identity fails at basis triple (" +
              std::to_string(i) + ", " + std::to_string(j) + ", " +
              std::to_string(k) + ")");
        }
      }
    }
  }

  // [x,y,z] := [[x,y],z].
  TripleSystem t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational* ij = g.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        Vec value = zero_vec(n);
        for (int m = 0; m < n; ++m) {
          axpy(value, ij[m], g.bracket_basis(m, k), n);
        }
        t.set_bracket(i, j, k, value);
      }
    }
  }
  return t;
}

LeibnizReport fundamental_leibniz_bracket(const TripleSystem& t) {
  const int n = t.dim();
  const int nn = n * n;
  LeibnizReport rep{LieAlgebra(nn), true, std::nullopt};

  // [e_a (x) e_b, e_c (x) e_d] = [e_a,e_b,e_c] (x) e_d
  //                            + e_c (x) [e_a,e_b,e_d].
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          Vec value = zero_vec(nn);
          const Rational* abc = t.bracket_basis(a, b, c);
          for (int m = 0; m < n; ++m) value[m * n + d] += abc[m];
          const Rational* abd = t.bracket_basis(a, b, d);
          for (int m = 0; m < n; ++m) value[c * n + m] += abd[m];
          rep.bracket.set_bracket(a * n + b, c * n + d, value);
        }
      }
    }
  }

  // Left Leibniz identity [X,[Y,Z]] = [[X,Y],Z] + [Y,[X,Z]] over all
  // basis 2-tensors X, Y, Z.
  const LieAlgebra& br = rep.bracket;
  for (int X = 0; X < nn && rep.leibniz_ok; ++X) {
    for (int Y = 0; Y < nn && rep.leibniz_ok; ++Y) {
      for (int Z = 0; Z < nn && rep.leibniz_ok; ++Z) {
        Vec defect = zero_vec(nn);
        const Rational* yz = br.bracket_basis(Y, Z);
        for (int m = 0; m < nn; ++m) axpy(defect, yz[m], br.bracket_basis(X, m), nn);
        const Rational* xy = br.bracket_basis(X, Y);
        for (int m = 0; m < nn; ++m) axpy(defect, -xy[m], br.bracket_basis(m, Z), nn);
        const Rational* xz = br.bracket_basis(X, Z);
        for (int m = 0; m < nn; ++m) axpy(defect, -xz[m], br.bracket_basis(Y, m), nn);
        if (!is_zero_vec(defect)) {
          rep.leibniz_ok = false;
          rep.leibniz_fail = AxiomCounterexample{{X, Y, Z}, defect};
        }
      }
    }
  }

  return rep;
}

}  // namespace lts
