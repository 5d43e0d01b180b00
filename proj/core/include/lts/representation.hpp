#ifndef LTS_REPRESENTATION_HPP
#define LTS_REPRESENTATION_HPP

#include <lts/linear_map.hpp>
#include <lts/triple_system.hpp>

#include <optional>

/// \file representation.hpp
/// Representations of triple-bracket algebras: the defining operator
/// identities, the adjoint representation, and the semidirect-product
/// triple system on g + V.

namespace lts {

/// A candidate representation of an n-dimensional triple system on an
/// m-dimensional carrier space V: a bilinear map rho from g x g to
/// endomorphisms of V, stored as one m x m matrix per basis pair (i, j).
///
/// The derived operator D(x,y) := rho(y,x) - rho(x,y) is always computed
/// from rho on demand and never stored, so the two can never drift apart.
class Representation {
 public:
  /// Zero maps everywhere.
  Representation(int base_dim, int carrier_dim);

  int base_dim() const { return m_base; }
  int carrier_dim() const { return m_carrier; }

  /// rho(e_i, e_j) as an m x m matrix.
  const LinearMap& rho(int i, int j) const {
    return m_rho[static_cast<std::size_t>(i) * m_base + j];
  }
  LinearMap& rho(int i, int j) {
    return m_rho[static_cast<std::size_t>(i) * m_base + j];
  }

  /// Bilinear extension of rho to coordinate vectors on g.
  LinearMap rho_vec(const Vec& x, const Vec& y) const;

  /// Derived operator D(e_i, e_j) = rho(e_j, e_i) - rho(e_i, e_j).
  LinearMap derived(int i, int j) const;

  bool operator==(const Representation& other) const;

 private:
  int m_base;
  int m_carrier;
  std::vector<LinearMap> m_rho;
};

/// Result of checking the two defining operator identities of a
/// representation on all basis 4-tuples (x, y, z, w) of g:
///
///  (1)  rho(z,w) rho(x,y) - rho(y,w) rho(x,z) - rho(x, [y,z,w])
///         + D(y,z) rho(x,w)  =  0
///  (2)  rho([x,y,z], w) + rho(z, [x,y,w])  =  D(x,y) rho(z,w)
///         - rho(z,w) D(x,y)
///
/// where rho(x, [y,z,w]) abbreviates the bilinear extension in the second
/// slot.  Counterexamples name the lexicographically first failing tuple
/// and carry the defect matrix flattened row-major into a vector.
struct RepresentationReport {
  bool identity1_ok = false;
  bool identity2_ok = false;
  std::optional<AxiomCounterexample> identity1_fail;
  std::optional<AxiomCounterexample> identity2_fail;
  bool pass() const { return identity1_ok && identity2_ok; }
};

/// Exhaustive check of the two identities above; t.dim() must equal
/// r.base_dim().
RepresentationReport check_representation(const TripleSystem& t,
                                          const Representation& r);

/// The adjoint (regular) representation of t on itself:
/// R(x,y) z := [z,x,y], i.e. column k of R(e_i,e_j) is [e_k,e_i,e_j].
/// Its derived operator is D(x,y) z = [x,y,z] whenever t satisfies the
/// first two defining identities.
Representation adjoint_representation(const TripleSystem& t);

/// Semidirect-product triple system on g + V (g coordinates first):
///
///   [x+u, y+v, z+w]  =  [x,y,z] + D(x,y) w + rho(y,z) u - rho(x,z) v,
///
/// with the g-component equal to [x,y,z] and the V-component given by the
/// three operator terms.  The result is a Lie triple system if and only if
/// (V; rho) is a representation; this function builds the table without
/// checking either side, so the equivalence itself is testable.
TripleSystem semidirect_product(const TripleSystem& t,
                                const Representation& r);

}  // namespace lts

#endif  // LTS_REPRESENTATION_HPP
