#ifndef LTS_TRIPLE_SYSTEM_HPP
#define LTS_TRIPLE_SYSTEM_HPP

#include <lts/linear_map.hpp>
#include <lts/rational.hpp>

#include <optional>
#include <vector>

/// \file triple_system.hpp
/// Trilinear bracket algebras given by exact structure constants, the
/// checker for their defining identities, and two canonical constructions:
/// the triple bracket [[x,y],z] of a Lie algebra, and the binary bracket it
/// induces on the space of 2-tensors.

namespace lts {

/// A finite-dimensional algebra with one trilinear operation
/// (x, y, z) -> [x,y,z], stored densely by structure constants:
/// [e_i, e_j, e_k] = sum_o c(i,j,k,o) e_o.
///
/// The container itself imposes no identities; lts_axioms_check decides
/// whether a table is a Lie triple system.  All slots are 0-based.
class TripleSystem {
 public:
  /// Zero bracket on an n-dimensional space (n >= 1).
  explicit TripleSystem(int dim);

  int dim() const { return m_dim; }

  /// Structure constant: coefficient of e_out in [e_i, e_j, e_k].
  const Rational& constant(int i, int j, int k, int out) const {
    return m_c[block(i, j, k) + static_cast<std::size_t>(out)];
  }

  /// Overwrite [e_i, e_j, e_k] with the given coordinate vector
  /// (value.size() must equal dim()).  No symmetry completion is applied:
  /// every basis triple means exactly what was stored for it.
  void set_bracket(int i, int j, int k, const Vec& value);

  /// Pointer to the dim()-long coefficient block of [e_i, e_j, e_k].
  const Rational* bracket_basis(int i, int j, int k) const {
    return m_c.data() + block(i, j, k);
  }

  /// Trilinear extension to arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

  bool operator==(const TripleSystem& other) const;
  bool operator!=(const TripleSystem& other) const { return !(*this == other); }

 private:
  std::size_t block(int i, int j, int k) const {
    return ((static_cast<std::size_t>(i) * m_dim + j) * m_dim + k) * m_dim;
  }

  int m_dim;
  std::vector<Rational> m_c;
};

/// First failing basis tuple of one defining identity, in lexicographic
/// scan order, together with the nonzero defect vector.
struct AxiomCounterexample {
  std::vector<int> tuple;  ///< basis indices, one per identity variable
  Vec defect;              ///< value that should have been 0
};

/// Result of checking the three defining identities of a Lie triple
/// system on every basis tuple.
struct AxiomReport {
  /// [x,x,y] = 0; checked on basis vectors as
  /// [e_i,e_j,e_k] + [e_j,e_i,e_k] = 0 for all i <= j, k, which is
  /// equivalent by bilinearity in the first two slots.
  bool alternating_ok = false;
  /// [x,y,z] + [y,z,x] + [z,x,y] = 0 for all basis triples.
  bool cyclic_ok = false;
  /// [u,v,[x,y,z]] = [[u,v,x],y,z] + [x,[u,v,y],z] + [x,y,[u,v,z]]
  /// for all basis 5-tuples.
  bool fundamental_ok = false;

  std::optional<AxiomCounterexample> alternating_fail;
  std::optional<AxiomCounterexample> cyclic_fail;
  std::optional<AxiomCounterexample> fundamental_fail;

  bool pass() const { return alternating_ok && cyclic_ok && fundamental_ok; }
};

/// Check all three defining identities exhaustively on basis tuples
/// (n^3 + n^3 + n^5 evaluations).  Reports the lexicographically first
/// counterexample per failed identity; never stops at the first failure
/// of the whole report.
AxiomReport lts_axioms_check(const TripleSystem& t);

/// A finite-dimensional binary-bracket algebra by structure constants,
/// [e_i, e_j] = sum_o c(i,j,o) e_o.  Input type for from_lie_algebra.
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim);

  int dim() const { return m_dim; }
  void set_bracket(int i, int j, const Vec& value);
  const Rational* bracket_basis(int i, int j) const {
    return m_c.data() + block(i, j);
  }
  Vec bracket(const Vec& x, const Vec& y) const;

 private:
  std::size_t block(int i, int j) const {
    return (static_cast<std::size_t>(i) * m_dim + j) * m_dim;
  }

  int m_dim;
  std::vector<Rational> m_c;
};

/// The triple bracket [x,y,z] := [[x,y],z] of a Lie algebra.
///
/// Validates antisymmetry and the Jacobi identity of the input first and
/// throws InvalidStructureError (naming the first failing basis tuple) if
/// either fails, since only then is the result a Lie triple system.
TripleSystem from_lie_algebra(const LieAlgebra& g);

/// The binary bracket induced on 2-tensors by a triple bracket:
/// on the n^2-dimensional space with basis e_i (x) e_j (index i*n + j),
///
///   [x1 (x) x2, y1 (x) y2]  =  [x1,x2,y1] (x) y2  +  y1 (x) [x1,x2,y2].
///
/// The returned report carries the bracket as a LieAlgebra on n^2
/// coordinates plus the outcome of an exhaustive (left) Leibniz check
///   [X,[Y,Z]] = [[X,Y],Z] + [Y,[X,Z]]
/// over all basis triples of 2-tensors.  The Leibniz identity is a
/// theorem when t is a Lie triple system; the check is still performed
/// unconditionally so corrupted inputs are detected.
struct LeibnizReport {
  LieAlgebra bracket;  ///< the induced binary bracket on n^2 coordinates
  bool leibniz_ok = false;
  std::optional<AxiomCounterexample> leibniz_fail;  ///< 3 tensor indices
};
LeibnizReport fundamental_leibniz_bracket(const TripleSystem& t);

}  // namespace lts

#endif  // LTS_TRIPLE_SYSTEM_HPP
