#ifndef LTS_LINFTY_HPP
#define LTS_LINFTY_HPP

#include <lts/cochain.hpp>
#include <lts/linear_map.hpp>
#include <lts/twisting.hpp>

#include <optional>
#include <string>
#include <vector>

/// \file linfty.hpp
/// The homotopy Lie structure a twilled structure induces on maps from
/// tensor powers of the second block into the first: graded pieces,
/// brackets l1, l2, l3, the Maurer-Cartan residual of a linear map, and
/// the pairwise anticommutation checks of the three derived differentials.

namespace lts {

/// An element of the induced graded space: a multilinear map taking
/// 2p+1 arguments from g2 (dimension n2) with values in g1 (dimension
/// n1), stored densely (n2^(2p+1) tuples, n1 scalars each).  Degree-0
/// elements are exactly linear maps g2 -> g1, i.e. twisting candidates.
class HomCochain {
 public:
  HomCochain() = default;

  /// Zero element of the given degree p >= 0.
  HomCochain(int n1, int n2, int degree);

  /// Degree-0 element from an n1 x n2 matrix.
  static HomCochain from_linear_map(const LinearMap& h);

  int n1() const { return m_n1; }
  int n2() const { return m_n2; }
  int degree() const { return m_degree; }
  int arity() const { return 2 * m_degree + 1; }
  std::size_t tuple_count() const { return m_tuples; }

  /// Value block (n1 scalars) at a basis tuple of g2 indices
  /// (each in 0..n2-1), or nullptr if flagged zero.
  const Rational* eval(const int* args) const;

  /// Single coefficient (never null).
  const Rational& coeff(const int* args, int out) const {
    return m_c[tuple_index(args) * m_n1 + out];
  }

  void set_value(const int* args, int out, const Rational& v);
  void refresh_zero_flags();
  bool is_zero() const;

  HomCochain operator+(const HomCochain& other) const;
  HomCochain operator-(const HomCochain& other) const;
  HomCochain scaled(const Rational& s) const;
  bool operator==(const HomCochain& other) const;
  bool operator!=(const HomCochain& other) const { return !(*this == other); }

  /// The lift to a dense degree-p cochain on N = n1 + n2 coordinates:
  /// arguments project to their g2 part, values embed into the g1 block.
  /// The lift has bidegree -1 | 2p+1.
  Cochain lift(const SplitContext& ctx) const;

  /// Recover a HomCochain from a full cochain supported like a lift
  /// (throws InvalidInputError if c has values outside the g1 block on
  /// pure-g2 tuples, or any support on tuples with a g1 argument).
  static HomCochain from_lift(const Cochain& c, const SplitContext& ctx);

  std::size_t tuple_index(const int* args) const;

 private:
  int m_n1 = 0;
  int m_n2 = 0;
  int m_degree = 0;
  std::size_t m_tuples = 0;
  std::vector<Rational> m_c;
  std::vector<std::uint8_t> m_nz;
};

/// The unary bracket l1(f) = [mu2hat, fhat] of the structure induced by a
/// twilled structure, pulled back to a HomCochain of degree f.degree()+1.
HomCochain l1(const TwilledStructure& tw, const HomCochain& f);

/// The binary bracket l2(f,g) = [[psihat, fhat], ghat], degree
/// f.degree() + g.degree() + 1.
HomCochain l2(const TwilledStructure& tw, const HomCochain& f,
              const HomCochain& g);

/// The ternary bracket l3(f,g,h) = [[[mu1hat, fhat], ghat], hhat], degree
/// f.degree() + g.degree() + h.degree() + 2.
HomCochain l3(const TwilledStructure& tw, const HomCochain& f,
              const HomCochain& g, const HomCochain& h);

/// Maurer-Cartan residual of a linear map H: g2 -> g1 against the
/// structure induced by tw:
///
///   mc(H) = l1(H) + l2(H,H)/2 + l3(H,H,H)/6,
///
/// a degree-1 HomCochain.  It vanishes exactly when twisting tw by H
/// again yields a twilled structure; concretely it equals the phi2
/// component of the twist of tw by H.
HomCochain mc_residual(const TwilledStructure& tw, const LinearMap& h);

/// Outcome of checking that the three derived differentials
/// d0 = [mu2hat, .], d1 = [psihat, .], d2 = [mu1hat, .] square to zero in
/// the graded sense on a spanning set of low-degree HomCochains:
///
///   d0 d0 = 0,   d0 d1 + d1 d0 = 0,   d0 d2 + d1 d1 + d2 d0 = 0,
///   d1 d2 + d2 d1 = 0,   d2 d2 = 0.
///
/// Each condition is checked on every spanning element; a failure records
/// the condition, the index of the offending element, and the first
/// nonzero tuple of the residual.
struct DerivedDifferentialReport {
  bool d00_ok = false;
  bool d01_ok = false;
  bool d02_11_ok = false;
  bool d12_ok = false;
  bool d22_ok = false;
  std::string failure;  ///< empty when pass()
  bool pass() const { return d00_ok && d01_ok && d02_11_ok && d12_ok && d22_ok; }
};

/// Spanning set of HomCochains of degree <= max_degree: all basis delta
/// maps in degree 0 and, for max_degree >= 1, the projections of the
/// degree-1 delta maps onto the constrained subspace (zero projections
/// are dropped).  Every HomCochain of degree <= max_degree whose lift
/// lies in the constrained subspace is a linear combination of these.
std::vector<HomCochain> spanning_homcochains(int n1, int n2, int max_degree);

/// Check the five anticommutation conditions above on the spanning set of
/// degree <= 1.  The composites are computed in sparse scatter mode (see
/// detail/sparse.hpp), so cost scales with the support of the structure
/// components rather than with dim^arity, and every condition is verified
/// on the full doubled space, not a restriction of it.
DerivedDifferentialReport derived_differential_check(const TwilledStructure& tw);

}  // namespace lts

#endif  // LTS_LINFTY_HPP
