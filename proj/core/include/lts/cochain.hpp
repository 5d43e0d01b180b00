#ifndef LTS_COCHAIN_HPP
#define LTS_COCHAIN_HPP

#include <lts/rational.hpp>
#include <lts/triple_system.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

/// \file cochain.hpp
/// The graded algebra controlling deformations of triple brackets:
/// multilinear maps of odd arity, their circle product and graded bracket,
/// the alternating/cyclic constraint subspace, lifts of maps along a
/// two-block splitting, and bidegree bookkeeping.

namespace lts {

/// Splitting of an N-dimensional space into two blocks: coordinates
/// 0 .. n1-1 form the first block (g1), coordinates n1 .. n1+n2-1 the
/// second (g2).
struct SplitContext {
  int n1 = 0;
  int n2 = 0;

  int total() const { return n1 + n2; }
  /// True iff basis index idx lies in the second block.
  bool in_second(int idx) const { return idx >= n1; }
};

/// A multilinear map of degree p: it takes 2p+1 arguments from an
/// N-dimensional space and returns a vector in the same space, stored
/// densely by basis tuples.  Degree 0 maps are linear maps, degree 1 maps
/// are candidate triple brackets, and so on.
///
/// Storage is row-major over the argument tuple, N scalars per tuple.
/// A per-tuple zero flag lets the product routines skip the (typically
/// vast) zero part of the table without scanning scalars; eval() returns
/// nullptr for tuples flagged zero.  Mutation through set_value keeps the
/// flag conservative (it may mark a tuple nonzero whose entries were all
/// set back to 0); refresh_zero_flags() re-tightens after bulk writes.
class Cochain {
 public:
  /// Empty placeholder (dim 0); unusable until assigned.
  Cochain() = default;

  /// Zero map of the given degree p >= 0 on an N-dimensional space.
  Cochain(int dim, int degree);

  int dim() const { return m_dim; }
  int degree() const { return m_degree; }
  /// Number of arguments, 2*degree() + 1.
  int arity() const { return 2 * m_degree + 1; }

  /// Number of basis argument tuples, dim()^arity().
  std::size_t tuple_count() const { return m_tuples; }

  /// Flat index of a basis argument tuple (row-major, args[0] slowest).
  std::size_t tuple_index(const int* args) const;

  /// Inverse of tuple_index: writes arity() indices into args.
  void unpack_tuple(std::size_t ti, int* args) const;

  /// Value block (dim() scalars) at a basis tuple; nullptr if the tuple
  /// is flagged zero.
  const Rational* eval(const int* args) const {
    std::size_t ti = tuple_index(args);
    return m_nz[ti] ? m_c.data() + ti * m_dim : nullptr;
  }

  /// Value block by flat tuple index; nullptr if flagged zero.
  const Rational* eval_flat(std::size_t ti) const {
    return m_nz[ti] ? m_c.data() + ti * m_dim : nullptr;
  }

  /// Single coefficient (never null; reads through the zero flag).
  const Rational& coeff(const int* args, int out) const {
    return m_c[tuple_index(args) * m_dim + out];
  }

  /// Set one coefficient; marks the tuple (conservatively) nonzero.
  void set_value(const int* args, int out, const Rational& v);

  /// Overwrite the whole value block at a basis tuple.
  void set_values(const int* args, const Vec& v);

  /// Recompute every zero flag exactly from the stored scalars.
  void refresh_zero_flags();

  /// True iff the map is identically 0 (by flags, which are exact after
  /// refresh_zero_flags and conservative otherwise the scalars are
  /// scanned where flags claim nonzero).
  bool is_zero() const;

  /// First basis tuple (lexicographically) whose value block is nonzero,
  /// or nullopt if the map is 0.
  std::optional<std::vector<int>> first_nonzero_tuple() const;

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain scaled(const Rational& s) const;

  /// *this += s * other (same dim and degree).
  Cochain& add_scaled(const Cochain& other, const Rational& s);

  bool operator==(const Cochain& other) const;
  bool operator!=(const Cochain& other) const { return !(*this == other); }

 private:
  int m_dim = 0;
  int m_degree = 0;
  std::size_t m_tuples = 0;
  std::vector<Rational> m_c;
  std::vector<std::uint8_t> m_nz;
};

/// The degree-1 cochain whose values are the bracket table of t.
Cochain structure_cochain(const TripleSystem& t);

/// Interpret a degree-1 cochain as a triple-bracket table.
TripleSystem cochain_to_system(const Cochain& c);

/// Circle product P o Q of cochains of degrees p and q: a cochain of
/// degree p + q.  Writing the 2(p+q)+1 arguments as pairs
/// X_1 = (x_1, y_1), ..., X_{p+q} = (x_{p+q}, y_{p+q}) plus a final
/// single argument z, the product inserts Q into P in all positions:
///
///  * For k = 1..p, Q consumes a (k-1, q)-shuffled selection of the first
///    k-1+q pairs plus either the x-half or the y-half of the next pair;
///    its output refills that half of the pair fed to P.  Both of these
///    groups carry the sign (-1)^((k-1) q) times the shuffle signature.
///  * Q consumes a (p, q)-shuffled selection of pairs plus the final
///    argument z; its output becomes the final argument of P.  This group
///    carries the sign (-1)^(p q) times the shuffle signature.
///
/// Shuffles are enumerated lexicographically by the ascending index set of
/// the first block, and the shuffle signature is (-1)^inversions between
/// the two blocks.  With these signs the graded bracket below satisfies
/// the graded Jacobi identity on all cochains (a property-tested fact, see
/// the test suite), and for a degree-1 cochain T the condition
/// [T, T] = 0 is equivalent to the three defining identities of a Lie
/// triple system when T lies in the constrained subspace.
Cochain circle_product(const Cochain& p, const Cochain& q);

/// Graded bracket [P,Q] = P o Q - (-1)^(pq) Q o P.
Cochain graded_bracket(const Cochain& p, const Cochain& q);

/// Which constraint of the alternating/cyclic subspace failed, if any.
struct SubcomplexReport {
  bool ok = false;
  /// "alternating" (swap of the two pair slots before the last argument)
  /// or "cyclic" (sum over cyclic rotations of the last three slots).
  std::string constraint;
  std::vector<int> tuple;  ///< first failing basis tuple
  Vec defect;
  explicit operator bool() const { return ok; }
};

/// Membership test for the constrained subspace of cochains that deform
/// triple brackets: for arity >= 3 the map must be antisymmetric in the
/// two arguments of the last pair (slots arity-3 and arity-2, 0-based) and
/// must vanish under the cyclic sum over the last three slots.  Degree-0
/// cochains satisfy the constraints vacuously.
SubcomplexReport is_lts_cochain(const Cochain& p);

/// Exact projection onto the constrained subspace: first antisymmetrize
/// the two arguments of the last pair, then subtract one third of the
/// cyclic sum over the last three slots.  Fixes the subspace pointwise and
/// lands in it from anywhere (idempotent); used to produce constrained
/// random cochains and spanning sets.
Cochain lts_project(const Cochain& p);

/// Lift of a linear map H: g2 -> g1 (an n1 x n2 matrix) along the
/// splitting to a degree-0 cochain on N = n1 + n2 coordinates:
/// the lift sends (x + u) to H u, i.e. it kills g1 and applies H to the
/// g2 coordinates.  Lifts of this kind square to zero under composition.
Cochain lift_linear_map(const LinearMap& h, const SplitContext& ctx);

/// Lift a trilinear map that is only defined on one mixed tensor
/// component of the splitting into a full degree-1 cochain on N
/// coordinates: blocks[a] (0 or 1) selects which block argument slot a
/// ranges over, target selects the output block, and tensor holds the
/// component values densely, row-major over the component's argument
/// tuple, with one block-dimension-long value vector per tuple.
/// The lifted cochain evaluates to the component on tuples matching the
/// block pattern and to 0 on every other tuple.
Cochain lift_component(const std::vector<int>& blocks, int target,
                       const std::vector<Rational>& tensor,
                       const SplitContext& ctx);

/// Bidegree l|k of a cochain with respect to a splitting: a nonzero
/// homogeneous cochain of degree p has bidegree l|k (l + k = 2p, each of
/// l, k >= -1) when its value on a mixed basis tuple lies in g1 exactly
/// for tuples containing l+1 arguments from g1 (and then k from g2), and
/// in g2 exactly for tuples with l arguments from g1 and k+1 from g2; it
/// vanishes on all tuples of any other mixture.
struct Bidegree {
  int l = 0;
  int k = 0;
  bool operator==(const Bidegree&) const = default;
};

enum class BidegreeKind {
  Homogeneous,    ///< nonzero with a unique bidegree
  Indeterminate,  ///< the zero cochain (every bidegree fits)
  Inhomogeneous,  ///< no single bidegree fits
};

struct BidegreeResult {
  BidegreeKind kind = BidegreeKind::Indeterminate;
  Bidegree value;  ///< meaningful only when kind == Homogeneous
};

/// Classify the bidegree of p with respect to ctx (see Bidegree).
BidegreeResult bidegree_of(const Cochain& p, const SplitContext& ctx);

/// The five components of a degree-1 cochain on a split space, each
/// returned as a full cochain supported on its own tuple mixture.
/// Their bidegrees are phi1: 3|-1, mu1: 2|0, psi: 1|1, mu2: 0|2,
/// phi2: -1|3, and theta = phi1 + mu1 + psi + mu2 + phi2.
///
/// Routing is by the number c of g2 arguments in a basis tuple and the
/// output block: with outputs split as (value in g1 | value in g2),
/// c = 0 feeds mu1 | phi1, c = 1 feeds psi | mu1, c = 2 feeds mu2 | psi,
/// and c = 3 feeds phi2 | mu2.
struct ThetaComponents {
  Cochain phi1, mu1, psi, mu2, phi2;

  /// Sum of the five components (equals the decomposed cochain).
  Cochain sum() const;
};

/// Split a degree-1 cochain into its five bidegree components.
ThetaComponents decompose_theta(const Cochain& theta, const SplitContext& ctx);

/// Verify and apply the addition law for bidegrees: for homogeneous f of
/// bidegree l1|k1 and g of l2|k2 with nonzero bracket, [f,g] is
/// homogeneous of bidegree (l1+l2)|(k1+k2).  Returns that bidegree after
/// computing [f,g] and checking the law holds (InternalError if the
/// computed bracket contradicts it, InvalidInputError if f or g is not
/// homogeneous).  A zero bracket returns nullopt.
std::optional<Bidegree> bidegree_bracket_law(const Cochain& f,
                                             const Cochain& g,
                                             const SplitContext& ctx);

}  // namespace lts

#endif  // LTS_COCHAIN_HPP
