#ifndef LTS_TWISTING_HPP
#define LTS_TWISTING_HPP

#include <lts/cochain.hpp>
#include <lts/linear_map.hpp>

#include <string>

/// \file twisting.hpp
/// Square-zero degree-1 cochains on a split space, their classification by
/// vanishing bidegree components, and the twist of such a structure by a
/// linear map between the blocks.

namespace lts {

/// How a square-zero structure on a split space is classified by which of
/// its bidegree components vanish, from weakest to strongest:
///
///   Proto    -- no vanishing required,
///   Quasi    -- phi2 = 0,
///   Twilled  -- phi1 = 0 and phi2 = 0,
///   Strict   -- phi1 = phi2 = psi = 0.
///
/// kind holds the most specific class that applies.  For each class the
/// defining square-zero condition [Theta,Theta] = 0 splits into a system
/// of component-bracket equations, one per output bidegree; the
/// classifier re-derives that system from the bidegree bookkeeping and
/// verifies it, recording the outcome in conditions_ok (it must agree
/// with [Theta,Theta] = 0, else InternalError).
struct Classification {
  enum class Kind { Proto, Quasi, Twilled, Strict };

  Kind kind = Kind::Proto;
  bool phi1_zero = false;
  bool phi2_zero = false;
  bool psi_zero = false;
  /// Component-bracket condition system for `kind` verified to hold.
  bool conditions_ok = false;

  bool is_twilled() const { return phi1_zero && phi2_zero; }
  bool is_strict() const { return is_twilled() && psi_zero; }

  /// "proto", "quasi", "twilled" or "strict".
  std::string name() const;
};

/// A degree-1 cochain Theta on a split space that lies in the constrained
/// subspace and satisfies [Theta, Theta] = 0, bundled with its splitting
/// and its five bidegree components.  Construction validates both
/// preconditions and throws InvalidStructureError (with the first failing
/// tuple) if either fails.
class ProtoStructure {
 public:
  static ProtoStructure create(const Cochain& theta, const SplitContext& ctx);

  const Cochain& theta() const { return m_theta; }
  const SplitContext& ctx() const { return m_ctx; }
  const ThetaComponents& components() const { return m_comps; }

 private:
  ProtoStructure() = default;
  Cochain m_theta;
  SplitContext m_ctx;
  ThetaComponents m_comps;
};

/// A ProtoStructure whose classification is at least Twilled
/// (phi1 = phi2 = 0).  Construction additionally validates that.
class TwilledStructure {
 public:
  static TwilledStructure create(const Cochain& theta,
                                 const SplitContext& ctx);
  static TwilledStructure create(ProtoStructure s);

  const ProtoStructure& proto() const { return m_s; }
  const Cochain& theta() const { return m_s.theta(); }
  const SplitContext& ctx() const { return m_s.ctx(); }
  const Cochain& mu1() const { return m_s.components().mu1; }
  const Cochain& psi() const { return m_s.components().psi; }
  const Cochain& mu2() const { return m_s.components().mu2; }

 private:
  explicit TwilledStructure(ProtoStructure s) : m_s(std::move(s)) {}
  ProtoStructure m_s;
};

/// Classify a square-zero degree-1 cochain (see Classification).
/// Requires [theta, theta] = 0 and membership in the constrained
/// subspace; throws InvalidStructureError otherwise.
Classification classify(const Cochain& theta, const SplitContext& ctx);

/// Twist of a degree-1 cochain by a linear map H: g2 -> g1, computed as
/// the exponential action of bracketing with the lift Hhat:
///
///   X(Theta) = [Theta, Hhat],
///   Theta^H  = Theta + X + X^2/2 + X^3/6 + X^4/24.
///
/// The series stops because X^5(Theta) = 0 for every degree-1 cochain;
/// this vanishing is recomputed on every call and an InternalError is
/// thrown if it ever failed.  No square-zero assumption on Theta is
/// needed for the series itself.
Cochain twist_series(const Cochain& theta, const LinearMap& h,
                     const SplitContext& ctx);

/// The same twist computed by conjugation instead of the series:
///
///   Theta^H = (Id - Hhat) o Theta o ((Id + Hhat) x (Id + Hhat) x (Id + Hhat)),
///
/// i.e. feed every argument through Id + Hhat and push the result through
/// Id - Hhat.  Agrees with twist_series for arbitrary degree-1 cochains;
/// the two paths share no code and cross-validate each other.
Cochain twist_conjugation(const Cochain& theta, const LinearMap& h,
                          const SplitContext& ctx);

/// Componentwise form of the twist: with X = [., Hhat],
///
///   phi1^H = phi1
///   mu1^H  = mu1  + X(phi1)
///   psi^H  = psi  + X(mu1)  + X^2(phi1)/2
///   mu2^H  = mu2  + X(psi)  + X^2(mu1)/2  + X^3(phi1)/6
///   phi2^H = phi2 + X(mu2)  + X^2(psi)/2  + X^3(mu1)/6 + X^4(phi1)/24
///
/// Each X^j lands in the right bidegree slot, so the twist of a component
/// decomposition is computed without ever forming Theta^H.
ThetaComponents twist_components(const ThetaComponents& comps,
                                 const LinearMap& h, const SplitContext& ctx);

/// The triple bracket induced on the second block by a twilled structure
/// twisted by H, written directly in terms of H and the g2-valued part of
/// the original structure, [a,b,c]_2 := pr_g2 Theta(a,b,c) (arguments from
/// either block):
///
///   [u,v,w]_H = [u,v,w]_2 + [Hu,v,w]_2 + [u,Hv,w]_2 + [u,v,Hw]_2
///             + [Hu,Hv,w]_2 + [u,Hv,Hw]_2 + [Hu,v,Hw]_2
///
/// for u, v, w in g2; the eighth insertion pattern [Hu,Hv,Hw]_2 is absent
/// because it lands in the vanishing phi1 component.  Requires both tw and
/// its twist by h to be twilled; throws InvalidStructureError otherwise.
/// The result equals the g2-restriction of mu2^H, which is verified
/// internally (InternalError on disagreement).
TripleSystem twisted_g2_bracket(const TwilledStructure& tw,
                                const LinearMap& h);

}  // namespace lts

#endif  // LTS_TWISTING_HPP
