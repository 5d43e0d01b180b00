#ifndef LTS_RATIONAL_HPP
#define LTS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

/// \file rational.hpp
/// Exact rational scalars and the error types used across the library.
///
/// Every computation in this library is exact: scalars are arbitrary-
/// precision rationals, kept in canonical form (gcd-reduced, positive
/// denominator) by GMP.  There are no epsilons anywhere; equality of
/// scalars, vectors and operator tables always means exact equality.

namespace lts {

/// Exact rational scalar.  Default-constructed value is 0.
using Rational = mpq_class;

/// Dense coordinate vector over Rational.
using Vec = std::vector<Rational>;

/// Raised when user-supplied data is malformed before any mathematics
/// happens: unreadable files, bad rational literals, dimension mismatches,
/// out-of-range indices.  The command-line driver maps this to exit code 2.
class InvalidInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when well-formed data fails a mathematical precondition: a
/// bracket table that violates the defining identities where a valid
/// system is required, a square-zero precondition that does not hold, and
/// so on.  The command-line driver maps this to exit code 1.
class InvalidStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two independent internal computations of the same quantity
/// disagree.  This should never happen; it indicates a bug in the library
/// itself, and the command-line driver maps it to exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// True iff the scalar is exactly 0.
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// True iff every coordinate is exactly 0.
inline bool is_zero_vec(const Vec& v) {
  for (const Rational& r : v) {
    if (!is_zero(r)) return false;
  }
  return true;
}

/// Zero vector of length n.
inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

/// Parse a rational literal of the form "p" or "p/q" with optional leading
/// sign, e.g. "3", "-5/2", "+7/21" (canonicalized to 1/3).
///
/// \throws InvalidInputError on any other shape, including q == 0.
Rational rational_from_string(const std::string& text);

/// Canonical decimal string "p" or "p/q" (q > 1 only when needed).
std::string to_string(const Rational& r);

/// Render a coordinate vector as e.g. "(0, 1, -3/2)".
std::string to_string(const Vec& v);

}  // namespace lts

#endif  // LTS_RATIONAL_HPP
