#ifndef LTS_TESTS_FIXTURES_HPP
#define LTS_TESTS_FIXTURES_HPP

#include <lts/cochain.hpp>
#include <lts/linear_map.hpp>
#include <lts/representation.hpp>
#include <lts/triple_system.hpp>

#include <cstdlib>
#include <random>
#include <string>

namespace fixtures {

/// Directory holding the JSON fixture files; overridable for installed
/// test runs.
inline std::string dir() {
  if (const char* env = std::getenv("LTS_FIXTURE_DIR")) return env;
  return LTS_FIXTURE_DIR;
}

inline std::string path(const std::string& name) { return dir() + "/" + name; }

/// Two-dimensional running example: [e1,e2,e2] = e1, [e2,e1,e2] = -e1,
/// all other basis brackets zero.
inline lts::TripleSystem example1() {
  lts::TripleSystem t(2);
  t.set_bracket(0, 1, 1, {1, 0});
  t.set_bracket(1, 0, 1, {-1, 0});
  return t;
}

/// Four-dimensional running example: [e1,e2,e1] = e4, [e2,e1,e1] = -e4.
inline lts::TripleSystem example2() {
  lts::TripleSystem t(4);
  t.set_bracket(0, 1, 0, {0, 0, 0, 1});
  t.set_bracket(1, 0, 0, {0, 0, 0, -1});
  return t;
}

/// The twisting operator of the two-dimensional example:
/// T e1' = 0, T e2' = a e1 + b e2 (columns of the matrix).
inline lts::LinearMap example1_T(const lts::Rational& a,
                                 const lts::Rational& b) {
  lts::LinearMap T(2, 2);
  T.at(0, 1) = a;
  T.at(1, 1) = b;
  return T;
}

/// The twisting operator of the four-dimensional example:
/// T e1' = 0, T e2' = e1, T e3' = e3, T e4' = e4.
inline lts::LinearMap example2_T() {
  lts::LinearMap T(4, 4);
  T.at(0, 1) = 1;
  T.at(2, 2) = 1;
  T.at(3, 3) = 1;
  return T;
}

/// The 3-dimensional simple Lie algebra in the basis (h, e, f):
/// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline lts::LieAlgebra sl2_like() {
  lts::LieAlgebra g(3);
  g.set_bracket(0, 1, {0, 2, 0});
  g.set_bracket(1, 0, {0, -2, 0});
  g.set_bracket(0, 2, {0, 0, -2});
  g.set_bracket(2, 0, {0, 0, 2});
  g.set_bracket(1, 2, {1, 0, 0});
  g.set_bracket(2, 1, {-1, 0, 0});
  return g;
}

/// A table violating the alternating identity: [e1,e1,e2] = e2.
inline lts::TripleSystem invalid_alternating() {
  lts::TripleSystem t(2);
  t.set_bracket(0, 0, 1, {0, 1});
  return t;
}

/// A table satisfying the alternating identity but not the cyclic sum:
/// [e1,e2,e3] = e1, [e2,e1,e3] = -e1 (the cyclic rotations stay zero).
inline lts::TripleSystem invalid_cyclic() {
  lts::TripleSystem t(3);
  t.set_bracket(0, 1, 2, {1, 0, 0});
  t.set_bracket(1, 0, 2, {-1, 0, 0});
  return t;
}

/// A table satisfying the alternating and cyclic identities whose
/// fundamental identity fails: [e1,e2,e2] = e2, [e2,e1,e2] = -e2.
inline lts::TripleSystem invalid_fundamental() {
  lts::TripleSystem t(2);
  t.set_bracket(0, 1, 1, {0, 1});
  t.set_bracket(1, 0, 1, {0, -1});
  return t;
}

/// Deterministic random degree-d cochain with small integer entries.
/// Roughly `density` of the coefficients are nonzero.
inline lts::Cochain random_cochain(int dim, int degree, std::mt19937& rng,
                                   double density = 0.3) {
  lts::Cochain c(dim, degree);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-2, 2);
  const int ar = c.arity();
  std::vector<int> args(ar, 0);
  lts::Vec v(dim);
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    c.unpack_tuple(t, args.data());
    bool nz = false;
    for (int o = 0; o < dim; ++o) {
      if (coin(rng) < density) {
        v[o] = val(rng);
        nz = nz || !lts::is_zero(v[o]);
      } else {
        v[o] = 0;
      }
    }
    if (nz) c.set_values(args.data(), v);
  }
  return c;
}

/// Deterministic random linear map with entries in [-2, 2].
inline lts::LinearMap random_map(int rows, int cols, std::mt19937& rng) {
  lts::LinearMap m(rows, cols);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = val(rng);
  }
  return m;
}

}  // namespace fixtures

#endif  // LTS_TESTS_FIXTURES_HPP
