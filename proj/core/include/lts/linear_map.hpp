#ifndef LTS_LINEAR_MAP_HPP
#define LTS_LINEAR_MAP_HPP

#include <lts/rational.hpp>

/// \file linear_map.hpp
/// Dense rational matrices acting on coordinate vectors.

namespace lts {

/// A linear map between finite-dimensional rational coordinate spaces,
/// stored as a dense rows() x cols() matrix.
///
/// Column convention: column j holds the image of the j-th basis vector of
/// the source, i.e. (A x)_i = sum_j A(i,j) x_j.
class LinearMap {
 public:
  /// The 0 x 0 map.
  LinearMap() = default;

  /// Zero map with the given shape.
  LinearMap(int rows, int cols);

  /// Identity on an n-dimensional space.
  static LinearMap identity(int n);

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }

  /// Entry in row i, column j.
  const Rational& at(int i, int j) const {
    return m_a[static_cast<std::size_t>(i) * m_cols + j];
  }
  Rational& at(int i, int j) {
    return m_a[static_cast<std::size_t>(i) * m_cols + j];
  }

  /// Image of the j-th source basis vector (column j).
  Vec column(int j) const;

  /// Matrix-vector product; x.size() must equal cols().
  Vec apply(const Vec& x) const;

  /// Composition (this after other); other.rows() must equal cols().
  LinearMap compose(const LinearMap& other) const;

  LinearMap operator+(const LinearMap& other) const;
  LinearMap operator-(const LinearMap& other) const;
  LinearMap scaled(const Rational& s) const;

  bool operator==(const LinearMap& other) const;
  bool operator!=(const LinearMap& other) const { return !(*this == other); }

  /// True iff every entry is exactly 0.
  bool is_zero() const;

 private:
  int m_rows = 0;
  int m_cols = 0;
  std::vector<Rational> m_a;  // row-major
};

/// Commutator A B - B A of two square maps of equal dimension.
LinearMap commutator(const LinearMap& a, const LinearMap& b);

}  // namespace lts

#endif  // LTS_LINEAR_MAP_HPP
