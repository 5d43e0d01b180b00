#include <lts/linear_map.hpp>

namespace lts {

LinearMap::LinearMap(int rows, int cols)
    : m_rows(rows),
      m_cols(cols),
      m_a(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) {
    throw InvalidInputError("negative matrix dimensions");
  }
}

LinearMap LinearMap::identity(int n) {
  LinearMap m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec LinearMap::column(int j) const {
  Vec v = zero_vec(m_rows);
  for (int i = 0; i < m_rows; ++i) v[i] = at(i, j);
  return v;
}

Vec LinearMap::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != m_cols) {
    throw InvalidInputError("matrix-vector dimension mismatch");
  }
  Vec y = zero_vec(m_rows);
  for (int i = 0; i < m_rows; ++i) {
    for (int j = 0; j < m_cols; ++j) {
      if (lts::is_zero(x[j])) continue;
      y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  if (other.m_rows != m_cols) {
    throw InvalidInputError("matrix composition dimension mismatch");
  }
  LinearMap r(m_rows, other.m_cols);
  for (int i = 0; i < m_rows; ++i) {
    for (int k = 0; k < m_cols; ++k) {
      if (lts::is_zero(at(i, k))) continue;
      for (int j = 0; j < other.m_cols; ++j) {
        r.at(i, j) += at(i, k) * other.at(k, j);
      }
    }
  }
  return r;
}

LinearMap LinearMap::operator+(const LinearMap& other) const {
  if (other.m_rows != m_rows || other.m_cols != m_cols) {
    throw InvalidInputError("matrix addition shape mismatch");
  }
  LinearMap r = *this;
  for (std::size_t i = 0; i < m_a.size(); ++i) r.m_a[i] += other.m_a[i];
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& other) const {
  if (other.m_rows != m_rows || other.m_cols != m_cols) {
    throw InvalidInputError("matrix subtraction shape mismatch");
  }
  LinearMap r = *this;
  for (std::size_t i = 0; i < m_a.size(); ++i) r.m_a[i] -= other.m_a[i];
  return r;
}

LinearMap LinearMap::scaled(const Rational& s) const {
  LinearMap r = *this;
  for (Rational& v : r.m_a) v *= s;
  return r;
}

bool LinearMap::operator==(const LinearMap& other) const {
  return m_rows == other.m_rows && m_cols == other.m_cols &&
         m_a == other.m_a;
}

bool LinearMap::is_zero() const {
  for (const Rational& v : m_a) {
    if (!lts::is_zero(v)) return false;
  }
  return true;
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) {
  return a.compose(b) - b.compose(a);
}

}  // namespace lts
