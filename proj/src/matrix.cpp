#include "npinv/matrix.hpp"

#include "npinv/error.hpp"

namespace npinv {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  n_ = rows.size();
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionMismatch("matrix must be square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t h) {
  Matrix m(h);
  for (std::size_t i = 0; i < h; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<long>(i * n_), a_.begin() + static_cast<long>((i + 1) * n_)};
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (o.n_ != n_) throw DimensionMismatch("matrix product");
  Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

ExponentVec Matrix::operator*(const ExponentVec& v) const {
  require_dim(v, n_, "matrix-vector product");
  ExponentVec r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

Rational Matrix::determinant() const {
  Matrix m = *this;
  Rational det(1);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && m(p, c).is_zero()) ++p;
    if (p == n_) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  Matrix m = *this, inv = identity(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && m(p, c).is_zero()) ++p;
    if (p == n_) throw PreconditionError("singular matrix");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(m(p, j), m(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    Rational piv = m(c, c);
    for (std::size_t j = 0; j < n_; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (std::size_t j = 0; j < n_; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_nonneg() const {
  for (const auto& x : a_)
    if (x.sign() < 0) return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const auto& x : a_)
    if (!x.is_integer()) return false;
  return true;
}

bool Matrix::is_unimodular() const {
  if (!is_integral()) return false;
  Rational d = determinant();
  return d == Rational(1) || d == Rational(-1);
}

}  // namespace npinv
