#pragma once

#include <initializer_list>
#include <vector>

#include "npinv/exponent.hpp"

namespace npinv {

/// Square rational matrix acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t h) : n_(h), a_(h * h) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix identity(std::size_t h);
  static Matrix diagonal(const std::vector<Rational>& d);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::vector<Rational> row(std::size_t i) const;

  Matrix operator*(const Matrix& o) const;
  ExponentVec operator*(const ExponentVec& v) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Rational determinant() const;
  bool is_invertible() const { return !determinant().is_zero(); }
  /// throws PreconditionError when singular
  Matrix inverse() const;
  Matrix transpose() const;
  bool is_nonneg() const;
  bool is_integral() const;
  bool is_unimodular() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

}  // namespace npinv
