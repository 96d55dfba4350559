#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "npinv/matrix.hpp"

namespace npinv {

/// Total additive order on Q^h: a < b iff matrix*a < matrix*b lexicographically.
class AdditiveOrder {
 public:
  enum class Kind { lex, weight_lex, composed };

  static AdditiveOrder lex(std::size_t h);
  /// First row = weights (strictly positive), remaining rows e_1..e_{h-1}.
  static AdditiveOrder weight_lex(const std::vector<Rational>& weights);
  /// Graded lex: total degree first, then lex.
  static AdditiveOrder graded(std::size_t h);
  /// Any invertible matrix; accepted() tells whether it dominates Q^h_+.
  static AdditiveOrder from_matrix(const Matrix& m);

  std::size_t dim() const { return m_.size(); }
  Kind kind() const { return kind_; }
  const Matrix& matrix() const { return m_; }

  std::strong_ordering compare(const ExponentVec& a, const ExponentVec& b) const;
  bool less(const ExponentVec& a, const ExponentVec& b) const { return compare(a, b) < 0; }
  ExponentVec image(const ExponentVec& a) const { return m_ * a; }

  /// The orders of the accepted class: first row strictly positive, or all
  /// entries non-negative. Both have minima on bounded-denominator subsets of Q^h_+.
  bool accepted() const;
  /// First row when strictly positive.
  std::optional<std::vector<Rational>> leading_weights() const;

  friend bool operator==(const AdditiveOrder& a, const AdditiveOrder& b) { return a.m_ == b.m_; }

 private:
  friend AdditiveOrder order_compose(const AdditiveOrder& ord, const Matrix& q);
  AdditiveOrder(Matrix m, Kind k) : m_(std::move(m)), kind_(k) {}
  Matrix m_;
  Kind kind_;
};

std::strong_ordering order_compare(const AdditiveOrder& ord, const ExponentVec& a, const ExponentVec& b);
/// Order whose matrix is ord.matrix * q, so a <_q b iff q a < q b.
AdditiveOrder order_compose(const AdditiveOrder& ord, const Matrix& q);

/// Sort a copy of v increasingly under ord (images are computed once).
std::vector<ExponentVec> sorted_by(const AdditiveOrder& ord, std::vector<ExponentVec> v);

}  // namespace npinv
