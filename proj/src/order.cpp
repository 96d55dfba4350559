#include "npinv/order.hpp"

#include <algorithm>
#include <numeric>

#include "npinv/error.hpp"

namespace npinv {

namespace {

std::strong_ordering lex_compare(const ExponentVec& a, const ExponentVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a[i] <=> b[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace

AdditiveOrder AdditiveOrder::lex(std::size_t h) { return AdditiveOrder(Matrix::identity(h), Kind::lex); }

AdditiveOrder AdditiveOrder::weight_lex(const std::vector<Rational>& weights) {
  std::size_t h = weights.size();
  if (h == 0) throw DimensionMismatch("empty weight vector");
  for (const auto& w : weights)
    if (w.sign() <= 0) throw PreconditionError("weights must be strictly positive");
  Matrix m(h);
  for (std::size_t j = 0; j < h; ++j) m(0, j) = weights[j];
  for (std::size_t i = 1; i < h; ++i) m(i, i - 1) = 1;
  return AdditiveOrder(std::move(m), Kind::weight_lex);
}

AdditiveOrder AdditiveOrder::graded(std::size_t h) { return weight_lex(std::vector<Rational>(h, Rational(1))); }

AdditiveOrder AdditiveOrder::from_matrix(const Matrix& m) {
  if (!m.is_invertible()) throw PreconditionError("order matrix is singular");
  if (m == Matrix::identity(m.size())) return lex(m.size());
  AdditiveOrder o(m, Kind::composed);
  if (o.leading_weights()) o.kind_ = Kind::weight_lex;
  return o;
}

std::strong_ordering AdditiveOrder::compare(const ExponentVec& a, const ExponentVec& b) const {
  require_dim(a, dim(), "order comparison");
  require_dim(b, dim(), "order comparison");
  if (kind_ == Kind::lex) return lex_compare(a, b);
  return lex_compare(m_ * a, m_ * b);
}

bool AdditiveOrder::accepted() const { return leading_weights().has_value() || m_.is_nonneg(); }

std::optional<std::vector<Rational>> AdditiveOrder::leading_weights() const {
  auto r = m_.row(0);
  for (const auto& x : r)
    if (x.sign() <= 0) return std::nullopt;
  return r;
}

std::strong_ordering order_compare(const AdditiveOrder& ord, const ExponentVec& a, const ExponentVec& b) {
  return ord.compare(a, b);
}

AdditiveOrder order_compose(const AdditiveOrder& ord, const Matrix& q) {
  if (q.size() != ord.dim()) throw DimensionMismatch("order composition");
  if (!q.is_invertible()) throw PreconditionError("composition with a singular matrix");
  if (q == Matrix::identity(q.size())) return ord;
  return AdditiveOrder(ord.matrix() * q, AdditiveOrder::Kind::composed);
}

std::vector<ExponentVec> sorted_by(const AdditiveOrder& ord, std::vector<ExponentVec> v) {
  std::vector<ExponentVec> img;
  img.reserve(v.size());
  for (const auto& e : v) img.push_back(ord.image(e));
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return lex_compare(img[a], img[b]) < 0; });
  std::vector<ExponentVec> out;
  out.reserve(v.size());
  for (auto i : idx) out.push_back(std::move(v[i]));
  return out;
}

}  // namespace npinv
