#include "npinv/exponent.hpp"

#include "npinv/error.hpp"

namespace npinv {

ExponentVec ExponentVec::unit(std::size_t h, std::size_t i) {
  ExponentVec v(h);
  v[i] = 1;
  return v;
}

Rational ExponentVec::total() const {
  Rational s;
  for (const auto& x : c_) s += x;
  return s;
}

bool ExponentVec::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExponentVec::is_integral() const {
  for (const auto& x : c_)
    if (!x.is_integer()) return false;
  return true;
}

bool ExponentVec::is_nonneg() const {
  for (const auto& x : c_)
    if (x.sign() < 0) return false;
  return true;
}

bool ExponentVec::leq_coordinatewise(const ExponentVec& b) const {
  require_dim(b, size(), "coordinatewise comparison");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > b[i]) return false;
  return true;
}

ExponentVec& ExponentVec::operator+=(const ExponentVec& o) {
  require_dim(o, size(), "exponent addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o[i];
  return *this;
}

ExponentVec& ExponentVec::operator-=(const ExponentVec& o) {
  require_dim(o, size(), "exponent subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o[i];
  return *this;
}

ExponentVec& ExponentVec::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

ExponentVec ExponentVec::operator-() const {
  ExponentVec r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string ExponentVec::str() const {
  if (c_.size() == 1) return c_[0].str();
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  return s + ")";
}

bool ExponentStorageLess::operator()(const ExponentVec& a, const ExponentVec& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a[i] <=> b[i];
    if (c != 0) return c < 0;
  }
  return false;
}

void require_dim(const ExponentVec& v, std::size_t h, const char* where) {
  if (v.size() != h)
    throw DimensionMismatch(std::string(where) + ": expected dimension " + std::to_string(h) + ", got " +
                            std::to_string(v.size()));
}

}  // namespace npinv
