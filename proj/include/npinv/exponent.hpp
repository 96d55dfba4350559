#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "npinv/rational.hpp"

namespace npinv {

/// Element of Q^h. There is deliberately no operator<; use an AdditiveOrder
/// for semantic comparison and ExponentStorageLess for container keys.
class ExponentVec {
 public:
  ExponentVec() = default;
  explicit ExponentVec(std::size_t h) : c_(h) {}
  ExponentVec(std::initializer_list<Rational> coords) : c_(coords) {}
  explicit ExponentVec(std::vector<Rational> coords) : c_(std::move(coords)) {}

  static ExponentVec zero(std::size_t h) { return ExponentVec(h); }
  static ExponentVec unit(std::size_t h, std::size_t i);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  Rational total() const;
  bool is_zero() const;
  bool is_integral() const;
  bool is_nonneg() const;
  /// coordinatewise a <= b
  bool leq_coordinatewise(const ExponentVec& b) const;

  ExponentVec& operator+=(const ExponentVec& o);
  ExponentVec& operator-=(const ExponentVec& o);
  ExponentVec& operator*=(const Rational& s);
  friend ExponentVec operator+(ExponentVec a, const ExponentVec& b) { return a += b; }
  friend ExponentVec operator-(ExponentVec a, const ExponentVec& b) { return a -= b; }
  friend ExponentVec operator*(const Rational& s, ExponentVec a) { return a *= s; }
  ExponentVec operator-() const;
  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;

  /// "(3/2, 0)" or "3/2" when h = 1
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// Arbitrary strict weak ordering used only for storage and determinism.
struct ExponentStorageLess {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

void require_dim(const ExponentVec& v, std::size_t h, const char* where);

}  // namespace npinv
