#pragma once

#include <vector>

#include "npinv/exponent.hpp"

namespace npinv {

/// Finitely generated subgroup of Q^h. Stored as an integral echelon basis of
/// scale * generators, where scale is the least integer clearing all denominators.
class Lattice {
 public:
  explicit Lattice(std::size_t h = 1);  // the zero subgroup
  Lattice(std::size_t h, const std::vector<ExponentVec>& generators);

  static Lattice standard(std::size_t h);  // Z^h
  /// d_1 Z nu_1 + ... + d_h Z nu_h
  static Lattice diagonal(const std::vector<Rational>& d);
  /// Z{p} for h = 1
  static Lattice multiples(const Rational& p) { return diagonal({p}); }

  std::size_t dim() const { return h_; }
  std::size_t rank() const { return basis_.size(); }
  const Integer& scale() const { return scale_; }
  std::vector<ExponentVec> basis() const;

  bool contains(const ExponentVec& v) const;
  bool contains(const Lattice& other) const;
  Lattice join(const std::vector<ExponentVec>& extra) const;
  Lattice join(const ExponentVec& extra) const { return join(std::vector<ExponentVec>{extra}); }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.h_ == b.h_ && a.scale_ == b.scale_ && a.basis_ == b.basis_;
  }

 private:
  void build(std::vector<std::vector<Integer>> rows);

  std::size_t h_;
  Integer scale_ = 1;
  std::vector<std::vector<Integer>> basis_;  // Hermite normal form rows
  std::vector<std::size_t> pivots_;
};

bool lattice_contains(const Lattice& m, const ExponentVec& v);
Lattice lattice_join(const Lattice& m, const std::vector<ExponentVec>& extra);

}  // namespace npinv
