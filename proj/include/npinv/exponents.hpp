#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "npinv/lattice.hpp"
#include "npinv/order.hpp"
#include "npinv/series.hpp"

namespace npinv {

struct EssentialSequence {
  std::vector<ExponentVec> entries;
  Lattice relative_to;
  AdditiveOrder order = AdditiveOrder::lex(1);
  Lattice final_lattice;
  /// final_lattice contains a lattice known to hold the whole support: the
  /// ramification lattice prod (1/n_i) Z, or Z{S} when S is the exact support.
  bool complete = false;
  /// Leading entries that no exponent beyond the truncation can precede.
  std::size_t certified_prefix = 0;
  /// Every exponent beyond the truncation is larger than the last entry, so
  /// the unseen part of the support cannot change the sequence.
  bool truncation_safe = true;

  bool certified() const { return complete && truncation_safe; }
  std::size_t length() const { return entries.size(); }
};

struct EssOptions {
  /// Ramification declared by the caller; merged with the denominators of S.
  std::optional<std::vector<std::int64_t>> ramification;
  /// S is the support of a series known up to this total degree.
  std::optional<Rational> precision;
  /// A lattice known to contain the full (untruncated) support.
  std::optional<Lattice> support_lattice;
};

/// Elements of S that are not a sum of two or more nonzero elements of S.
std::vector<ExponentVec> irreducible_exponents(const std::vector<ExponentVec>& S);
std::vector<Rational> irreducible_exponents(const std::vector<Rational>& S);

EssentialSequence essential_exponents(const std::vector<ExponentVec>& S, const Lattice& M, const AdditiveOrder& ord,
                                      const EssOptions& opts = {});
/// h = 1, relative to the group pZ.
EssentialSequence essential_exponents_p(const std::vector<Rational>& S, const Rational& p,
                                        std::int64_t declared_ramification = 1);
/// Support, ramification and precision are taken from the series.
EssentialSequence essential_exponents(const PuiseuxSeries& s, const Lattice& M, const AdditiveOrder& ord,
                                      std::optional<Lattice> support_lattice = std::nullopt);

/// Drop the head iff it is integral.
std::vector<ExponentVec> drop_integral_head(const std::vector<ExponentVec>& entries);

struct CharacteristicSequence {
  std::vector<Rational> entries;
  bool complete = false;
};

CharacteristicSequence characteristic_exponents(const PuiseuxSeries& psi);

/// True iff v is a sum of 1..max_terms elements of S \ {0}, by exhaustive search.
bool semigroup_member_oracle(const std::vector<ExponentVec>& S, const ExponentVec& v, int max_terms,
                             std::size_t budget = 1'000'000);

std::vector<ExponentVec> as_vectors(const std::vector<Rational>& S);
std::vector<Rational> first_coords(const std::vector<ExponentVec>& S);

}  // namespace npinv
