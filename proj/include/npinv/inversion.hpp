#pragma once

#include <optional>

#include "npinv/exponents.hpp"
#include "npinv/report.hpp"
#include "npinv/series.hpp"

namespace npinv {

/// eta(t) = (t1 * unit)^m1 after the substitution x_i = t_i^(n_i).
struct BranchData {
  PuiseuxSeries unit;  // eta-tilde, constant term root_coeff
  long m1 = 1;
  Rational root_coeff{1};
  std::vector<std::int64_t> n;  // ramification of eta
  PuiseuxSeries eta;            // in x
  PuiseuxSeries eta_t;          // in t
};

/// cap bounds the t-space precision of the unit part (needed for exact inputs).
BranchData extract_branch(const PuiseuxSeries& eta, std::optional<Rational> root_coeff = std::nullopt,
                          std::optional<Rational> cap = std::nullopt);

struct InversionOptions {
  /// Total-degree bound of xi in (u1, t2, ...); default: all that eta supports.
  std::optional<Rational> target_precision;
  /// Order for the essential sequences; default lex.
  std::optional<AdditiveOrder> order;
};

struct InversionResult {
  PuiseuxSeries eta;     // x-space
  PuiseuxSeries xi;      // (y1, x2, ..., xh)
  PuiseuxSeries eta_t;   // t-space
  PuiseuxSeries xi_u;    // (u1, t2, ..., th)
  PuiseuxSeries unit_eta;
  PuiseuxSeries unit_xi;
  long m1 = 1;
  long n1 = 1;
  std::vector<std::int64_t> n;
  Rational root_coeff{1};
  EssentialSequence ess_eta;    // eta relative to Z^h
  EssentialSequence ess_xi;     // xi relative to Z^h
  EssentialSequence ess_eta_t;  // eta(t) relative to n1 Z nu1 + Z nu2 + ...
  EssentialSequence ess_xi_u;   // xi(u) relative to m1 Z nu1 + Z nu2 + ...
  CheckReport checks;
};

InversionResult invert_branch(const BranchData& data, const InversionOptions& opts = {});

/// Exponent and coefficient relations between the essential entries of eta and
/// xi, in t/u coordinates and in x/y coordinates.
CheckReport verify_halphen_stolz(const InversionResult& r);

/// [xi(u)]_q, i.e. the coefficient of y^(q/m) in xi, from the unit-part coefficients of eta alone (h = 1).
Rational lagrange_coefficient(const BranchData& data, long q);

/// The u1^q slice of xi(u1, t2, ...) by the same formula with t2..th as coefficients.
/// cap bounds the t-space precision of the unit part; an exact unit with terms
/// free of t1 needs one.
PuiseuxSeries lagrange_slice(const BranchData& data, long q, std::optional<Rational> cap = std::nullopt);

/// p [X^q]_p = q [Y^-p]_-q for reciprocal order-one series X(u), Y(t) (h = 1).
CheckReport lagrange_pair_check(const PuiseuxSeries& X, const PuiseuxSeries& Y, long p, long q);

/// X(Y(t)) for h = 1, X with positive integer exponents and Y of order >= 1.
PuiseuxSeries compose_univariate(const PuiseuxSeries& X, const PuiseuxSeries& Y);

}  // namespace npinv
