#pragma once

#include <optional>

#include "npinv/report.hpp"
#include "npinv/series.hpp"

namespace npinv {

/// The series phi_check with u1*phi_check(u1, t2, ...) inverse to t1*phi(t1, t2, ...)
/// in the first slot. Solved level by level in total degree from
///   1 = sum_k [phi_check]_k t^k phi^(k1 + 1).
/// An exact non-constant phi needs a cap on the result precision.
PuiseuxSeries dual(const PuiseuxSeries& phi, std::optional<Rational> cap = std::nullopt);

/// sum_k [phi_check]_k t^k phi^(k1 + 1) - 1, which vanishes up to the precision.
PuiseuxSeries dual_identity_residual(const PuiseuxSeries& phi, const PuiseuxSeries& phi_check);

/// Irr(phi^N) = Irr(phi) and the coefficient formulas at irreducible exponents.
CheckReport verify_power_identity(const PuiseuxSeries& phi, long N);

/// Irr(dual) = Irr(phi) and [phi_check]_r = -[phi]_0^(-r1-2) [phi]_r at irreducible r != 0.
CheckReport verify_dual_identity(const PuiseuxSeries& phi, std::optional<Rational> cap = std::nullopt);

/// phi^r scaled so that the constant term is a0^r; throws when a0^r is irrational.
PuiseuxSeries rational_power(const PuiseuxSeries& phi, const Rational& r, std::optional<Rational> cap);

}  // namespace npinv
