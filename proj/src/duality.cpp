#include "npinv/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "npinv/error.hpp"
#include "npinv/exponents.hpp"

namespace npinv {

namespace {

using CoefMap = std::map<ExponentVec, Rational, ExponentStorageLess>;

std::optional<Rational> min_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Points of the monoid generated by gens with total degree <= T, by increasing degree.
std::vector<ExponentVec> monoid_points(const std::vector<ExponentVec>& gens, const Rational& T, std::size_t h) {
  std::set<ExponentVec, ExponentStorageLess> seen{ExponentVec::zero(h)};
  std::vector<ExponentVec> frontier{ExponentVec::zero(h)};
  while (!frontier.empty()) {
    std::vector<ExponentVec> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        ExponentVec q = p + g;
        if (q.total() > T) continue;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<ExponentVec> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ExponentVec& a, const ExponentVec& b) { return a.total() < b.total(); });
  return out;
}

CoefMap coef_map(const PuiseuxSeries& s) {
  CoefMap m;
  for (auto& t : s.terms()) m.emplace(std::move(t.exp), std::move(t.coef));
  return m;
}

Rational pivot_power(const Rational& a0, const Rational& r) {
  auto v = exact_power(a0, r);
  if (!v)
    throw PreconditionError("constant term " + a0.str() + " has no rational power " + r.str());
  return *v;
}

}  // namespace

PuiseuxSeries rational_power(const PuiseuxSeries& phi, const Rational& r, std::optional<Rational> cap) {
  if (r.is_integer()) return pow_int(phi, r.to_long(), cap);
  return pivot_power(phi.constant_term(), r) * normalized_power(phi, r, cap);
}

PuiseuxSeries dual(const PuiseuxSeries& phi, std::optional<Rational> cap) {
  const std::size_t h = phi.num_vars();
  const Rational a0 = phi.constant_term();
  if (a0.is_zero()) throw PreconditionError("the dual needs a nonzero constant term");
  auto T = min_opt(phi.precision(), cap);
  std::vector<ExponentVec> gens;
  for (auto& e : phi.support())
    if (!e.is_zero()) gens.push_back(std::move(e));
  if (gens.empty()) return PuiseuxSeries::constant(h, Rational(1) / a0).truncate(T);
  if (!T) throw PrecisionError("the dual of an exact non-constant series is infinite; a precision cap is required");
  for (const auto& g : gens)
    if (!g.is_nonneg()) throw PreconditionError("the dual needs non-negative exponents");

  // phi^j = a0^j (phi / a0)^j with j = c / N1, and (phi / a0)^(c / N1) = root^c.
  Integer N1 = 1;
  for (const auto& g : gens) N1 = lcm(N1, g[0].denominator());
  const long n1 = Rational(N1).to_long();
  const PuiseuxSeries root = normalized_power(phi, Rational(1, n1), T);
  std::vector<PuiseuxSeries> root_pows{PuiseuxSeries::constant(h, Rational(1)).truncate(T)};
  std::map<long, CoefMap> powers;
  auto power_coef = [&](const Rational& j, const ExponentVec& e) -> Rational {
    long c = (j * Rational(n1)).to_long();
    auto it = powers.find(c);
    if (it == powers.end()) {
      while (static_cast<long>(root_pows.size()) <= c) root_pows.push_back(mul(root_pows.back(), root).truncate(T));
      it = powers.emplace(c, coef_map(pivot_power(a0, j) * root_pows[static_cast<std::size_t>(c)])).first;
    }
    auto f = it->second.find(e);
    return f == it->second.end() ? Rational(0) : f->second;
  };

  std::vector<Term> solved;
  std::size_t levels = 0;
  for (const auto& p : monoid_points(gens, *T, h)) {
    // Equation p: unknowns of lower levels are known; [phi_check]_p enters with
    // coefficient a0^(p1+1) and no unknown of the same or a higher level appears.
    Rational acc;
    for (const auto& [k, c] : solved)
      if (k.leq_coordinatewise(p)) acc += c * power_coef(k[0] + Rational(1), p - k);
    Rational pivot = pivot_power(a0, p[0] + Rational(1));
    Rational target = p.is_zero() ? Rational(1) : Rational(0);
    Rational c = (target - acc) / pivot;
    ++levels;
    if (!c.is_zero()) solved.push_back({p, c});
  }
  if (levels == 0) throw std::logic_error("dual: no graded level solved");
  return PuiseuxSeries::from_terms(h, solved, T);
}

PuiseuxSeries dual_identity_residual(const PuiseuxSeries& phi, const PuiseuxSeries& phi_check) {
  const std::size_t h = phi.num_vars();
  auto T = min_opt(phi.precision(), phi_check.precision());
  PuiseuxSeries acc = PuiseuxSeries::constant(h, Rational(-1)).truncate(T);
  std::map<Rational, PuiseuxSeries> cache;
  for (const auto& t : phi_check.terms()) {
    Rational j = t.exp[0] + Rational(1);
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, rational_power(phi, j, T)).first;
    acc = acc + t.coef * shift(it->second, t.exp).truncate(T);
  }
  return acc.truncate(T);
}

namespace {

std::vector<ExponentVec> irr_of(const PuiseuxSeries& s, const std::optional<Rational>& T) {
  auto irr = irreducible_exponents(s.truncate(T).support());
  return irr;
}

void compare_irr(CheckReport& rep, const std::vector<ExponentVec>& a, const std::vector<ExponentVec>& b,
                 const std::string& what) {
  std::set<ExponentVec, ExponentStorageLess> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  for (const auto& e : sa)
    if (!sb.count(e)) rep.fail(what, e, "irreducible on the left only");
  for (const auto& e : sb)
    if (!sa.count(e)) rep.fail(what, e, "irreducible on the right only");
}

}  // namespace

CheckReport verify_power_identity(const PuiseuxSeries& phi, long N) {
  CheckReport rep;
  rep.name = "power identity N=" + std::to_string(N);
  const Rational a0 = phi.constant_term();
  if (a0.is_zero() || N <= 0) {
    rep.fail("precondition", ExponentVec::zero(phi.num_vars()), "needs a nonzero constant term and N > 0");
    return rep;
  }
  PuiseuxSeries pN = pow_int(phi, N);
  auto T = min_opt(phi.precision(), pN.precision());
  auto irr = irr_of(phi, T);
  compare_irr(rep, irr, irr_of(pN, T), "Irr(phi) = Irr(phi^N)");
  for (const auto& r : irr) {
    if (r.is_zero()) {
      rep.expect_equal("[phi^N]_0 = [phi]_0^N", r, pN.coefficient(r), pow(a0, N));
    } else {
      rep.expect_equal("[phi^N]_r = N [phi]_0^(N-1) [phi]_r", r, pN.coefficient(r),
                       Rational(N) * pow(a0, N - 1) * phi.coefficient(r));
    }
  }
  return rep;
}

CheckReport verify_dual_identity(const PuiseuxSeries& phi, std::optional<Rational> cap) {
  CheckReport rep;
  rep.name = "dual identity";
  const Rational a0 = phi.constant_term();
  if (a0.is_zero()) {
    rep.fail("precondition", ExponentVec::zero(phi.num_vars()), "needs a nonzero constant term");
    return rep;
  }
  PuiseuxSeries check = dual(phi, cap);
  auto T = check.precision();
  auto irr = irr_of(phi, T);
  compare_irr(rep, irr, irr_of(check, T), "Irr(phi) = Irr(dual)");
  for (const auto& r : irr) {
    if (r.is_zero()) {
      rep.expect_equal("[dual]_0 = [phi]_0^-1", r, check.coefficient(r), Rational(1) / a0);
      continue;
    }
    auto f = exact_power(a0, -r[0] - Rational(2));
    if (!f) {
      rep.fail("[dual]_r = -[phi]_0^(-r1-2) [phi]_r", r, "irrational power of the constant term");
      continue;
    }
    rep.expect_equal("[dual]_r = -[phi]_0^(-r1-2) [phi]_r", r, check.coefficient(r), -*f * phi.coefficient(r));
  }
  return rep;
}

}  // namespace npinv
