#include "npinv/inversion.hpp"

#include <algorithm>

#include "npinv/duality.hpp"
#include "npinv/error.hpp"

namespace npinv {

namespace {

std::vector<Rational> as_rationals(const std::vector<std::int64_t>& v) {
  std::vector<Rational> r;
  for (auto x : v) r.push_back(Rational(static_cast<long>(x)));
  return r;
}

Lattice first_axis_lattice(std::size_t h, long d) {
  std::vector<Rational> diag(h, Rational(1));
  diag[0] = Rational(d);
  return Lattice::diagonal(diag);
}

std::string vec_note(const ExponentVec& a, const ExponentVec& b) { return a.str() + " vs " + b.str(); }

}  // namespace

BranchData extract_branch(const PuiseuxSeries& eta, std::optional<Rational> root_coeff, std::optional<Rational> cap) {
  if (eta.is_zero()) throw PreconditionError("cannot extract a branch from the zero series");
  if (eta.laurent_ok()) throw PreconditionError("branch extraction needs non-negative exponents");
  const std::size_t h = eta.num_vars();
  BranchData d;
  d.eta = eta;
  d.n = eta.ramification();
  d.eta_t = monomial_substitute(eta, Matrix::diagonal(as_rationals(d.n)));

  auto lead_term = d.eta_t.min_term(AdditiveOrder::lex(h));
  if (!lead_term) throw PrecisionError("no known term survives the change to t coordinates");
  Term lead = *lead_term;
  ExponentVec head = ExponentVec::zero(h);
  head[0] = lead.exp[0];
  if (lead.exp != head || lead.exp[0].is_zero())
    throw PreconditionError("series is not x1-dominating: minimal exponent " + lead.exp.str());
  for (const auto& e : d.eta_t.support()) {
    if (e == lead.exp) continue;
    ExponentVec rest = e - lead.exp;
    if (!rest.is_nonneg() || rest.is_zero())
      throw PreconditionError("series is not x1-dominating: offending exponent " + e.str());
  }
  d.m1 = lead.exp[0].to_long();
  const Rational& a = lead.coef;
  if (root_coeff) {
    if (pow(*root_coeff, d.m1) != a)
      throw PreconditionError("root coefficient " + root_coeff->str() + "^" + std::to_string(d.m1) + " = " +
                              pow(*root_coeff, d.m1).str() + " differs from " + a.str());
    d.root_coeff = *root_coeff;
  } else {
    auto r = exact_root(a, static_cast<unsigned long>(d.m1));
    if (!r)
      throw PreconditionError("dominating coefficient " + a.str() + " has no rational " + std::to_string(d.m1) +
                              "-th root; supply one");
    d.root_coeff = *r;
  }
  PuiseuxSeries normalized = shift(d.eta_t, -lead.exp);
  d.unit = unit_root(normalized, d.m1, d.root_coeff, cap);
  return d;
}

InversionResult invert_branch(const BranchData& data, const InversionOptions& opts) {
  const std::size_t h = data.eta.num_vars();
  InversionResult r;
  r.eta = data.eta;
  r.eta_t = data.eta_t;
  r.unit_eta = data.unit;
  r.m1 = data.m1;
  r.n1 = data.n[0];
  r.n = data.n;
  r.root_coeff = data.root_coeff;

  auto available = data.unit.precision();
  std::optional<Rational> unit_cap;
  if (opts.target_precision) {
    unit_cap = *opts.target_precision - Rational(r.n1);
    if (available && *unit_cap > *available)
      throw PreconditionError("eta is too short for target precision " + opts.target_precision->str() +
                              ": needs t-precision " + (*unit_cap + Rational(r.m1)).str() + ", has " +
                              (*available + Rational(r.m1)).str());
  } else if (!available) {
    throw PrecisionError("exact unit part and no target precision");
  }
  r.unit_xi = dual(data.unit, unit_cap);
  ExponentVec nu1 = Rational(r.n1) * ExponentVec::unit(h, 0);
  r.xi_u = shift(pow_int(r.unit_xi, r.n1), nu1);

  std::vector<Rational> back = as_rationals(data.n);
  back[0] = Rational(r.m1);
  for (auto& x : back) x = Rational(1) / x;
  r.xi = monomial_substitute(r.xi_u, Matrix::diagonal(back));
  if (r.xi.is_zero())
    throw PrecisionError("no term of xi is known at total degree " + r.xi.precision()->str() +
                         " in y; raise the target precision");

  AdditiveOrder ord = opts.order ? *opts.order : AdditiveOrder::lex(h);
  // With an exact eta, every series below has support in a lattice spanned by
  // its own known exponents: supp(xi_u) lies in n1 nu1 + Z{supp(eta_t) - m1 nu1}.
  std::optional<Lattice> xi_u_lattice, xi_lattice;
  if (data.eta.is_exact()) {
    ExponentVec lead = Rational(r.m1) * ExponentVec::unit(h, 0);
    std::vector<ExponentVec> gens{nu1};
    for (const auto& e : data.eta_t.support()) gens.push_back(e - lead);
    xi_u_lattice = Lattice(h, gens);
    std::vector<ExponentVec> ygens;
    Matrix to_y = Matrix::diagonal(back);
    for (const auto& g : xi_u_lattice->basis()) ygens.push_back(to_y * g);
    xi_lattice = Lattice(h, ygens);
  } else {
    xi_u_lattice = Lattice::standard(h);
    xi_lattice = Lattice::diagonal(back);
  }
  r.ess_eta_t = essential_exponents(r.eta_t, first_axis_lattice(h, r.n1), ord);
  r.ess_xi_u = essential_exponents(r.xi_u, first_axis_lattice(h, r.m1), ord, xi_u_lattice);
  r.ess_eta = essential_exponents(r.eta, Lattice::standard(h), ord);
  r.ess_xi = essential_exponents(r.xi, Lattice::standard(h), ord, xi_lattice);
  r.checks = verify_halphen_stolz(r);
  return r;
}

CheckReport verify_halphen_stolz(const InversionResult& r) {
  CheckReport rep;
  rep.name = "Halphen-Stolz";
  const std::size_t h = r.eta.num_vars();
  const Rational m(r.m1), n(r.n1);
  const ExponentVec nu1 = ExponentVec::unit(h, 0);
  rep.provisional = !(r.ess_eta_t.certified() && r.ess_xi_u.certified() && r.ess_eta.certified() &&
                      r.ess_xi.certified());
  if (rep.provisional) rep.notes.push_back("some essential sequence is not certified");
  const bool root_one = r.root_coeff == Rational(1);

  // Mismatches at entries that truncation could still change are notes, not failures.
  auto judge = [&](bool certified, const std::string& check, const ExponentVec& e, const Rational& lhs,
                   const Rational& rhs) {
    if (certified) {
      rep.expect_equal(check, e, lhs, rhs);
    } else if (lhs != rhs) {
      rep.notes.push_back("uncertified entry " + e.str() + ": " + check + " gives " + lhs.str() + " vs " + rhs.str());
    }
  };
  auto judge_vec = [&](bool certified, const std::string& check, const ExponentVec& e, const ExponentVec& lhs,
                       const ExponentVec& rhs) {
    if (lhs == rhs) return true;
    if (certified)
      rep.fail(check, e, vec_note(lhs, rhs));
    else
      rep.notes.push_back("uncertified entry " + e.str() + ": " + check + " gives " + vec_note(lhs, rhs));
    return false;
  };
  auto lengths = [&](const std::string& check, const EssentialSequence& a, const EssentialSequence& b) {
    if (a.length() == b.length()) return;
    if (a.certified() && b.certified())
      rep.fail(check, nu1, std::to_string(b.length()) + " vs " + std::to_string(a.length()) + " entries");
    else
      rep.notes.push_back(check + ": lengths differ on uncertified data");
  };
  auto known = [](const PuiseuxSeries& s, const ExponentVec& e) { return s.known_at(e); };

  // t/u coordinates, lattices n1 Z nu1 + Z nu2 + ... and m1 Z nu1 + Z nu2 + ...
  {
    const auto& E = r.ess_eta_t.entries;
    const auto& F = r.ess_xi_u.entries;
    lengths("t/u: d' = d", r.ess_eta_t, r.ess_xi_u);
    rep.expect_equal("t/u: [xi]_(n1 nu1) = root^-n1", n * nu1, r.xi_u.coefficient(n * nu1),
                     pow(r.root_coeff, -r.n1));
    std::size_t both = std::min(r.ess_eta_t.certified_prefix, r.ess_xi_u.certified_prefix);
    for (std::size_t k = 1; k < std::min(E.size(), F.size()); ++k) {
      bool cert = k < both;
      if (!judge_vec(cert, "t/u: eps'_k + m1 nu1 = eps_k + n1 nu1", E[k], F[k] + m * nu1, E[k] + n * nu1)) continue;
      if (!known(r.eta_t, E[k]) || !known(r.xi_u, F[k])) continue;
      Rational ce = r.eta_t.coefficient(E[k]), cx = r.xi_u.coefficient(F[k]);
      Rational expo = -n - E[k][0];
      judge(cert, "t/u: [xi]_eps' = -(n1/m1) root^(-n1-eps_k1) [eta]_eps", F[k], cx,
            -(n / m) * pow(r.root_coeff, expo.to_long()) * ce);
      if (root_one) judge(cert, "t/u: m1 [xi]_eps' + n1 [eta]_eps = 0", F[k], m * cx + n * ce, Rational(0));
    }
  }

  // x/y coordinates, both relative to Z^h. The first coordinates satisfy
  // m1 (1 + e'_k1) = n1 (1 + e_k1); the remaining coordinates coincide.
  {
    const auto& E = r.ess_eta.entries;
    const auto& F = r.ess_xi.entries;
    lengths("x/y: d' = d", r.ess_eta, r.ess_xi);
    ExponentVec lead = (n / m) * nu1;
    rep.expect_equal("x/y: [xi]_(n1/m1) = root^-n1", lead, r.xi.coefficient(lead), pow(r.root_coeff, -r.n1));
    if (auto o = r.xi.min_term(AdditiveOrder::lex(h)); !o || o->exp != lead)
      rep.fail("x/y: ord_1 xi = n1/m1", lead, "dominating exponent differs");
    std::size_t both = std::min(r.ess_eta.certified_prefix, r.ess_xi.certified_prefix);
    for (std::size_t k = 0; k < std::min(E.size(), F.size()); ++k) {
      bool cert = k < both;
      ExponentVec lhs = F[k], rhs = E[k];
      lhs[0] = m * (Rational(1) + F[k][0]);
      rhs[0] = n * (Rational(1) + E[k][0]);
      if (!judge_vec(cert, "x/y: m1 (1 + e'_k1) = n1 (1 + e_k1), e'_ki = e_ki", E[k], lhs, rhs)) continue;
      if (k == 0 || !known(r.eta, E[k]) || !known(r.xi, F[k])) continue;
      Rational ce = r.eta.coefficient(E[k]), cx = r.xi.coefficient(F[k]);
      Rational expo = -(Rational(1) + E[k][0]) * n;
      judge(cert, "x/y: [xi]_e' = -(n1/m1) root^(-(1+e_k1) n1) [eta]_e", F[k], cx,
            -(n / m) * pow(r.root_coeff, expo.to_long()) * ce);
      if (root_one) judge(cert, "x/y: m1 [xi]_e' + n1 [eta]_e = 0", F[k], m * cx + n * ce, Rational(0));
    }
  }
  return rep;
}

namespace {

// (n1/q) root^-q [ (1 + g)^(-q/m1) ]_{t1^(q-n1)}, g = eta_t / (a t1^m1) - 1, as a series
// whose terms all have first coordinate q.
PuiseuxSeries lagrange_terms(const BranchData& data, long q, std::optional<Rational> cap) {
  const std::size_t h = data.eta.num_vars();
  const long n1 = data.n[0];
  if (q < n1) throw PreconditionError("Lagrange coefficient needs q >= n1");
  const Rational a = pow(data.root_coeff, data.m1);
  ExponentVec lead = Rational(data.m1) * ExponentVec::unit(h, 0);
  PuiseuxSeries one = PuiseuxSeries::constant(h, Rational(1));
  PuiseuxSeries g = (Rational(1) / a) * shift(data.eta_t, -lead) - one;
  const long level = q - n1;
  auto P = g.precision();
  if (cap && (!P || *cap < *P)) P = *cap;
  g = g.truncate(P);
  if (!P)
    for (const auto& t : g.terms())
      if (t.exp[0].is_zero())
        throw PrecisionError("exact unit part with terms free of t1 gives an infinite slice; pass a cap");
  if (P && *P < Rational(level))
    throw PrecisionError("eta is too short for the coefficient at q = " + std::to_string(q));
  const Rational r(-q, data.m1);
  PuiseuxSeries sum = one.truncate(P);
  PuiseuxSeries gi = one;
  for (unsigned long i = 1; !gi.is_zero() && !g.is_zero(); ++i) {
    gi = (gi * g).truncate(P);
    std::vector<Term> keep;  // only the t1-degree <= level part matters
    for (auto& t : gi.terms())
      if (t.exp[0] <= Rational(level)) keep.push_back(std::move(t));
    gi = PuiseuxSeries::from_terms(h, keep, gi.precision());
    sum = sum + rational_binomial(r, i) * gi;
  }
  std::vector<Term> slice;
  const Rational factor = Rational(n1, q) * pow(data.root_coeff, -q);
  for (auto& t : sum.terms()) {
    if (t.exp[0] != Rational(level)) continue;
    t.exp[0] = Rational(q);
    slice.push_back({t.exp, factor * t.coef});
  }
  std::optional<Rational> out;
  if (P) out = *P + Rational(n1);
  return PuiseuxSeries::from_terms(h, slice, out);
}

}  // namespace

Rational lagrange_coefficient(const BranchData& data, long q) {
  if (data.eta.num_vars() != 1) throw DimensionMismatch("lagrange_coefficient is univariate; use lagrange_slice");
  return lagrange_terms(data, q, std::nullopt).coefficient(ExponentVec{Rational(q)});
}

PuiseuxSeries lagrange_slice(const BranchData& data, long q, std::optional<Rational> cap) {
  return lagrange_terms(data, q, cap);
}

PuiseuxSeries compose_univariate(const PuiseuxSeries& X, const PuiseuxSeries& Y) {
  if (X.num_vars() != 1 || Y.num_vars() != 1) throw DimensionMismatch("univariate composition");
  auto oy = Y.order();
  if (!oy || *oy < Rational(1)) throw PreconditionError("inner series must have order >= 1");
  std::optional<Rational> T = X.precision();
  if (Y.precision()) T = T ? std::min(*T, *Y.precision()) : *Y.precision();
  PuiseuxSeries acc = PuiseuxSeries(1).truncate(T);
  PuiseuxSeries yk = PuiseuxSeries::constant(1, Rational(1));
  long k = 0;
  for (const auto& t : X.terms()) {
    if (!t.exp[0].is_integer() || t.exp[0].sign() <= 0)
      throw PreconditionError("outer series needs positive integer exponents");
    long e = t.exp[0].to_long();
    while (k < e) {
      yk = (yk * Y).truncate(T);
      ++k;
    }
    acc = acc + t.coef * yk;
  }
  return acc.truncate(T);
}

CheckReport lagrange_pair_check(const PuiseuxSeries& X, const PuiseuxSeries& Y, long p, long q) {
  CheckReport rep;
  rep.name = "Lagrange p=" + std::to_string(p) + " q=" + std::to_string(q);
  PuiseuxSeries id = compose_univariate(X, Y);
  PuiseuxSeries t = PuiseuxSeries::monomial(ExponentVec{Rational(1)});
  if (!id.agrees_with(t)) throw PreconditionError("X and Y are not reciprocal within precision");
  // A cap below the order of a positive power would only blur the precision.
  auto power = [](const PuiseuxSeries& s, long N, long at) {
    Rational cap(at);
    if (N > 0) cap = std::max(cap, Rational(N) * *s.order());
    return pow_int(s, N, cap);
  };
  PuiseuxSeries Xq = power(X, q, p), Ymp = power(Y, -p, -q);
  ExponentVec ep{Rational(p)}, eq{Rational(-q)};
  if (!Xq.known_at(ep) || !Ymp.known_at(eq)) throw PrecisionError("insufficient precision for " + rep.name);
  rep.expect_equal("p [X^q]_p = q [Y^-p]_-q", ep, Rational(p) * Xq.coefficient(ep), Rational(q) * Ymp.coefficient(eq));
  return rep;
}

}  // namespace npinv
