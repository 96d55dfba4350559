#include <doctest.h>

#include "generators.hpp"
#include "lemmas.hpp"
#include "npinv/error.hpp"
#include "npinv/inversion.hpp"
#include "oracles.hpp"

using namespace npinv;

namespace {

PuiseuxSeries exact(std::string_view text, std::size_t h = 1) {
  ParseOptions o;
  o.num_vars = h;
  o.default_precision = std::nullopt;
  return parse_series(text, o);
}

ExponentVec at1(const Rational& r) { return ExponentVec{r}; }

// Reference xi(u) for h = 1: unit = root (eta_t / (a t^m))^(1/m), t = u psi(u)
// by iterated substitution, xi_u = t^n. Returns [xi_u]_(n + k) for k <= K.
oracle::Dense reference_xi_u(const BranchData& b, std::size_t K) {
  oracle::Dense g = oracle::dense(K);
  for (const auto& t : b.eta_t.terms()) {
    long k = t.exp[0].to_long() - b.m1;
    if (k >= 0 && static_cast<std::size_t>(k) <= K) g[static_cast<std::size_t>(k)] = t.coef;
  }
  oracle::Dense unit = oracle::dbinomial_power(g, Rational(1, b.m1), K);
  for (auto& c : unit) c *= b.root_coeff;
  oracle::Dense psi = oracle::dreversion_dual(unit, K);
  oracle::Dense acc = oracle::dense(K);
  acc[0] = 1;
  for (long i = 0; i < b.n[0]; ++i) acc = oracle::dmul(acc, psi, K);
  return acc;
}

long b_m1_margin(const gen::RandomBranch& rb) {
  auto b = extract_branch(rb.eta, std::nullopt, Rational(1));
  return b.m1 * (b.m1 + 2);
}

// (4/p) binom(-p/6, p-4) c^(p-4), the closed form for x^(3/2) + c x^(7/4)
Rational closed_form(long p, const Rational& c) {
  return Rational(4, p) * rational_binomial(Rational(-p, 6), static_cast<unsigned long>(p - 4)) * pow(c, p - 4);
}

}  // namespace

TEST_SUITE("inversion") {
  TEST_CASE("branch extraction") {
    auto b = extract_branch(exact("x^(3/2) + 2*x^(7/4)"), std::nullopt, Rational(6));
    CHECK(b.n == std::vector<std::int64_t>{4});
    CHECK(b.m1 == 6);
    CHECK(b.root_coeff == Rational(1));
    CHECK(b.eta_t == exact("t^6 + 2*t^7"));
    CHECK(b.unit.precision() == Rational(6));
    CHECK(pow_int(b.unit, 6).agrees_with(exact("1 + 2*t")));

    auto neg = extract_branch(exact("4*x^2"), Rational(-2));
    CHECK(neg.root_coeff == Rational(-2));
    CHECK(neg.unit == exact("-2"));
    CHECK(extract_branch(exact("4*x^2")).root_coeff == Rational(2));

    CHECK_THROWS_AS(extract_branch(exact("0")), PreconditionError);
    CHECK_THROWS_AS(extract_branch(exact("2*x^2")), PreconditionError);
    CHECK_THROWS_AS(extract_branch(exact("4*x^2"), Rational(3)), PreconditionError);
    CHECK_THROWS_AS(extract_branch(exact("x1^(3/2) + x2", 2)), PreconditionError);
    CHECK_THROWS_AS(extract_branch(exact("x1^(3/2) + x1*x2", 2)), PreconditionError);
    CHECK_THROWS_AS(extract_branch(exact("1 + x")), PreconditionError);
  }

  TEST_CASE("closed form for x^(3/2) + c x^(7/4)") {
    for (const Rational& c : {Rational(1), Rational(-1, 2), Rational(5)}) {
      auto b = extract_branch(exact("x^(3/2) + (" + c.str() + ")*x^(7/4)"), std::nullopt, Rational(14));
      InversionOptions io;
      io.target_precision = Rational(18);
      auto r = invert_branch(b, io);
      CHECK(r.m1 == 6);
      CHECK(r.n1 == 4);
      for (long p = 4; p <= 18; ++p) CHECK(r.xi.coefficient(at1(Rational(p, 6))) == closed_form(p, c));
      CHECK(r.xi.coefficient(at1(Rational(2, 3))) == Rational(1));
      CHECK(r.xi.coefficient(at1(Rational(5, 6))) == Rational(-2, 3) * c);
      CHECK(r.checks.all_passed());
    }
  }

  TEST_CASE("target precision") {
    auto b = extract_branch(parse_series("x^(3/2) + 2*x^(7/4) + O(total=3)", 1));
    InversionOptions io;
    io.target_precision = Rational(40);
    CHECK_THROWS_AS(invert_branch(b, io), PreconditionError);
    auto exact_unit = extract_branch(exact("x^2"));
    CHECK_THROWS_AS(invert_branch(exact_unit), PrecisionError);
  }

  TEST_CASE("univariate inversion agrees with iterated substitution") {
    for (int trial = 0; trial < 40; ++trial) {
      auto rb = gen::random_branch(1, 5, 5, 4);
      const std::size_t K = 7;
      auto b = extract_branch(rb.eta, std::nullopt, Rational(static_cast<long>(K)));
      InversionOptions io;
      io.target_precision = Rational(b.n[0] + static_cast<long>(K));
      auto r = invert_branch(b, io);
      auto want = reference_xi_u(b, K);
      for (std::size_t k = 0; k <= K; ++k) {
        ExponentVec e = at1(Rational(b.n[0] + static_cast<long>(k)));
        CHECK(r.xi_u.coefficient(e) == want[k]);
        CHECK(r.xi.coefficient(at1(e[0] / Rational(b.m1))) == want[k]);
      }
      CHECK(r.checks.all_passed());
    }
  }

  TEST_CASE("inverting twice returns eta") {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t h = static_cast<std::size_t>(gen::uniform(1, 2));
      auto rb = gen::random_branch(h, 3, 3, 3);
      // Going to y and back to t divides a total-degree bound by m1 twice.
      const long P = h == 1 ? 5 : b_m1_margin(rb);
      auto b = extract_branch(rb.eta, std::nullopt, Rational(P));
      InversionOptions io;
      io.target_precision = Rational(b.n[0] + P);
      if (h > 1) io.order = AdditiveOrder::graded(h);
      auto r = invert_branch(b, io);
      InversionOptions again;
      again.order = io.order;
      auto back = invert_branch(extract_branch(r.xi), again);
      CHECK(back.xi.agrees_with(rb.eta));
      CHECK_MESSAGE(back.xi.precision() > *rb.eta.order(), back.xi.str(), " from ", rb.eta.str());
      CHECK(r.checks.all_passed());
    }
  }

  TEST_CASE("Lagrange coefficients") {
    auto b = extract_branch(exact("x^(3/2) + 2*x^(7/4)"), std::nullopt, Rational(12));
    CHECK(lagrange_coefficient(b, 4) == Rational(1));
    for (long q = 5; q <= 14; ++q) CHECK(lagrange_coefficient(b, q) == closed_form(q, Rational(2)));
    CHECK_THROWS_AS(lagrange_coefficient(b, 3), PreconditionError);

    auto b2 = extract_branch(exact("9*x^2 + x^3"), Rational(-3), Rational(4));
    CHECK(lagrange_coefficient(b2, 1) == Rational(-1, 3));
    auto t = extract_branch(parse_series("x^(3/2) + x^2 + O(total=3)", 1));
    CHECK_THROWS_AS(lagrange_coefficient(t, 8), PrecisionError);

    for (int trial = 0; trial < 30; ++trial) {
      auto rb = gen::random_branch(1, 5, 5, 4);
      auto bb = extract_branch(rb.eta, std::nullopt, Rational(6));
      InversionOptions io;
      io.target_precision = Rational(bb.n[0] + 6);
      auto r = invert_branch(bb, io);
      CHECK(lagrange_coefficient(bb, bb.n[0]) == pow(bb.root_coeff, -bb.n[0]));
      for (long q = bb.n[0]; q <= bb.n[0] + 6; ++q)
        CHECK(lagrange_coefficient(bb, q) == r.xi_u.coefficient(at1(Rational(q))));
    }
  }

  TEST_CASE("Lagrange slices agree with the inversion") {
    auto b = extract_branch(exact("x1^(3/2) + x1^(3/2)*x2", 2), std::nullopt, Rational(6));
    CHECK_THROWS_AS(lagrange_slice(b, 2), PrecisionError);
    auto s = lagrange_slice(b, 2, Rational(3));
    CHECK(s == parse_series("t1^2 - 2/3*t1^2*t2 + 5/9*t1^2*t2^2 - 40/81*t1^2*t2^3 + O(total=5)", 2));

    for (int trial = 0; trial < 15; ++trial) {
      std::size_t h = static_cast<std::size_t>(gen::uniform(2, 3));
      auto rb = gen::random_branch(h, 2, 3, 3);
      const Rational P(5);
      auto bb = extract_branch(rb.eta, std::nullopt, P);
      InversionOptions io;
      io.target_precision = P + Rational(bb.n[0]);
      io.order = AdditiveOrder::graded(h);
      auto r = invert_branch(bb, io);
      for (long q = bb.n[0]; q <= bb.n[0] + 3; ++q) {
        auto slice = lagrange_slice(bb, q, P);
        std::vector<Term> mine;
        for (auto& t : r.xi_u.terms())
          if (t.exp[0] == Rational(q)) mine.push_back(std::move(t));
        CHECK(slice.agrees_with(PuiseuxSeries::from_terms(h, mine, r.xi_u.precision())));
        CHECK(slice.precision() == r.xi_u.precision());
      }
    }
  }

  TEST_CASE("reciprocal pairs") {
    PuiseuxSeries t = exact("t");
    auto same = lagrange_pair_check(t.truncate(Rational(8)), t.truncate(Rational(8)), 3, 2);
    CHECK(same.all_passed());

    // Y = t + t^2 and its reversion X = sum (-1)^(k-1) Catalan(k-1) u^k
    auto Y = parse_series("t + t^2 + O(total=9)", 1);
    auto X = parse_series("u - u^2 + 2*u^3 - 5*u^4 + 14*u^5 - 42*u^6 + 132*u^7 - 429*u^8 + 1430*u^9 + O(total=9)", 1);
    CHECK(compose_univariate(X, Y).agrees_with(t));
    CHECK(compose_univariate(Y, X).agrees_with(t));
    for (long p = -4; p <= 4; ++p)
      for (long q = -4; q <= 4; ++q) {
        if (p == 0 || q == 0) continue;
        auto rep = lagrange_pair_check(X, Y, p, q);
        CHECK_MESSAGE(rep.all_passed(), "p=", p, " q=", q);
      }
    CHECK_THROWS_AS(lagrange_pair_check(X, exact("t + 2*t^2").truncate(Rational(9)), 2, 2), PreconditionError);
    CHECK_THROWS_AS(compose_univariate(X, exact("1 + t")), PreconditionError);
    CHECK_THROWS_AS(compose_univariate(exact("t^(1/2)"), Y), PreconditionError);
  }

  TEST_CASE("reciprocal pairs from random duals") {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Term> terms{{at1(Rational(1)), Rational(1)}};
      for (long k = 2; k <= 4; ++k)
        if (gen::uniform(0, 1)) terms.push_back({at1(Rational(k)), gen::small_coef()});
      auto Y = PuiseuxSeries::from_terms(1, terms, Rational(10));
      oracle::Dense phi = oracle::dense(9);
      for (const auto& t : Y.terms()) phi[static_cast<std::size_t>(t.exp[0].to_long()) - 1] = t.coef;
      auto psi = oracle::dreversion_dual(phi, 9);
      std::vector<Term> xt;
      for (std::size_t k = 0; k <= 9; ++k)
        if (!psi[k].is_zero()) xt.push_back({at1(Rational(static_cast<long>(k) + 1)), psi[k]});
      auto X = PuiseuxSeries::from_terms(1, xt, Rational(10));
      for (long p = -4; p <= 4; ++p)
        for (long q = -4; q <= 4; ++q)
          if (p != 0 && q != 0) CHECK(lagrange_pair_check(X, Y, p, q).all_passed());
    }
  }

  TEST_CASE("divpower lemma") {
    for (int i = 0; i < 60; ++i) {
      auto msg = lemmas::divpower(i < 30 ? 1 : static_cast<std::size_t>(gen::uniform(2, 3)));
      CHECK_MESSAGE(msg.empty(), msg);
    }
  }
}
