#include <doctest.h>

#include "generators.hpp"
#include "npinv/error.hpp"
#include "npinv/lattice.hpp"
#include "npinv/order.hpp"
#include "oracles.hpp"

using namespace npinv;

namespace {

ExponentVec v2(Rational a, Rational b) { return ExponentVec{a, b}; }

ExponentVec random_vec(std::size_t h, long num, long den) {
  ExponentVec e = ExponentVec::zero(h);
  for (std::size_t i = 0; i < h; ++i) e[i] = Rational(gen::uniform(-num, num), gen::uniform(1, den));
  return e;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
  }

  TEST_CASE("rational binomial examples") {
    CHECK(rational_binomial(Rational(-4, 6), 0) == Rational(1));
    CHECK(rational_binomial(Rational(1, 6), 2) == Rational(-5, 72));
    CHECK(rational_binomial(Rational(-5, 6), 1) == Rational(-5, 6));
    CHECK(rational_binomial(Rational(5), 2) == Rational(10));
    CHECK(rational_binomial(Rational(3), 5) == Rational(0));
  }

  TEST_CASE("rational binomial satisfies Pascal's rule") {
    for (int trial = 0; trial < 100; ++trial) {
      Rational r(gen::uniform(-20, 20), gen::uniform(1, 9));
      unsigned long k = static_cast<unsigned long>(gen::uniform(1, 10));
      CHECK(rational_binomial(r, k) == rational_binomial(r - Rational(1), k) + rational_binomial(r - Rational(1), k - 1));
    }
  }

  TEST_CASE("exact roots and powers") {
    CHECK(exact_root(Rational(64, 729), 6) == Rational(2, 3));
    CHECK(exact_root(Rational(-8), 3) == Rational(-2));
    CHECK_FALSE(exact_root(Rational(2), 2).has_value());
    CHECK_FALSE(exact_root(Rational(-4), 2).has_value());
    CHECK(exact_power(Rational(4), Rational(-3, 2)) == Rational(1, 8));
    CHECK_FALSE(exact_power(Rational(2), Rational(1, 2)).has_value());
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  }

  TEST_CASE("lattice membership examples") {
    CHECK(Lattice::standard(2).contains(v2(3, -7)));
    auto six = Lattice::multiples(Rational(6));
    CHECK_FALSE(six.contains(ExponentVec{Rational(15)}));
    CHECK(six.contains(ExponentVec{Rational(12)}));
    Lattice m(2, {v2(1, 0), v2(0, 1), v2(Rational(3, 2), Rational(3, 2))});
    CHECK(m.contains(v2(Rational(1, 2), Rational(1, 2))));
    CHECK_FALSE(m.contains(v2(Rational(1, 2), 0)));
    CHECK_THROWS_AS(m.contains(ExponentVec{Rational(1)}), DimensionMismatch);
  }

  TEST_CASE("lattice join examples") {
    auto three = lattice_join(Lattice::multiples(Rational(6)), {ExponentVec{Rational(15)}});
    CHECK(three.contains(ExponentVec{Rational(3)}));
    CHECK_FALSE(three.contains(ExponentVec{Rational(1)}));
    CHECK(three == Lattice::multiples(Rational(3)));
    CHECK(lattice_join(three, {ExponentVec{Rational(16)}}).contains(ExponentVec{Rational(1)}));
    CHECK(lattice_join(Lattice::standard(2), {}) == Lattice::standard(2));
  }

  TEST_CASE("lattice membership agrees with the minor-gcd oracle") {
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t h = static_cast<std::size_t>(gen::uniform(1, 3));
      std::vector<ExponentVec> gens;
      std::vector<oracle::Vec> ogens;
      for (long i = 0, k = gen::uniform(1, 4); i < k; ++i) {
        gens.push_back(random_vec(h, 6, 4));
        ogens.push_back(gens.back().coords());
      }
      Lattice L(h, gens);
      for (int j = 0; j < 5; ++j) {
        ExponentVec v = random_vec(h, 6, 4);
        CHECK(L.contains(v) == oracle::lattice_contains(ogens, v.coords()));
      }
      // an integer combination is always inside
      ExponentVec comb = ExponentVec::zero(h);
      for (const auto& g : gens) comb += Rational(gen::uniform(-3, 3)) * g;
      CHECK(L.contains(comb));
    }
  }

  TEST_CASE("lattice join is canonical, idempotent and contains what was joined") {
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t h = static_cast<std::size_t>(gen::uniform(1, 3));
      std::vector<ExponentVec> gens;
      for (long i = 0, k = gen::uniform(1, 4); i < k; ++i) gens.push_back(random_vec(h, 5, 4));
      Lattice M(h, gens);
      ExponentVec v = random_vec(h, 5, 6);
      Lattice J = lattice_join(M, {v});
      CHECK(lattice_contains(J, v));
      CHECK(lattice_join(J, {v}) == J);
      std::vector<ExponentVec> rev(gens.rbegin(), gens.rend());
      CHECK(Lattice(h, rev) == M);
      CHECK(J.contains(M));
    }
  }

  TEST_CASE("order examples") {
    auto lex = AdditiveOrder::lex(2);
    CHECK(order_compare(lex, v2(0, Rational(1, 4)), v2(Rational(3, 2), Rational(3, 2))) < 0);
    CHECK(order_compare(lex, v2(1, 2), v2(1, 2)) == 0);
    auto w = AdditiveOrder::from_matrix(Matrix{{1, 1}, {1, 0}});
    CHECK(w.less(v2(1, 2), v2(2, 1)));
    CHECK(order_compose(lex, Matrix::identity(2)) == lex);
    Matrix q{{1, 0}, {1, 1}};
    CHECK(order_compose(lex, q).compare(v2(Rational(3, 2), 0), v2(0, Rational(1, 4))) > 0);
    Matrix flat{{1, 1}, {1, 1}};
    CHECK_THROWS_AS(order_compose(lex, flat), PreconditionError);
    CHECK_THROWS_AS(AdditiveOrder::weight_lex({Rational(1), Rational(0)}), PreconditionError);
  }

  TEST_CASE("orders are total and additive") {
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t h = static_cast<std::size_t>(gen::uniform(1, 3));
      std::vector<Rational> w;
      for (std::size_t i = 0; i < h; ++i) w.emplace_back(gen::uniform(1, 5), gen::uniform(1, 3));
      for (const auto& ord : {AdditiveOrder::lex(h), AdditiveOrder::weight_lex(w), AdditiveOrder::graded(h)}) {
        auto a = random_vec(h, 24, 24), b = random_vec(h, 24, 24), c = random_vec(h, 24, 24);
        auto ab = ord.compare(a, b);
        CHECK((ab < 0) == (ord.compare(b, a) > 0));
        CHECK((ab == 0) == (a == b));
        if (ab < 0) CHECK(ord.less(a + c, b + c));
        if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
      }
    }
  }

  TEST_CASE("composing with q and then q inverse restores comparisons") {
    for (int trial = 0; trial < 100; ++trial) {
      Matrix q = gen::random_nonneg_invertible(2);
      auto lex = AdditiveOrder::lex(2);
      auto back = order_compose(order_compose(lex, q), q.inverse());
      auto a = random_vec(2, 10, 6), b = random_vec(2, 10, 6);
      CHECK(back.compare(a, b) == lex.compare(a, b));
      CHECK(order_compose(lex, q).compare(a, b) == lex.compare(q * a, q * b));
    }
  }

  TEST_CASE("accepted orders have a unique minimum on finite sets of the orthant") {
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t h = static_cast<std::size_t>(gen::uniform(1, 3));
      std::vector<Rational> w;
      for (std::size_t i = 0; i < h; ++i) w.emplace_back(gen::uniform(1, 4));
      auto exps = gen::random_exponents(h, 8, 6, static_cast<long>(gen::uniform(1, 4)));
      for (const auto& ord : {AdditiveOrder::lex(h), AdditiveOrder::weight_lex(w)}) {
        CHECK(ord.accepted());
        std::size_t minima = 0;
        for (const auto& a : exps) {
          bool is_min = true;
          for (const auto& b : exps) is_min = is_min && !ord.less(b, a);
          minima += is_min;
        }
        CHECK(minima == 1);
      }
    }
  }

  TEST_CASE("matrix basics") {
    Matrix q{{1, 0}, {1, 1}};
    CHECK(q.is_unimodular());
    CHECK(q.is_nonneg());
    CHECK(q * q.inverse() == Matrix::identity(2));
    CHECK(q.transpose() == Matrix{{1, 1}, {0, 1}});
    CHECK((q * v2(Rational(3, 2), Rational(5, 2))) == v2(Rational(3, 2), 4));
    CHECK(Matrix{{2, 0}, {0, 1}}.determinant() == Rational(2));
    Matrix singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(singular.inverse(), PreconditionError);
  }
}
