#include <doctest.h>

#include "generators.hpp"
#include "lemmas.hpp"
#include "npinv/error.hpp"
#include "npinv/exponents.hpp"
#include "oracles.hpp"

using namespace npinv;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<oracle::Vec> raw(const std::vector<ExponentVec>& v) {
  std::vector<oracle::Vec> out;
  for (const auto& e : v) out.push_back(e.coords());
  return out;
}

std::vector<oracle::Vec> rows_of(const Matrix& m) {
  std::vector<oracle::Vec> out;
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back(m.row(i));
  return out;
}

PuiseuxSeries exact(std::string_view text, std::size_t h = 1) {
  ParseOptions o;
  o.num_vars = h;
  o.default_precision = std::nullopt;
  return parse_series(text, o);
}

}  // namespace

TEST_SUITE("exponents") {
  TEST_CASE("irreducible exponents examples") {
    CHECK(irreducible_exponents(ints({6, 15, 16, 21, 23})) == ints({6, 15, 16, 23}));
    CHECK(irreducible_exponents(ints({5})) == ints({5}));
    CHECK_THROWS_AS(irreducible_exponents(std::vector<Rational>{Rational(-1)}), PreconditionError);
  }

  TEST_CASE("irreducible exponents agree with the partition oracle") {
    for (int trial = 0; trial < 100; ++trial) {
      auto S = lemmas::random_integral_set(8, 40);
      auto got = as_vectors(irreducible_exponents(S));
      auto want = oracle::irreducible(raw(as_vectors(S)));
      std::vector<oracle::Vec> g = raw(got);
      std::sort(g.begin(), g.end());
      std::sort(want.begin(), want.end());
      CHECK(g == want);
    }
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t h = static_cast<std::size_t>(gen::uniform(2, 3));
      auto S = gen::random_exponents(h, 7, 4, 2);
      auto g = raw(irreducible_exponents(S));
      auto want = oracle::irreducible(raw(S));
      std::sort(g.begin(), g.end());
      std::sort(want.begin(), want.end());
      CHECK(g == want);
    }
  }

  TEST_CASE("Irr of a truncated support is Irr of the full set below the cut") {
    for (int trial = 0; trial < 50; ++trial) {
      auto S = lemmas::random_integral_set(8, 40);
      Rational T(gen::uniform(10, 40));
      std::vector<Rational> cut, full_cut;
      for (const auto& s : S)
        if (s <= T) cut.push_back(s);
      for (const auto& r : irreducible_exponents(S))
        if (r <= T) full_cut.push_back(r);
      CHECK(irreducible_exponents(cut) == full_cut);
    }
  }

  TEST_CASE("essential sequences relative to p, twelve worked cases") {
    auto E = ints({6, 15, 16, 21, 23});
    for (long p : {1, 5, 7, 11}) CHECK(first_coords(essential_exponents_p(E, Rational(p)).entries) == ints({6}));
    for (long p : {2, 4, 8, 10}) CHECK(first_coords(essential_exponents_p(E, Rational(p)).entries) == ints({6, 15}));
    for (long p : {3, 9}) CHECK(first_coords(essential_exponents_p(E, Rational(p)).entries) == ints({6, 16}));
    for (long p : {6, 12}) CHECK(first_coords(essential_exponents_p(E, Rational(p)).entries) == ints({6, 15, 16}));
    std::vector<Rational> S{Rational(1), Rational(5, 2), Rational(8, 3), Rational(7, 2), Rational(23, 6)};
    auto e = essential_exponents_p(S, Rational(1));
    CHECK(first_coords(e.entries) == std::vector<Rational>{Rational(1), Rational(5, 2), Rational(8, 3)});
    CHECK(e.complete);
    CHECK_THROWS_AS(essential_exponents_p({}, Rational(1)), PreconditionError);
    CHECK_THROWS_AS(essential_exponents_p(S, Rational(0)), PreconditionError);
  }

  TEST_CASE("multivariate essential sequences") {
    auto sigma = exact("x1^(3/2)*x2^(3/2) + x2^(1/4) + x1^(7/2)*x2^6", 2);
    auto e = essential_exponents(sigma, Lattice::standard(2), AdditiveOrder::lex(2));
    CHECK(e.entries == std::vector<ExponentVec>{{Rational(0), Rational(1, 4)}, {Rational(3, 2), Rational(3, 2)}});
    CHECK(e.complete);
    auto psi = exact("x1^(3/2) + x2^(1/4) + x1^(7/2)*x2^(5/2)", 2);
    auto ord = order_compose(AdditiveOrder::lex(2), Matrix{{1, 0}, {1, 1}});
    CHECK(essential_exponents(psi, Lattice::standard(2), ord).entries ==
          std::vector<ExponentVec>{{Rational(0), Rational(1, 4)}, {Rational(3, 2), Rational(0)}});
    auto integral = essential_exponents(exact("x1^2 + x1*x2 + x2^3", 2), Lattice::standard(2), AdditiveOrder::lex(2));
    CHECK(integral.entries == std::vector<ExponentVec>{{Rational(0), Rational(3)}});
    CHECK(integral.complete);
    CHECK_THROWS_AS(essential_exponents(std::vector<ExponentVec>{}, Lattice::standard(2), AdditiveOrder::lex(2)),
                    PreconditionError);
    CHECK_THROWS_AS(essential_exponents(sigma, Lattice::standard(2), AdditiveOrder::from_matrix(Matrix{{1, -1}, {0, 1}})),
                    PreconditionError);
  }

  TEST_CASE("essential sequences agree with the definition oracle") {
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t h = static_cast<std::size_t>(gen::uniform(1, 3));
      auto S = gen::random_exponents(h, static_cast<std::size_t>(gen::uniform(1, 7)), 8, 4);
      Lattice M = gen::uniform(0, 1) ? Lattice::standard(h) : lemmas::random_lattice(h);
      AdditiveOrder ord = gen::uniform(0, 1) ? AdditiveOrder::lex(h) : lemmas::random_weight_order(h);
      auto got = essential_exponents(S, M, ord);
      CHECK(raw(got.entries) == oracle::essential(raw(S), raw(M.basis()), rows_of(ord.matrix())));
      CHECK(got.complete);
    }
  }

  TEST_CASE("completeness certificates on truncated supports") {
    auto full = essential_exponents(parse_series("x^(3/2) + x^(7/4) + O(total=4)", 1), Lattice::standard(1),
                                    AdditiveOrder::lex(1));
    CHECK(full.complete);
    CHECK(full.certified());
    auto partial = essential_exponents_p({Rational(3, 2)}, Rational(1), 4);
    CHECK_FALSE(partial.complete);
    // total-degree truncation says nothing about what lex puts first when h > 1
    auto lex2 = essential_exponents(parse_series("x1^(3/2) + O(total=4)", 2), Lattice::standard(2),
                                    AdditiveOrder::lex(2));
    CHECK_FALSE(lex2.truncation_safe);
    CHECK(lex2.certified_prefix == 0);
    auto graded = essential_exponents(parse_series("x1^(3/2) + O(total=4)", 2), Lattice::standard(2),
                                      AdditiveOrder::graded(2));
    CHECK(graded.truncation_safe);
    CHECK(graded.certified_prefix == 1);
  }

  TEST_CASE("characteristic exponents") {
    CHECK(characteristic_exponents(exact("x^(5/2) + x^(8/3)")).entries ==
          std::vector<Rational>{Rational(5, 2), Rational(8, 3)});
    CHECK(characteristic_exponents(exact("2*x - x^(5/2) + x^(8/3) - 3*x^(7/2) + x^(23/6)")).entries ==
          std::vector<Rational>{Rational(5, 2), Rational(8, 3)});
    CHECK(characteristic_exponents(exact("x^2")).entries.empty());
    CHECK_THROWS_AS(characteristic_exponents(exact("1 + x")), PreconditionError);
    CHECK_THROWS_AS(characteristic_exponents(PuiseuxSeries(1)), PreconditionError);
  }

  TEST_CASE("characteristic exponents match the definition and the essential transform") {
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<Term> terms;
      for (const auto& e : gen::random_exponents(1, static_cast<std::size_t>(gen::uniform(1, 7)), 40, 12))
        terms.push_back({e, gen::small_coef()});
      auto psi = PuiseuxSeries::from_terms(1, terms);
      auto got = characteristic_exponents(psi).entries;
      CHECK(got == oracle::characteristic(first_coords(psi.support())));
      auto ess = essential_exponents(psi, Lattice::standard(1), AdditiveOrder::lex(1));
      CHECK(first_coords(drop_integral_head(ess.entries)) == got);
    }
  }

  TEST_CASE("semigroup membership oracle") {
    CHECK(semigroup_member_oracle(as_vectors(ints({6, 15})), ExponentVec{Rational(21)}, 4));
    CHECK(semigroup_member_oracle(as_vectors(ints({6})), ExponentVec{Rational(6)}, 1));
    CHECK_FALSE(semigroup_member_oracle(as_vectors(ints({6, 15, 16, 23})), ExponentVec{Rational(7)}, 2));
    CHECK_THROWS_AS(semigroup_member_oracle(as_vectors(ints({4, 6, 10})), ExponentVec{Rational(301)}, 100, 1000),
                    PreconditionError);
  }

  TEST_CASE("lemma eqess1") {
    for (int i = 0; i < 60; ++i) CHECK(lemmas::eqess1() == "");
  }
  TEST_CASE("lemma ess-P") {
    for (int i = 0; i < 60; ++i) CHECK(lemmas::ess_p() == "");
  }
  TEST_CASE("lemma ess-Pgen") {
    for (int i = 0; i < 60; ++i) CHECK(lemmas::ess_pgen() == "");
  }
  TEST_CASE("lemma essind") {
    for (int i = 0; i < 60; ++i) CHECK(lemmas::essind() == "");
  }
}
