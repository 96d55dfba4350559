#include "npinv/corpus.hpp"

#include <sstream>

#include "npinv/duality.hpp"
#include "npinv/exponents.hpp"
#include "npinv/inversion.hpp"
#include "npinv/quasi_ordinary.hpp"

namespace npinv {

namespace {

PuiseuxSeries exact(std::string_view text, std::size_t h) {
  ParseOptions o;
  o.num_vars = h;
  o.default_precision = std::nullopt;
  return parse_series(text, o);
}

// rows = gamma_1, gamma_2 in the column convention
Matrix etor_chart() { return Matrix::from_rows({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}}); }

const char* kEtor = "x1^(3/2) + x2^(1/4) + x1^(7/2)*x2^(5/2)";
const char* kEtorSigma = "x1^(3/2)*x2^(3/2) + x2^(1/4) + x1^(7/2)*x2^6";
const char* kVarnotS = "x1^(3/2) + x1^(7/4)*x2^(1/2) - 2*x1^2*x3^(1/3)";

std::string join(const std::vector<ExponentVec>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string join(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Rational> exchar_support() {
  return {Rational(1), Rational(5, 2), Rational(8, 3), Rational(7, 2), Rational(23, 6)};
}

// sum_k binom(1/6, k) g^k up to total degree cap
PuiseuxSeries binomial_sixth_root(const PuiseuxSeries& g, const Rational& cap) {
  PuiseuxSeries acc = PuiseuxSeries::constant(g.num_vars(), Rational(1), cap);
  PuiseuxSeries gk = PuiseuxSeries::constant(g.num_vars(), Rational(1));
  for (long k = 1; Rational(k) <= cap; ++k) {
    gk = mul(gk, g).truncate(cap);
    acc = acc + scale(gk, rational_binomial(Rational(1, 6), k));
  }
  return acc;
}

// (4/p) binom(-p/6, p-4) c^(p-4)
Rational exinv_coefficient(long p, const Rational& c) {
  return Rational(4, p) * rational_binomial(Rational(-p, 6), p - 4) * pow(c, p - 4);
}

bool exinv_case(const Rational& c, std::string& detail) {
  auto eta = exact("x^(3/2) + (" + c.str() + ")*x^(7/4)", 1);
  auto d = extract_branch(eta, std::nullopt, Rational(26));
  InversionOptions io;
  io.target_precision = Rational(30);
  auto r = invert_branch(d, io);
  for (long p = 4; p <= 30; ++p) {
    Rational got = r.xi.coefficient(ExponentVec{Rational(p, 6)});
    if (got != exinv_coefficient(p, c)) {
      detail = "coefficient of y^(" + std::to_string(p) + "/6) is " + got.str();
      return false;
    }
  }
  auto terms = r.xi.terms();
  bool lead = terms.size() >= 2 && terms[0].exp == ExponentVec{Rational(2, 3)} && terms[0].coef == Rational(1) &&
              terms[1].exp == ExponentVec{Rational(5, 6)} && terms[1].coef == Rational(-2, 3) * c;
  detail = "xi = " + r.xi.truncate(Rational(1)).str({"y"});
  return lead;
}

std::vector<CorpusCase> build() {
  std::vector<CorpusCase> c;
  c.push_back({"order.lex", "lex puts (0,1/4) before (3/2,3/2)", [](std::string& d) {
                 auto o = AdditiveOrder::lex(2);
                 bool ok = o.less(ExponentVec{Rational(0), Rational(1, 4)}, ExponentVec{Rational(3, 2), Rational(3, 2)});
                 d = ok ? "less" : "not less";
                 return ok;
               }});
  c.push_back({"order.compose", "under lex composed with the chart, (3/2,0) is after (0,1/4)", [](std::string& d) {
                 auto o = order_compose(AdditiveOrder::lex(2), etor_chart());
                 bool ok = o.compare(ExponentVec{Rational(3, 2), Rational(0)}, ExponentVec{Rational(0), Rational(1, 4)}) > 0;
                 d = ok ? "greater" : "not greater";
                 return ok;
               }});
  c.push_back({"parse.varnot", "x^(3/2) + 2*x^(7/4) has 2 terms, ramification (4)", [](std::string& d) {
                 auto s = parse_series("x^(3/2) + 2*x^(7/4)", 1);
                 d = std::to_string(s.size()) + " terms, ramification " + std::to_string(s.ramification()[0]);
                 return s.size() == 2 && s.ramification() == std::vector<std::int64_t>{4};
               }});
  c.push_back({"parse.etor", "E:Tor series has 3 terms, ramification (2,4)", [](std::string& d) {
                 auto s = parse_series(kEtor, 2);
                 d = std::to_string(s.size()) + " terms, ramification (" + std::to_string(s.ramification()[0]) + "," +
                     std::to_string(s.ramification()[1]) + ")";
                 return s.size() == 3 && s.ramification() == std::vector<std::int64_t>{2, 4};
               }});
  c.push_back({"pow.esspowers", "[(1+t)^5]_1 = 5", [](std::string& d) {
                 auto v = pow_int(exact("1 + t", 1), 5).coefficient(ExponentVec{Rational(1)});
                 d = v.str();
                 return v == Rational(5);
               }});
  c.push_back({"root.varnot", "unit_root(1+2t, 6, 1) is the binomial series of (1+2t)^(1/6)", [](std::string& d) {
                 auto g = exact("2*t", 1);
                 auto got = unit_root(exact("1 + 2*t", 1), 6, Rational(1), Rational(12));
                 auto want = binomial_sixth_root(g, Rational(12));
                 d = got.truncate(Rational(3)).str({"t"});
                 return got == want;
               }});
  c.push_back({"root.varnot-S", "unit_root(1 + t1 t2 - 2 t1^2 t3, 6, 1) is the binomial series", [](std::string& d) {
                 auto g = exact("x1*x2 - 2*x1^2*x3", 3);
                 auto got = unit_root(exact("1 + x1*x2 - 2*x1^2*x3", 3), 6, Rational(1), Rational(9));
                 auto want = binomial_sixth_root(g, Rational(9));
                 d = got.truncate(Rational(3)).str({"t1", "t2", "t3"});
                 return got == want;
               }});
  c.push_back({"toric.pullback", "E:Tor pullback equals the listed psi_sigma", [](std::string& d) {
                 auto got = toric_pullback(exact(kEtor, 2), etor_chart());
                 d = got.str({"v1", "v2"});
                 return got == exact(kEtorSigma, 2);
               }});
  c.push_back({"irr.exirred", "Irr{6,15,16,21,23} = {6,15,16,23}", [](std::string& d) {
                 auto got = irreducible_exponents(ints({6, 15, 16, 21, 23}));
                 d = join(got);
                 return got == ints({6, 15, 16, 23});
               }});
  c.push_back({"semigroup.exirred", "21 = 6 + 15 is reducible", [](std::string& d) {
                 bool ok = semigroup_member_oracle(as_vectors(ints({6, 15})), ExponentVec{Rational(21)}, 4);
                 d = ok ? "member" : "not a member";
                 return ok;
               }});
  c.push_back({"ess.exess", "the twelve sequences ess(E, p), p = 1..12", [](std::string& d) {
                 auto E = ints({6, 15, 16, 21, 23});
                 std::vector<std::vector<Rational>> want(13);
                 for (int p : {1, 5, 7, 11}) want[p] = ints({6});
                 for (int p : {2, 4, 8, 10}) want[p] = ints({6, 15});
                 for (int p : {3, 9}) want[p] = ints({6, 16});
                 for (int p : {6, 12}) want[p] = ints({6, 15, 16});
                 for (int p = 1; p <= 12; ++p) {
                   auto got = first_coords(essential_exponents_p(E, Rational(p)).entries);
                   if (got != want[p]) {
                     d = "ess(E," + std::to_string(p) + ") = " + join(got);
                     return false;
                   }
                 }
                 d = "all twelve match";
                 return true;
               }});
  c.push_back({"ess.exess-rational", "ess({1,5/2,8/3,7/2,23/6}, 1) = (1,5/2,8/3)", [](std::string& d) {
                 auto got = first_coords(essential_exponents_p(exchar_support(), Rational(1)).entries);
                 d = join(got);
                 return got == std::vector<Rational>{Rational(1), Rational(5, 2), Rational(8, 3)};
               }});
  c.push_back({"ess.etor-lex", "ess(psi_sigma, Z^2, lex) = ((0,1/4),(3/2,3/2))", [](std::string& d) {
                 auto e = essential_exponents(exact(kEtorSigma, 2), Lattice::standard(2), AdditiveOrder::lex(2));
                 d = join(e.entries);
                 return e.entries == std::vector<ExponentVec>{{Rational(0), Rational(1, 4)}, {Rational(3, 2), Rational(3, 2)}};
               }});
  c.push_back({"ess.etor-qsigma", "ess(psi, Z^2, lex composed with the chart) = ((0,1/4),(3/2,0))", [](std::string& d) {
                 auto ord = order_compose(AdditiveOrder::lex(2), etor_chart());
                 auto e = essential_exponents(exact(kEtor, 2), Lattice::standard(2), ord);
                 d = join(e.entries);
                 return e.entries == std::vector<ExponentVec>{{Rational(0), Rational(1, 4)}, {Rational(3, 2), Rational(0)}};
               }});
  int which = 0;
  for (const char* s : {"x^(5/2) + x^(8/3)", "2*x - x^(5/2) + x^(8/3) - 3*x^(7/2) + x^(23/6)"}) {
    std::string text = s;
    c.push_back({"char.exchar-" + std::to_string(++which), "characteristic exponents of " + text + " are (5/2, 8/3)", [text](std::string& d) {
                   auto got = characteristic_exponents(exact(text, 1)).entries;
                   d = join(got);
                   return got == std::vector<Rational>{Rational(5, 2), Rational(8, 3)};
                 }});
  }
  c.push_back({"branch.varnot", "x^(3/2)+2x^(7/4): n=4, m=6, root 1, unit (1+2t)^(1/6)", [](std::string& d) {
                 auto b = extract_branch(exact("x^(3/2) + 2*x^(7/4)", 1), std::nullopt, Rational(12));
                 d = "n=" + std::to_string(b.n[0]) + " m=" + std::to_string(b.m1) + " root=" + b.root_coeff.str();
                 return b.n == std::vector<std::int64_t>{4} && b.m1 == 6 && b.root_coeff == Rational(1) &&
                        b.unit == binomial_sixth_root(exact("2*t", 1), Rational(12));
               }});
  c.push_back({"branch.varnot-S", "varnot-S: n=(4,2,3), m1=6, unit (1+t1t2-2t1^2t3)^(1/6)", [](std::string& d) {
                 auto b = extract_branch(exact(kVarnotS, 3), std::nullopt, Rational(9));
                 d = "n=(" + std::to_string(b.n[0]) + "," + std::to_string(b.n[1]) + "," + std::to_string(b.n[2]) +
                     ") m1=" + std::to_string(b.m1);
                 return b.n == std::vector<std::int64_t>{4, 2, 3} && b.m1 == 6 && b.root_coeff == Rational(1) &&
                        b.unit == binomial_sixth_root(exact("x1*x2 - 2*x1^2*x3", 3), Rational(9));
               }});
  for (long cv : {1L, 2L, -3L}) {
    Rational cc(cv);
    c.push_back({"invert.exinv-c=" + cc.str(), "x^(3/2)+(" + cc.str() + ")x^(7/4): xi coefficients (4/p)binom(-p/6,p-4)c^(p-4)",
                 [cc](std::string& d) { return exinv_case(cc, d); }});
  }
  c.push_back({"hs.exinv", "exponent 7/4 maps to 5/6 with 6(1+5/6)=4(1+7/4)=11, [xi]_(5/6) = -(4/6)c", [](std::string& d) {
                 auto b = extract_branch(exact("x^(3/2) + 2*x^(7/4)", 1), std::nullopt, Rational(12));
                 InversionOptions io;
                 io.target_precision = Rational(14);
                 auto r = invert_branch(b, io);
                 auto E = drop_integral_head(r.ess_eta.entries), F = drop_integral_head(r.ess_xi.entries);
                 d = "ess_eta " + join(r.ess_eta.entries) + ", ess_xi " + join(r.ess_xi.entries);
                 if (r.ess_eta.entries.size() != 2 || r.ess_xi.entries.size() != 2) return false;
                 Rational e = r.ess_eta.entries[1][0], f = r.ess_xi.entries[1][0];
                 return e == Rational(7, 4) && f == Rational(5, 6) && Rational(6) * (Rational(1) + f) == Rational(11) &&
                        Rational(4) * (Rational(1) + e) == Rational(11) &&
                        r.xi.coefficient(ExponentVec{f}) == Rational(-4, 6) * Rational(2) && r.checks.all_passed() &&
                        !r.checks.provisional;
               }});
  c.push_back({"lagrange.exinv", "lagrange_coefficient(q) = (4/q)binom(-q/6,q-4)2^(q-4), and [xi]_4 = root^-4", [](std::string& d) {
                 auto b = extract_branch(exact("x^(3/2) + 2*x^(7/4)", 1), std::nullopt, Rational(16));
                 for (long q = 4; q <= 20; ++q) {
                   Rational got = lagrange_coefficient(b, q);
                   if (got != exinv_coefficient(q, Rational(2))) {
                     d = "q=" + std::to_string(q) + ": " + got.str();
                     return false;
                   }
                 }
                 d = "q = 4..20 match";
                 return lagrange_coefficient(b, 4) == Rational(1);
               }});
  c.push_back({"invert.varnot-S", "varnot-S: m1=6, Halphen-Stolz relations certified under the graded order, round trip",
               [](std::string& d) {
                 auto psi = exact(kVarnotS, 3);
                 auto b = extract_branch(psi, std::nullopt, Rational(8));
                 InversionOptions io;
                 io.order = AdditiveOrder::graded(3);
                 auto r = invert_branch(b, io);
                 auto back = invert_branch(extract_branch(r.xi), io);
                 d = "m1=" + std::to_string(r.m1) + " ess_xi " + join(r.ess_xi.entries);
                 return r.m1 == 6 && r.checks.all_passed() && !r.checks.provisional && back.xi.agrees_with(psi);
               }});
  c.push_back({"qo.not-qo", "x1^(3/2) + x2^(5/2) is not quasi-ordinary", [](std::string& d) {
                 auto v = qo_test(exact("x1^(3/2) + x2^(5/2)", 2));
                 d = to_string(v.is_qo) + (v.witness ? ", " + v.witness->description : std::string());
                 ExponentVec a{Rational(3, 2), Rational(0)}, b{Rational(0), Rational(5, 2)};
                 return v.is_qo == QoAnswer::no && v.witness && v.witness->condition == 3 &&
                        ((v.witness->first == a && v.witness->second == b) ||
                         (v.witness->first == b && v.witness->second == a));
               }});
  c.push_back({"qo.etor", "psi_sigma is quasi-ordinary with characteristic exponents ((0,1/4),(3/2,3/2))", [](std::string& d) {
                 auto v = qo_test(exact(kEtorSigma, 2));
                 d = to_string(v.is_qo) + " " + join(v.char_exponents);
                 return v.is_qo == QoAnswer::yes && v.certified &&
                        v.char_exponents == std::vector<ExponentVec>{{Rational(0), Rational(1, 4)}, {Rational(3, 2), Rational(3, 2)}};
               }});
  c.push_back({"qsigma.etor", "q(ess(psi, Z^2, lex_q)) = ess(psi_sigma, Z^2, lex)", [](std::string& d) {
                 auto rep = verify_qsigma_relation(exact(kEtor, 2), etor_chart(), AdditiveOrder::lex(2));
                 d = join(rep.checked_exponents);
                 return rep.all_passed() &&
                        rep.checked_exponents == std::vector<ExponentVec>{{Rational(0), Rational(1, 4)}, {Rational(3, 2), Rational(3, 2)}};
               }});
  return c;
}

}  // namespace

const std::vector<CorpusCase>& worked_examples() {
  static const std::vector<CorpusCase> cases = build();
  return cases;
}

std::vector<CorpusOutcome> run_corpus() {
  std::vector<CorpusOutcome> out;
  for (const auto& c : worked_examples()) {
    CorpusOutcome o{c.id, c.description, false, ""};
    try {
      o.passed = c.run(o.detail);
    } catch (const std::exception& e) {
      o.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace npinv
