#include <cctype>

#include "npinv/error.hpp"
#include "npinv/series.hpp"

namespace npinv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : s_(text), opts_(opts) {}

  PuiseuxSeries run() {
    std::vector<Term> terms;
    std::optional<Rational> precision = opts_.default_precision;
    skip();
    Rational sign(1);
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') sign = Rational(-1);
      ++pos_;
    }
    while (true) {
      Term t = term();
      t.coef *= sign;
      terms.push_back(std::move(t));
      skip();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip();
      if (c == '+' && peek() == 'O' && peek(1) != '\0' && next_nonspace(pos_ + 1) == '(') {
        precision = o_marker();
        skip();
        if (pos_ != s_.size()) fail("unexpected text after O(...)");
        break;
      }
      sign = Rational(c == '-' ? -1 : 1);
    }
    return PuiseuxSeries::from_terms(opts_.num_vars, terms, std::nullopt, opts_.laurent_ok).truncate(precision);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
  char next_nonspace(std::size_t from) const {
    while (from < s_.size() && std::isspace(static_cast<unsigned char>(s_[from]))) ++from;
    return from < s_.size() ? s_[from] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    return d;
  }

  Rational unsigned_rational() {
    std::size_t start = pos_;
    std::string num = digits();
    if (num.empty()) fail("expected a number");
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      den = digits();
      if (den.empty()) fail("expected a denominator");
    }
    Integer d(den);
    if (d == 0) {
      pos_ = start;
      fail("zero denominator");
    }
    return Rational(Integer(num), d);
  }

  Rational signed_rational() {
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
      skip();
    }
    Rational r = unsigned_rational();
    return neg ? -r : r;
  }

  Term term() {
    Term t{ExponentVec::zero(opts_.num_vars), Rational(1)};
    while (true) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coef *= unsigned_rational();
      } else if (c == '(') {
        ++pos_;
        t.coef *= signed_rational();
        expect(')');
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        factor(t.exp);
      } else {
        fail("expected a coefficient or a variable");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  void factor(ExponentVec& exp) {
    std::size_t start = pos_;
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek()))) name += s_[pos_++];
    std::string idx = digits();
    std::size_t index = 1;
    if (idx.empty()) {
      static const std::string plain = "xytuvwz";
      if (name.size() != 1 || plain.find(name[0]) == std::string::npos) {
        pos_ = start;
        fail("unknown symbol '" + name + "' (specialize parameters before parsing)");
      }
      if (opts_.num_vars != 1) {
        pos_ = start;
        fail("variable '" + name + "' needs an index when there are several variables");
      }
    } else {
      index = std::stoul(idx);
      if (index == 0 || index > opts_.num_vars) {
        pos_ = start;
        fail("variable index " + idx + " out of range");
      }
    }
    Rational e(1);
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      if (peek() == '(') {
        ++pos_;
        e = signed_rational();
        expect(')');
      } else {
        std::string d = digits();
        if (d.empty()) fail("expected an exponent");
        e = Rational(Integer(d));
      }
    }
    exp[index - 1] += e;
  }

  std::optional<Rational> o_marker() {
    ++pos_;  // 'O'
    expect('(');
    skip();
    if (s_.substr(pos_, 5) != "total") fail("expected 'total'");
    pos_ += 5;
    expect('=');
    skip();
    std::optional<Rational> T;
    if (s_.substr(pos_, 3) == "inf") {
      pos_ += 3;
    } else {
      T = signed_rational();
    }
    expect(')');
    return T;
  }

  std::string_view s_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace

PuiseuxSeries parse_series(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).run(); }

PuiseuxSeries parse_series(std::string_view text, std::size_t num_vars) {
  ParseOptions o;
  o.num_vars = num_vars;
  return parse_series(text, o);
}

std::size_t infer_num_vars(std::string_view text) {
  std::size_t h = 1;
  for (std::size_t i = 0; i < text.size();) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i && j - i < 6) h = std::max<std::size_t>(h, std::stoul(std::string(text.substr(i, j - i))));
    i = j;
  }
  return h;
}

}  // namespace npinv
