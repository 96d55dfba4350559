#include "npinv/rational.hpp"

#include <cctype>
#include <limits>

#include "npinv/error.hpp"

namespace npinv {

Rational::Rational(long n, long d) {
  if (d == 0) throw PreconditionError("zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw PreconditionError("zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  if (neg) n = -n;
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  q_ /= o.q_;
  return *this;
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw PreconditionError("value " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

Rational pow(const Rational& a, long k) {
  if (k < 0) {
    if (a.is_zero()) throw PreconditionError("zero to a negative power");
    return pow(Rational(1) / a, -k);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), a.numerator().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), a.denominator().get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(n, d);
}

Rational rational_binomial(const Rational& r, unsigned long k) {
  Rational acc(1);
  for (unsigned long i = 0; i < k; ++i) {
    acc *= r - Rational(static_cast<long>(i));
    acc /= Rational(static_cast<long>(i + 1));
  }
  return acc;
}

namespace {

std::optional<Integer> int_root(const Integer& a, unsigned long m) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), m) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& a, unsigned long m) {
  if (m == 0) throw PreconditionError("zeroth root");
  if (a.is_zero()) return Rational(0);
  Integer num = a.numerator();
  bool neg = num < 0;
  if (neg) {
    if (m % 2 == 0) return std::nullopt;
    num = -num;
  }
  auto n = int_root(num, m);
  auto d = int_root(a.denominator(), m);
  if (!n || !d) return std::nullopt;
  return Rational(neg ? Integer(-*n) : *n, *d);
}

std::optional<Rational> exact_power(const Rational& a, const Rational& e) {
  if (a.is_zero()) {
    if (e.sign() > 0) return Rational(0);
    if (e.is_zero()) return Rational(1);
    return std::nullopt;
  }
  Integer den = e.denominator();
  if (!den.fits_ulong_p() || !e.numerator().fits_slong_p()) return std::nullopt;
  auto root = exact_root(a, den.get_ui());
  if (!root) return std::nullopt;
  return pow(*root, e.numerator().get_si());
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  Integer r = lcm(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)));
  if (!r.fits_slong_p()) throw PreconditionError("ramification overflow");
  return r.get_si();
}

}  // namespace npinv
