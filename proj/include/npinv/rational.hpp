#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace npinv {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& n, const Integer& d);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "-p", "p/q", "-p/q" (optional surrounding whitespace).
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// floor and ceiling as integers
  Integer floor() const;
  Integer ceil() const;
  /// Value as long; throws if the value is not an integer that fits.
  long to_long() const;

  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// a^k for integer k; throws on 0^negative.
Rational pow(const Rational& a, long k);

/// r(r-1)...(r-k+1)/k!
Rational rational_binomial(const Rational& r, unsigned long k);

/// Exact m-th root of a when it is rational. For even m the positive root is returned.
std::optional<Rational> exact_root(const Rational& a, unsigned long m);

/// a^e when it is rational (e = p/q: the positive q-th root is preferred).
std::optional<Rational> exact_power(const Rational& a, const Rational& e);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace npinv
