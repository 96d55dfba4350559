#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "npinv/matrix.hpp"
#include "npinv/order.hpp"

namespace npinv {

struct Term {
  ExponentVec exp;
  Rational coef;
};

/// Truncated Puiseux series in h variables. Terms whose total exponent sum
/// exceeds the precision are unknown; an absent precision means the series is exact.
/// Exponents are stored as integer numerators over the primitive ramification.
class PuiseuxSeries {
 public:
  using Key = std::vector<std::int64_t>;

  explicit PuiseuxSeries(std::size_t h = 1);
  static PuiseuxSeries from_terms(std::size_t h, const std::vector<Term>& terms,
                                  std::optional<Rational> precision = std::nullopt, bool laurent_ok = false);
  static PuiseuxSeries constant(std::size_t h, const Rational& c,
                                std::optional<Rational> precision = std::nullopt);
  static PuiseuxSeries monomial(const ExponentVec& e, const Rational& c = Rational(1),
                                std::optional<Rational> precision = std::nullopt);

  std::size_t num_vars() const { return h_; }
  const std::vector<std::int64_t>& ramification() const { return grid_; }
  const std::optional<Rational>& precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  bool laurent_ok() const { return laurent_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Sorted by total degree, ties broken by coordinates.
  std::vector<Term> terms() const;
  std::vector<ExponentVec> support() const;
  /// Coefficient at e; throws PrecisionError when e lies beyond the precision.
  Rational coefficient(const ExponentVec& e) const;
  bool known_at(const ExponentVec& e) const;
  /// Minimal total degree; empty for the zero series.
  std::optional<Rational> order() const;
  Rational constant_term() const;
  /// Minimal term under ord; empty for the zero series.
  std::optional<Term> min_term(const AdditiveOrder& ord) const;

  /// Drop terms above T and lower the precision to T (never raises it).
  PuiseuxSeries truncate(const Rational& T) const;
  PuiseuxSeries truncate(const std::optional<Rational>& T) const { return T ? truncate(*T) : *this; }
  PuiseuxSeries with_laurent(bool on) const;

  /// Equality of all coefficients up to the smaller of the two precisions.
  bool agrees_with(const PuiseuxSeries& o) const;
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a.h_ == b.h_ && a.precision_ == b.precision_ && a.grid_ == b.grid_ && a.terms_ == b.terms_;
  }

  /// Text in the input grammar. Default names: x (h = 1) or x1..xh.
  std::string str(const std::vector<std::string>& names = {}) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const Rational& s, const PuiseuxSeries& a);

 private:
  friend class SeriesBuilder;
  void canonicalize();
  Key key_of(const ExponentVec& e, bool* exact) const;
  ExponentVec exp_of(const Key& k) const;

  std::size_t h_;
  std::vector<std::int64_t> grid_;
  std::map<Key, Rational> terms_;
  std::optional<Rational> precision_;
  bool laurent_ = false;
};

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries scale(const PuiseuxSeries& a, const Rational& s);
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
/// Multiply by the monomial x^e; precision shifts by total(e).
PuiseuxSeries shift(const PuiseuxSeries& a, const ExponentVec& e);

/// Integer power. Negative N needs a nonzero constant term (h > 1) or works on
/// the dominating term (h = 1, producing a Laurent series). An infinite
/// expansion of an exact input needs a cap on the result precision.
PuiseuxSeries pow_int(const PuiseuxSeries& a, long N, std::optional<Rational> cap = std::nullopt);

/// (a / a_0)^r by the binomial series, a_0 the nonzero constant term.
PuiseuxSeries normalized_power(const PuiseuxSeries& a, const Rational& r, std::optional<Rational> cap = std::nullopt);

/// The m-th root of a whose constant term is root_of_constant.
PuiseuxSeries unit_root(const PuiseuxSeries& a, long m, const Rational& root_of_constant,
                        std::optional<Rational> cap = std::nullopt);

/// Replace every exponent lambda by q*lambda (column convention).
PuiseuxSeries monomial_substitute(const PuiseuxSeries& a, const Matrix& q);

Rational coefficient_at(const PuiseuxSeries& a, const ExponentVec& e);
std::vector<ExponentVec> support(const PuiseuxSeries& a);
/// Minimal exponent under ord; throws for the zero series.
ExponentVec ord_under(const PuiseuxSeries& a, const AdditiveOrder& ord);

struct ParseOptions {
  std::size_t num_vars = 1;
  std::optional<Rational> default_precision = Rational(10);
  bool laurent_ok = false;
};

/// Grammar: series := term (('+'|'-') term)* ['+' 'O(total=' (R|inf) ')'].
PuiseuxSeries parse_series(std::string_view text, const ParseOptions& opts = {});
PuiseuxSeries parse_series(std::string_view text, std::size_t num_vars);
/// Largest variable index used (1 for unindexed names).
std::size_t infer_num_vars(std::string_view text);

}  // namespace npinv
