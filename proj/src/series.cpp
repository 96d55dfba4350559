#include "npinv/series.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "npinv/error.hpp"

namespace npinv {

using Key = PuiseuxSeries::Key;

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

struct Frame {
  std::vector<std::int64_t> grid;
  std::int64_t L = 1;
  std::vector<std::int64_t> w;  // L / grid_i
};

Frame make_frame(std::vector<std::int64_t> grid) {
  Frame f;
  f.grid = std::move(grid);
  for (auto g : f.grid) f.L = lcm64(f.L, g);
  for (auto g : f.grid) f.w.push_back(f.L / g);
  return f;
}

std::vector<std::int64_t> merge_grids(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g[i] = lcm64(a[i], b[i]);
  return g;
}

Key rescale(const Key& k, const std::vector<std::int64_t>& from, const std::vector<std::int64_t>& to) {
  Key out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = k[i] * (to[i] / from[i]);
  return out;
}

std::int64_t tot(const Key& k, const Frame& f) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * f.w[i];
  return s;
}

std::int64_t bound_of(const std::optional<Rational>& T, const Frame& f) {
  if (!T) return kUnbounded;
  Integer b = (*T * Rational(static_cast<long>(f.L))).floor();
  if (!b.fits_slong_p()) return b > 0 ? kUnbounded : std::numeric_limits<std::int64_t>::min();
  return b.get_si();
}

std::optional<Rational> min_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

struct Entry {
  Key key;
  std::int64_t tot;
  Rational coef;
};

}  // namespace

class SeriesBuilder {
 public:
  static PuiseuxSeries make(std::size_t h, std::vector<std::int64_t> grid, std::map<Key, Rational> terms,
                            std::optional<Rational> precision, bool laurent) {
    PuiseuxSeries s(h);
    s.grid_ = std::move(grid);
    s.terms_ = std::move(terms);
    s.precision_ = std::move(precision);
    s.laurent_ = laurent;
    s.canonicalize();
    return s;
  }
  static const std::map<Key, Rational>& terms(const PuiseuxSeries& s) { return s.terms_; }
  static const std::vector<std::int64_t>& grid(const PuiseuxSeries& s) { return s.grid_; }

  /// Entries of s rescaled to frame f, sorted by total degree.
  static std::vector<Entry> entries(const PuiseuxSeries& s, const Frame& f) {
    std::vector<Entry> out;
    out.reserve(s.terms_.size());
    for (const auto& [k, c] : s.terms_) {
      Key r = rescale(k, s.grid_, f.grid);
      std::int64_t t = tot(r, f);
      out.push_back({std::move(r), t, c});
    }
    std::stable_sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.tot < b.tot; });
    return out;
  }
};

PuiseuxSeries::PuiseuxSeries(std::size_t h) : h_(h), grid_(h, 1) {
  if (h == 0) throw DimensionMismatch("a series needs at least one variable");
}

void PuiseuxSeries::canonicalize() {
  if (laurent_ && h_ > 1) throw PreconditionError("Laurent exponents are only supported for one variable");
  Frame f = make_frame(grid_);
  std::int64_t bound = bound_of(precision_, f);
  std::vector<std::int64_t> g(grid_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || tot(it->first, f) > bound) {
      it = terms_.erase(it);
      continue;
    }
    for (std::size_t i = 0; i < h_; ++i) {
      if (it->first[i] < 0 && !laurent_)
        throw PreconditionError("negative exponent " + exp_of(it->first).str() + " in a non-Laurent series");
      g[i] = std::gcd(g[i], it->first[i]);
    }
    ++it;
  }
  bool changed = false;
  for (std::size_t i = 0; i < h_; ++i) {
    if (g[i] < 0) g[i] = -g[i];
    if (g[i] != 1) changed = true;
  }
  if (!changed) return;
  std::map<Key, Rational> t;
  for (auto& [k, c] : terms_) {
    Key r(h_);
    for (std::size_t i = 0; i < h_; ++i) r[i] = k[i] / g[i];
    t.emplace(std::move(r), std::move(c));
  }
  terms_ = std::move(t);
  for (std::size_t i = 0; i < h_; ++i) grid_[i] /= g[i];
}

PuiseuxSeries::Key PuiseuxSeries::key_of(const ExponentVec& e, bool* exact) const {
  Key k(h_);
  *exact = true;
  for (std::size_t i = 0; i < h_; ++i) {
    Rational x = e[i] * Rational(static_cast<long>(grid_[i]));
    if (!x.is_integer() || !x.numerator().fits_slong_p()) {
      *exact = false;
      return k;
    }
    k[i] = x.numerator().get_si();
  }
  return k;
}

ExponentVec PuiseuxSeries::exp_of(const Key& k) const {
  ExponentVec e(h_);
  for (std::size_t i = 0; i < h_; ++i) e[i] = Rational(k[i], grid_[i]);
  return e;
}

PuiseuxSeries PuiseuxSeries::from_terms(std::size_t h, const std::vector<Term>& terms,
                                        std::optional<Rational> precision, bool laurent_ok) {
  std::vector<std::int64_t> grid(h, 1);
  for (const auto& t : terms) {
    require_dim(t.exp, h, "series term");
    for (std::size_t i = 0; i < h; ++i) {
      Integer d = t.exp[i].denominator();
      if (!d.fits_slong_p()) throw PreconditionError("exponent denominator too large");
      grid[i] = lcm64(grid[i], d.get_si());
    }
  }
  std::map<Key, Rational> m;
  for (const auto& t : terms) {
    Key k(h);
    for (std::size_t i = 0; i < h; ++i) {
      Rational x = t.exp[i] * Rational(static_cast<long>(grid[i]));
      if (!x.numerator().fits_slong_p()) throw PreconditionError("exponent too large");
      k[i] = x.numerator().get_si();
    }
    m[k] += t.coef;
  }
  return SeriesBuilder::make(h, std::move(grid), std::move(m), std::move(precision), laurent_ok);
}

PuiseuxSeries PuiseuxSeries::constant(std::size_t h, const Rational& c, std::optional<Rational> precision) {
  return from_terms(h, {{ExponentVec::zero(h), c}}, std::move(precision));
}

PuiseuxSeries PuiseuxSeries::monomial(const ExponentVec& e, const Rational& c, std::optional<Rational> precision) {
  bool laurent = e.size() == 1 && e[0].sign() < 0;
  return from_terms(e.size(), {{e, c}}, std::move(precision), laurent);
}

std::vector<Term> PuiseuxSeries::terms() const {
  Frame f = make_frame(grid_);
  std::vector<std::pair<std::int64_t, const Key*>> order;
  order.reserve(terms_.size());
  for (const auto& kv : terms_) order.emplace_back(tot(kv.first, f), &kv.first);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(order.size());
  for (const auto& [t, k] : order) out.push_back({exp_of(*k), terms_.at(*k)});
  return out;
}

std::vector<ExponentVec> PuiseuxSeries::support() const {
  std::vector<ExponentVec> out;
  for (auto& t : terms()) out.push_back(std::move(t.exp));
  return out;
}

bool PuiseuxSeries::known_at(const ExponentVec& e) const {
  require_dim(e, h_, "coefficient lookup");
  return !precision_ || e.total() <= *precision_;
}

Rational PuiseuxSeries::coefficient(const ExponentVec& e) const {
  if (!known_at(e))
    throw PrecisionError("coefficient at " + e.str() + " lies beyond precision " + precision_->str());
  bool exact = false;
  Key k = key_of(e, &exact);
  if (!exact) return Rational(0);
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> PuiseuxSeries::order() const {
  if (terms_.empty()) return std::nullopt;
  Frame f = make_frame(grid_);
  std::int64_t best = kUnbounded;
  for (const auto& kv : terms_) best = std::min(best, tot(kv.first, f));
  return Rational(best, f.L);
}

Rational PuiseuxSeries::constant_term() const {
  auto it = terms_.find(Key(h_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Term> PuiseuxSeries::min_term(const AdditiveOrder& ord) const {
  if (ord.dim() != h_) throw DimensionMismatch("order dimension");
  std::optional<Term> best;
  for (const auto& [k, c] : terms_) {
    ExponentVec e = exp_of(k);
    if (!best || ord.less(e, best->exp)) best = Term{std::move(e), c};
  }
  return best;
}

PuiseuxSeries PuiseuxSeries::truncate(const Rational& T) const {
  PuiseuxSeries s = *this;
  s.precision_ = min_opt(precision_, T);
  s.canonicalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::with_laurent(bool on) const {
  PuiseuxSeries s = *this;
  s.laurent_ = on;
  s.canonicalize();
  return s;
}

bool PuiseuxSeries::agrees_with(const PuiseuxSeries& o) const {
  if (o.h_ != h_) throw DimensionMismatch("series comparison");
  auto T = min_opt(precision_, o.precision_);
  PuiseuxSeries a = truncate(T), b = o.truncate(T);
  return a.grid_ == b.grid_ && a.terms_ == b.terms_;
}

std::string PuiseuxSeries::str(const std::vector<std::string>& names) const {
  std::vector<std::string> nm = names;
  if (nm.empty()) {
    if (h_ == 1) {
      nm.push_back("x");
    } else {
      for (std::size_t i = 0; i < h_; ++i) nm.push_back("x" + std::to_string(i + 1));
    }
  }
  std::string out;
  bool first = true;
  for (const auto& t : terms()) {
    Rational c = t.coef;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (c.sign() < 0) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < h_; ++i) {
      const Rational& x = t.exp[i];
      if (x.is_zero()) continue;
      if (!mono.empty()) mono += "*";
      mono += nm[i];
      if (x == Rational(1)) continue;
      mono += (x.is_integer() && x.sign() > 0) ? "^" + x.str() : "^(" + x.str() + ")";
    }
    if (mono.empty()) {
      out += c.str();
    } else {
      if (c != Rational(1)) out += c.str() + "*";
      out += mono;
    }
  }
  if (first) out = "0";
  if (precision_) out += " + O(total=" + precision_->str() + ")";
  return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const { return scale(*this, Rational(-1)); }

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.h_ != b.h_) throw DimensionMismatch("series addition");
  Frame f = make_frame(merge_grids(a.grid_, b.grid_));
  std::map<Key, Rational> m;
  for (const auto& [k, c] : a.terms_) m[rescale(k, a.grid_, f.grid)] += c;
  for (const auto& [k, c] : b.terms_) m[rescale(k, b.grid_, f.grid)] += c;
  return SeriesBuilder::make(a.h_, f.grid, std::move(m), min_opt(a.precision_, b.precision_),
                             a.laurent_ || b.laurent_);
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const Rational& s, const PuiseuxSeries& a) {
  std::map<Key, Rational> m;
  if (!s.is_zero())
    for (const auto& [k, c] : a.terms_) m.emplace(k, c * s);
  return SeriesBuilder::make(a.h_, a.grid_, std::move(m), a.precision_, a.laurent_);
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.h_ != b.h_) throw DimensionMismatch("series product");
  bool laurent = a.laurent_ || b.laurent_;
  if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return PuiseuxSeries(a.h_).with_laurent(laurent);
  auto oa = a.order(), ob = b.order();
  std::optional<Rational> T;
  if (a.precision_ && ob) T = min_opt(T, *a.precision_ + *ob);
  if (b.precision_ && oa) T = min_opt(T, *b.precision_ + *oa);
  if (a.precision_ && b.precision_) T = min_opt(T, *a.precision_ + *b.precision_);
  Frame f = make_frame(merge_grids(a.grid_, b.grid_));
  std::int64_t bound = bound_of(T, f);
  auto ea = SeriesBuilder::entries(a, f), eb = SeriesBuilder::entries(b, f);
  std::map<Key, Rational> m;
  Key k(a.h_);
  for (const auto& x : ea) {
    for (const auto& y : eb) {
      if (bound != kUnbounded && x.tot + y.tot > bound) break;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = x.key[i] + y.key[i];
      m[k] += x.coef * y.coef;
    }
  }
  return SeriesBuilder::make(a.h_, f.grid, std::move(m), T, laurent);
}

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + b; }
PuiseuxSeries scale(const PuiseuxSeries& a, const Rational& s) { return s * a; }
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b; }

PuiseuxSeries shift(const PuiseuxSeries& a, const ExponentVec& e) {
  require_dim(e, a.num_vars(), "monomial shift");
  std::vector<Term> t = a.terms();
  for (auto& x : t) x.exp += e;
  std::optional<Rational> T;
  if (a.precision()) T = *a.precision() + e.total();
  bool laurent = a.laurent_ok() || (a.num_vars() == 1 && !e.is_nonneg());
  return PuiseuxSeries::from_terms(a.num_vars(), t, T, laurent);
}

PuiseuxSeries normalized_power(const PuiseuxSeries& a, const Rational& r, std::optional<Rational> cap) {
  const std::size_t h = a.num_vars();
  Rational a0 = a.constant_term();
  if (a0.is_zero()) throw PreconditionError("binomial expansion needs a nonzero constant term");
  for (const auto& e : a.support())
    if (!e.is_nonneg()) throw PreconditionError("binomial expansion needs non-negative exponents");
  PuiseuxSeries one = PuiseuxSeries::constant(h, Rational(1));
  PuiseuxSeries g = (Rational(1) / a0) * a - one;
  auto P = min_opt(a.precision(), cap);
  if (g.is_zero()) return one.truncate(P);
  bool finite = r.is_integer() && r.sign() >= 0;
  if (!P && !finite)
    throw PrecisionError("binomial expansion of an exact series is infinite; a precision cap is required");
  Rational delta = *g.order();
  long K = 0;
  if (P) {
    Integer k = (*P / delta).floor();
    K = k.fits_slong_p() ? k.get_si() : std::numeric_limits<long>::max();
  } else {
    K = r.to_long();
  }
  if (finite) K = std::min(K, r.to_long());
  PuiseuxSeries sum = one.truncate(P);
  PuiseuxSeries gk = one;
  for (long k = 1; k <= K; ++k) {
    gk = (gk * g).truncate(P);
    Rational b = rational_binomial(r, static_cast<unsigned long>(k));
    if (!b.is_zero()) sum = sum + b * gk;
  }
  return sum.truncate(P);
}

PuiseuxSeries pow_int(const PuiseuxSeries& a, long N, std::optional<Rational> cap) {
  const std::size_t h = a.num_vars();
  if (N == 0) return PuiseuxSeries::constant(h, Rational(1)).with_laurent(a.laurent_ok());
  if (N > 0) {
    PuiseuxSeries result = PuiseuxSeries::constant(h, Rational(1)).with_laurent(a.laurent_ok());
    PuiseuxSeries base = a.truncate(cap);
    long n = N;
    while (true) {
      if (n & 1) result = (result * base).truncate(cap);
      n >>= 1;
      if (!n) break;
      base = (base * base).truncate(cap);
    }
    return result;
  }
  if (a.is_zero()) throw PreconditionError("negative power of the zero series");
  if (h > 1) {
    Rational a0 = a.constant_term();
    if (a0.is_zero()) throw PreconditionError("negative power needs a nonzero constant term when h > 1");
    return pow(a0, N) * normalized_power(a, Rational(N), cap);
  }
  auto lead = a.min_term(AdditiveOrder::lex(1));
  ExponentVec v = lead->exp;
  PuiseuxSeries unit = (Rational(1) / lead->coef) * shift(a, -v).with_laurent(false);
  ExponentVec nv = Rational(N) * v;
  std::optional<Rational> ucap;
  if (cap) ucap = *cap - nv[0];
  PuiseuxSeries u = normalized_power(unit, Rational(N), ucap);
  return pow(lead->coef, N) * shift(u, nv).with_laurent(true);
}

PuiseuxSeries unit_root(const PuiseuxSeries& a, long m, const Rational& root_of_constant, std::optional<Rational> cap) {
  if (m <= 0) throw PreconditionError("root order must be positive");
  Rational a0 = a.constant_term();
  if (a0.is_zero()) throw PreconditionError("unit_root needs a nonzero constant term");
  if (pow(root_of_constant, m) != a0)
    throw PreconditionError("root coefficient " + root_of_constant.str() + " raised to " + std::to_string(m) +
                            " is " + pow(root_of_constant, m).str() + ", expected " + a0.str());
  return root_of_constant * normalized_power(a, Rational(1, m), cap);
}

PuiseuxSeries monomial_substitute(const PuiseuxSeries& a, const Matrix& q) {
  const std::size_t h = a.num_vars();
  if (q.size() != h) throw DimensionMismatch("substitution matrix");
  if (!q.is_invertible()) throw PreconditionError("substitution matrix is singular");
  std::optional<Rational> U;
  if (a.precision()) {
    std::optional<Rational> mincol;
    for (std::size_t j = 0; j < h; ++j) {
      Rational s;
      for (std::size_t i = 0; i < h; ++i) s += q(i, j);
      mincol = min_opt(mincol, s);
    }
    if (mincol->sign() <= 0)
      throw PreconditionError("substitution of a truncated series needs positive column sums");
    U = *a.precision() * *mincol;
  }
  std::vector<Term> out;
  for (auto& t : a.terms()) {
    ExponentVec img = q * t.exp;
    if (!img.is_nonneg() && !a.laurent_ok())
      throw PreconditionError("negative image exponent " + img.str() + " of " + t.exp.str());
    out.push_back({std::move(img), t.coef});
  }
  return PuiseuxSeries::from_terms(h, out, std::nullopt, a.laurent_ok()).truncate(U);
}

Rational coefficient_at(const PuiseuxSeries& a, const ExponentVec& e) { return a.coefficient(e); }
std::vector<ExponentVec> support(const PuiseuxSeries& a) { return a.support(); }

ExponentVec ord_under(const PuiseuxSeries& a, const AdditiveOrder& ord) {
  auto t = a.min_term(ord);
  if (!t) throw PreconditionError("the zero series has no minimal exponent");
  return t->exp;
}

}  // namespace npinv
