#pragma once
// Brute-force reference implementations. They share only Rational with the
// library and follow the definitions literally, trading speed for obviousness.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "npinv/rational.hpp"

namespace oracle {

using npinv::Integer;
using npinv::Rational;
using Vec = std::vector<Rational>;

// ---- dense univariate series with integer exponents, truncated at degree N

using Dense = std::vector<Rational>;

inline Dense dense(std::size_t N) { return Dense(N + 1, Rational(0)); }

inline Dense dmul(const Dense& a, const Dense& b, std::size_t N) {
  Dense c = dense(N);
  for (std::size_t i = 0; i < a.size() && i <= N; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// 1/a by the recurrence a * b = 1
inline Dense dinv(const Dense& a, std::size_t N) {
  Dense b = dense(N);
  b[0] = Rational(1) / a[0];
  for (std::size_t k = 1; k <= N; ++k) {
    Rational s(0);
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * b[k - i];
    b[k] = -s / a[0];
  }
  return b;
}

// f(g) with g[0] = 0, by Horner
inline Dense dcompose(const Dense& f, const Dense& g, std::size_t N) {
  Dense r = dense(N);
  for (std::size_t i = std::min(f.size(), N + 1); i-- > 0;) {
    r = dmul(r, g, N);
    r[0] += f[i];
  }
  return r;
}

// (a / a0)^r by the binomial series
inline Dense dbinomial_power(const Dense& a, const Rational& r, std::size_t N) {
  Dense g = dense(N);
  for (std::size_t i = 1; i < a.size() && i <= N; ++i) g[i] = a[i] / a[0];
  Dense acc = dense(N), gk = dense(N);
  acc[0] = 1;
  gk[0] = 1;
  for (unsigned long k = 1; k <= N; ++k) {
    gk = dmul(gk, g, N);
    Rational b = npinv::rational_binomial(r, k);
    for (std::size_t i = 0; i <= N; ++i) acc[i] += b * gk[i];
  }
  return acc;
}

// psi with u psi(u) the compositional inverse of t phi(t): iterate t <- u / phi(t)
inline Dense dreversion_dual(const Dense& phi, std::size_t N) {
  Dense t = dense(N + 1);
  t[1] = 1;
  for (std::size_t it = 0; it <= N + 1; ++it) {
    Dense inv = dinv(dcompose(phi, t, N + 1), N + 1);
    Dense next = dense(N + 1);
    for (std::size_t i = 0; i + 1 <= N + 1; ++i) next[i + 1] = inv[i];
    t = next;
  }
  Dense psi = dense(N);
  for (std::size_t i = 0; i <= N; ++i) psi[i] = t[i + 1];
  return psi;
}

// ---- vectors

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec apply(const std::vector<Vec>& rows, const Vec& v) {
  Vec r(rows.size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += rows[i][j] * v[j];
  return r;
}

// lexicographic comparison of rows * a and rows * b
inline bool order_less(const std::vector<Vec>& rows, const Vec& a, const Vec& b) {
  Vec x = apply(rows, a), y = apply(rows, b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// ---- lattices: v in Z{gens} iff adding v keeps the rank and the gcd of maximal minors

inline Rational det(std::vector<Vec> m) {
  std::size_t n = m.size();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// (rank, gcd of nonzero rank x rank minors), computed on gens scaled by D
inline std::pair<std::size_t, Integer> minor_invariants(const std::vector<Vec>& gens, const Integer& D) {
  if (gens.empty()) return {0, Integer(1)};
  std::size_t h = gens[0].size();
  for (std::size_t r = std::min(h, gens.size()); r > 0; --r) {
    Integer g = 0;
    subsets(gens.size(), r, [&](const std::vector<std::size_t>& rows) {
      subsets(h, r, [&](const std::vector<std::size_t>& cols) {
        std::vector<Vec> m(r, Vec(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) m[i][j] = gens[rows[i]][cols[j]] * Rational(D);
        Rational d = det(m);
        if (!d.is_zero()) g = npinv::gcd(g, d.numerator());
      });
    });
    if (g != 0) return {r, g};
  }
  return {0, Integer(1)};
}

inline bool lattice_contains(const std::vector<Vec>& gens, const Vec& v) {
  Integer D = 1;
  for (const auto& g : gens)
    for (const auto& x : g) D = npinv::lcm(D, x.denominator());
  for (const auto& x : v) D = npinv::lcm(D, x.denominator());
  std::vector<Vec> more = gens;
  more.push_back(v);
  auto a = minor_invariants(gens, D), b = minor_invariants(more, D);
  return a.first == b.first && abs(a.second) == abs(b.second);
}

// ---- supports

// Irr(S) by dynamic programming over the grid of points below each element.
inline std::vector<Vec> irreducible(const std::vector<Vec>& S) {
  std::vector<Vec> nz;
  for (const auto& s : S)
    if (std::any_of(s.begin(), s.end(), [](const Rational& x) { return !x.is_zero(); })) nz.push_back(s);
  std::map<Vec, bool> memo;  // v is a sum of >= 1 elements of nz
  std::function<bool(const Vec&)> reach = [&](const Vec& v) {
    bool all0 = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
    if (all0) return false;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    bool r = false;
    for (const auto& a : nz) {
      if (!leq(a, v)) continue;
      Vec rest = sub(v, a);
      if (std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return x.is_zero(); }) || reach(rest)) {
        r = true;
        break;
      }
    }
    memo[v] = r;
    return r;
  };
  std::vector<Vec> out;
  for (const auto& s : S) {
    bool reducible = false;
    for (const auto& a : nz) {
      if (a == s || !leq(a, s)) continue;
      Vec rest = sub(s, a);
      if (reach(rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(s);
  }
  return out;
}

// ess(S, M, ord) by the definition: the minimum of S, then repeatedly the
// minimum of the part of S outside M + Z{entries so far}.
inline std::vector<Vec> essential(const std::vector<Vec>& S, const std::vector<Vec>& M, const std::vector<Vec>& ord_rows) {
  std::vector<Vec> gens = M, out;
  for (;;) {
    const Vec* best = nullptr;
    for (const auto& s : S) {
      if (!out.empty() && lattice_contains(gens, s)) continue;
      if (!best || order_less(ord_rows, s, *best)) best = &s;
    }
    if (!best) return out;
    out.push_back(*best);
    gens.push_back(*best);
  }
}

// Characteristic exponents of a univariate support: entries whose denominator
// does not divide the lcm of the denominators of all smaller support elements.
inline std::vector<Rational> characteristic(std::vector<Rational> S) {
  std::sort(S.begin(), S.end());
  std::vector<Rational> out;
  Integer N = 1;
  for (const auto& s : S) {
    if (N % s.denominator() != 0) out.push_back(s);
    N = npinv::lcm(N, s.denominator());
  }
  return out;
}

}  // namespace oracle
