#include "npinv/exponents.hpp"

#include <algorithm>
#include <map>

#include "npinv/error.hpp"

namespace npinv {

namespace {

std::size_t common_dim(const std::vector<ExponentVec>& S) {
  if (S.empty()) return 0;
  std::size_t h = S.front().size();
  for (const auto& e : S) require_dim(e, h, "exponent set");
  return h;
}

void require_nonneg(const std::vector<ExponentVec>& S) {
  for (const auto& e : S)
    if (!e.is_nonneg()) throw PreconditionError("negative exponent " + e.str());
}

std::vector<ExponentVec> dedup(std::vector<ExponentVec> S) {
  std::sort(S.begin(), S.end(), ExponentStorageLess{});
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

class SemigroupMemo {
 public:
  explicit SemigroupMemo(std::vector<ExponentVec> gens) : gens_(std::move(gens)) {}

  // v is a sum of one or more generators
  bool member(const ExponentVec& v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    bool r = false;
    for (const auto& s : gens_) {
      if (!s.leq_coordinatewise(v)) continue;
      if (s == v || member(v - s)) {
        r = true;
        break;
      }
    }
    memo_.emplace(v, r);
    return r;
  }

  bool reducible(const ExponentVec& v) {
    for (const auto& s : gens_)
      if (s != v && s.leq_coordinatewise(v) && member(v - s)) return true;
    return false;
  }

 private:
  std::vector<ExponentVec> gens_;
  std::map<ExponentVec, bool, ExponentStorageLess> memo_;
};

}  // namespace

std::vector<ExponentVec> as_vectors(const std::vector<Rational>& S) {
  std::vector<ExponentVec> out;
  for (const auto& r : S) out.push_back(ExponentVec{r});
  return out;
}

std::vector<Rational> first_coords(const std::vector<ExponentVec>& S) {
  std::vector<Rational> out;
  for (const auto& e : S) out.push_back(e[0]);
  return out;
}

std::vector<ExponentVec> irreducible_exponents(const std::vector<ExponentVec>& S) {
  common_dim(S);
  require_nonneg(S);
  std::vector<ExponentVec> set = dedup(S);
  std::vector<ExponentVec> gens;
  for (const auto& e : set)
    if (!e.is_zero()) gens.push_back(e);
  SemigroupMemo memo(gens);
  std::vector<ExponentVec> out;
  for (const auto& e : set)
    if (e.is_zero() || !memo.reducible(e)) out.push_back(e);
  return out;
}

std::vector<Rational> irreducible_exponents(const std::vector<Rational>& S) {
  auto r = first_coords(irreducible_exponents(as_vectors(S)));
  std::sort(r.begin(), r.end());
  return r;
}

EssentialSequence essential_exponents(const std::vector<ExponentVec>& S, const Lattice& M, const AdditiveOrder& ord,
                                      const EssOptions& opts) {
  if (S.empty()) throw PreconditionError("essential exponents of an empty set");
  std::size_t h = common_dim(S);
  if (M.dim() != h || ord.dim() != h) throw DimensionMismatch("essential exponents: lattice or order dimension");
  if (!ord.accepted()) throw PreconditionError("order does not dominate the non-negative orthant");
  require_nonneg(S);

  std::vector<Rational> ram(h, Rational(1));
  if (opts.ramification) {
    if (opts.ramification->size() != h) throw DimensionMismatch("declared ramification");
    for (std::size_t i = 0; i < h; ++i) ram[i] = Rational(static_cast<long>((*opts.ramification)[i]));
  }
  for (const auto& e : S)
    for (std::size_t i = 0; i < h; ++i)
      ram[i] = Rational(lcm(ram[i].numerator(), e[i].denominator()));

  EssentialSequence out;
  out.relative_to = M;
  out.order = ord;
  std::vector<ExponentVec> sorted = sorted_by(ord, dedup(S));
  Lattice L = M;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || !L.contains(sorted[i])) {
      out.entries.push_back(sorted[i]);
      L = L.join(sorted[i]);
    }
  }
  if (opts.support_lattice) {
    out.complete = L.contains(*opts.support_lattice);
  } else if (!opts.precision) {
    out.complete = true;  // S is the whole support and lies in L
  } else {
    std::vector<Rational> inv(h);
    for (std::size_t i = 0; i < h; ++i) inv[i] = Rational(1) / ram[i];
    out.complete = L.contains(Lattice::diagonal(inv));
  }
  out.final_lattice = std::move(L);

  out.certified_prefix = out.entries.size();
  if (opts.precision) {
    // An unseen exponent e has total(e) > T, hence w.e > wmin T; entries with
    // w.eps <= wmin T therefore precede all of them.
    out.certified_prefix = 0;
    if (auto w = ord.leading_weights()) {
      Rational wmin = *std::min_element(w->begin(), w->end());
      for (const auto& e : out.entries) {
        Rational we;
        for (std::size_t i = 0; i < h; ++i) we += (*w)[i] * e[i];
        if (we > wmin * *opts.precision) break;
        ++out.certified_prefix;
      }
    }
  }
  out.truncation_safe = out.certified_prefix == out.entries.size();
  return out;
}

EssentialSequence essential_exponents_p(const std::vector<Rational>& S, const Rational& p,
                                        std::int64_t declared_ramification) {
  if (p.sign() <= 0) throw PreconditionError("p must be positive");
  EssOptions o;
  o.ramification = std::vector<std::int64_t>{declared_ramification};
  Integer n(static_cast<long>(declared_ramification));
  for (const auto& r : S) n = lcm(n, r.denominator());
  o.support_lattice = Lattice::multiples(Rational(Integer(1), n));
  return essential_exponents(as_vectors(S), Lattice::multiples(p), AdditiveOrder::lex(1), o);
}

EssentialSequence essential_exponents(const PuiseuxSeries& s, const Lattice& M, const AdditiveOrder& ord,
                                      std::optional<Lattice> support_lattice) {
  EssOptions o;
  o.support_lattice = std::move(support_lattice);
  o.ramification = s.ramification();
  o.precision = s.precision();
  return essential_exponents(s.support(), M, ord, o);
}

std::vector<ExponentVec> drop_integral_head(const std::vector<ExponentVec>& entries) {
  if (!entries.empty() && entries.front().is_integral()) return {entries.begin() + 1, entries.end()};
  return entries;
}

CharacteristicSequence characteristic_exponents(const PuiseuxSeries& psi) {
  if (psi.num_vars() != 1) throw DimensionMismatch("characteristic exponents need one variable");
  if (psi.is_zero()) throw PreconditionError("characteristic exponents of the zero series");
  if (!psi.constant_term().is_zero()) throw PreconditionError("characteristic exponents need a zero constant term");
  CharacteristicSequence out;
  Integer N = 1;
  for (const auto& e : psi.support()) {
    if (!(e[0] * Rational(N)).is_integer()) out.entries.push_back(e[0]);
    N = lcm(N, e[0].denominator());
  }
  out.complete = N == Integer(static_cast<long>(psi.ramification()[0]));

  auto ess = essential_exponents(psi, Lattice::standard(1), AdditiveOrder::lex(1));
  if (first_coords(drop_integral_head(ess.entries)) != out.entries)
    throw std::logic_error("characteristic exponents disagree with the essential sequence relative to 1");
  return out;
}

bool semigroup_member_oracle(const std::vector<ExponentVec>& S, const ExponentVec& v, int max_terms,
                             std::size_t budget) {
  std::size_t h = v.size();
  std::vector<ExponentVec> gens;
  for (const auto& s : dedup(S)) {
    require_dim(s, h, "semigroup oracle");
    if (!s.is_zero()) gens.push_back(s);
  }
  require_nonneg(gens);
  std::size_t states = 0;
  auto dfs = [&](auto&& self, const ExponentVec& rest, std::size_t from, int used) -> bool {
    if (++states > budget) throw PreconditionError("semigroup oracle exceeded its enumeration budget");
    if (used > 0 && rest.is_zero()) return true;
    if (used == max_terms) return false;
    for (std::size_t i = from; i < gens.size(); ++i)
      if (gens[i].leq_coordinatewise(rest) && self(self, rest - gens[i], i, used + 1)) return true;
    return false;
  };
  if (v.is_zero() || !v.is_nonneg()) return false;
  return dfs(dfs, v, 0, 0);
}

}  // namespace npinv
