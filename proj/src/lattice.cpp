#include "npinv/lattice.hpp"

#include "npinv/error.hpp"

namespace npinv {

namespace {

using Row = std::vector<Integer>;

void axpy(Row& r, const Integer& f, const Row& p) {
  for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * p[j];
}

}  // namespace

Lattice::Lattice(std::size_t h) : h_(h) {}

Lattice::Lattice(std::size_t h, const std::vector<ExponentVec>& generators) : h_(h) {
  Integer s = 1;
  for (const auto& g : generators) {
    require_dim(g, h, "lattice generator");
    for (const auto& x : g) s = lcm(s, x.denominator());
  }
  scale_ = s;
  std::vector<Row> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    Row r(h);
    for (std::size_t j = 0; j < h; ++j) r[j] = (g[j] * Rational(s)).numerator();
    rows.push_back(std::move(r));
  }
  build(std::move(rows));
}

Lattice Lattice::standard(std::size_t h) {
  std::vector<ExponentVec> g;
  for (std::size_t i = 0; i < h; ++i) g.push_back(ExponentVec::unit(h, i));
  return Lattice(h, g);
}

Lattice Lattice::diagonal(const std::vector<Rational>& d) {
  std::vector<ExponentVec> g;
  for (std::size_t i = 0; i < d.size(); ++i) g.push_back(d[i] * ExponentVec::unit(d.size(), i));
  return Lattice(d.size(), g);
}

// Row-style Hermite normal form: echelon rows, positive pivots, entries above a
// pivot reduced into [0, pivot).
void Lattice::build(std::vector<Row> rows) {
  std::size_t top = 0;
  pivots_.clear();
  for (std::size_t c = 0; c < h_ && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool others = false;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer f;
        mpz_tdiv_q(f.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
        axpy(rows[r], f, rows[top]);
        if (rows[r][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
      axpy(rows[r], f, rows[top]);
    }
    pivots_.push_back(c);
    ++top;
  }
  rows.resize(top);
  basis_ = std::move(rows);
}

std::vector<ExponentVec> Lattice::basis() const {
  std::vector<ExponentVec> out;
  for (const auto& r : basis_) {
    ExponentVec v(h_);
    for (std::size_t j = 0; j < h_; ++j) v[j] = Rational(r[j], scale_);
    out.push_back(std::move(v));
  }
  return out;
}

bool Lattice::contains(const ExponentVec& v) const {
  require_dim(v, h_, "lattice membership");
  Row w(h_);
  for (std::size_t j = 0; j < h_; ++j) {
    Rational x = v[j] * Rational(scale_);
    if (!x.is_integer()) return false;
    w[j] = x.numerator();
  }
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (; col < pivots_[i]; ++col)
      if (w[col] != 0) return false;
    const Integer& p = basis_[i][col];
    if (!mpz_divisible_p(w[col].get_mpz_t(), p.get_mpz_t())) return false;
    Integer f = w[col] / p;
    axpy(w, f, basis_[i]);
    ++col;
  }
  for (; col < h_; ++col)
    if (w[col] != 0) return false;
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.h_ != h_) throw DimensionMismatch("lattice inclusion");
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

Lattice Lattice::join(const std::vector<ExponentVec>& extra) const {
  std::vector<ExponentVec> g = basis();
  for (const auto& e : extra) {
    require_dim(e, h_, "lattice join");
    g.push_back(e);
  }
  return Lattice(h_, g);
}

bool lattice_contains(const Lattice& m, const ExponentVec& v) { return m.contains(v); }
Lattice lattice_join(const Lattice& m, const std::vector<ExponentVec>& extra) { return m.join(extra); }

}  // namespace npinv
