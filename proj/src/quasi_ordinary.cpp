#include "npinv/quasi_ordinary.hpp"

#include <set>

#include "npinv/error.hpp"

namespace npinv {

std::string to_string(QoAnswer a) {
  switch (a) {
    case QoAnswer::yes:
      return "yes";
    case QoAnswer::no:
      return "no";
    default:
      return "unknown";
  }
}

namespace {

// Z^h + sum of the candidates coordinatewise below lambda
Lattice lattice_below(const std::vector<ExponentVec>& cands, const ExponentVec& lambda) {
  std::vector<ExponentVec> below;
  for (const auto& c : cands)
    if (c.leq_coordinatewise(lambda)) below.push_back(c);
  return Lattice::standard(lambda.size()).join(below);
}

ExponentVec largest_below(const std::vector<ExponentVec>& cands, const ExponentVec& lambda) {
  ExponentVec best = ExponentVec::zero(lambda.size());
  for (const auto& c : cands)
    if (c.leq_coordinatewise(lambda)) best = c;
  return best;
}

std::optional<QoWitness> find_violation(const std::vector<ExponentVec>& cands, const std::vector<ExponentVec>& S) {
  for (std::size_t i = 0; i + 1 < cands.size(); ++i)
    if (!cands[i].leq_coordinatewise(cands[i + 1]))
      return QoWitness{3, cands[i], cands[i + 1], cands[i].str() + " and " + cands[i + 1].str() + " are incomparable"};
  std::size_t h = S.front().size();
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::vector<ExponentVec> prev(cands.begin(), cands.begin() + static_cast<long>(i));
    if (Lattice::standard(h).join(prev).contains(cands[i]))
      return QoWitness{4, cands[i], ExponentVec::zero(h), cands[i].str() + " lies in the lattice of its predecessors"};
  }
  for (const auto& l : S)
    if (!lattice_below(cands, l).contains(l))
      return QoWitness{2, l, largest_below(cands, l),
                       l.str() + " is not in Z^h plus the lattice of the candidates below it"};
  return std::nullopt;
}

}  // namespace

bool witness_holds(const QoWitness& w, const std::vector<ExponentVec>& candidates) {
  std::size_t h = w.first.size();
  switch (w.condition) {
    case 2:
      return !lattice_below(candidates, w.first).contains(w.first);
    case 3:
      return !w.first.leq_coordinatewise(w.second) && !w.second.leq_coordinatewise(w.first);
    case 4: {
      std::vector<ExponentVec> prev;
      for (const auto& c : candidates) {
        if (c == w.first) return Lattice::standard(h).join(prev).contains(c);
        prev.push_back(c);
      }
      return false;
    }
    default:
      return false;
  }
}

QOVerdict qo_test(const PuiseuxSeries& psi) {
  if (psi.is_zero()) throw PreconditionError("quasi-ordinary test of the zero series");
  const std::size_t h = psi.num_vars();
  QOVerdict v;
  v.order = psi.is_exact() ? AdditiveOrder::lex(h) : AdditiveOrder::graded(h);
  auto ess = essential_exponents(psi, Lattice::standard(h), v.order);
  v.char_exponents = drop_integral_head(ess.entries);
  std::vector<ExponentVec> S = psi.support();
  if (h == 1) {
    v.is_qo = QoAnswer::yes;
    v.certified = ess.certified();
    return v;
  }
  v.witness = find_violation(v.char_exponents, S);
  if (v.witness) {
    // Every stored entry is final (see the order choice), and condition 2 only
    // involves candidates below a stored exponent, so the failure is definitive.
    v.is_qo = QoAnswer::no;
    v.certified = true;
    v.char_exponents.clear();
    return v;
  }
  if (psi.is_exact() && ess.certified()) {
    v.is_qo = QoAnswer::yes;
    v.certified = true;
  } else {
    v.is_qo = QoAnswer::unknown;
    v.notes.push_back("conditions hold on the stored support; terms beyond precision " +
                      (psi.precision() ? psi.precision()->str() : std::string("?")) + " are not covered");
  }
  return v;
}

PuiseuxSeries toric_pullback(const PuiseuxSeries& psi, const Matrix& q_sigma) {
  if (!q_sigma.is_integral() || !q_sigma.is_nonneg())
    throw PreconditionError("chart matrix must have non-negative integer entries");
  return monomial_substitute(psi, q_sigma);
}

CheckReport verify_qsigma_relation(const PuiseuxSeries& psi, const Matrix& q, const AdditiveOrder& ord) {
  if (!q.is_unimodular() || !q.is_nonneg())
    throw PreconditionError("chart matrix must be unimodular with non-negative entries");
  const std::size_t h = psi.num_vars();
  CheckReport rep;
  rep.name = "q_sigma relation";
  PuiseuxSeries sigma = toric_pullback(psi, q);
  std::vector<ExponentVec> rhs_set = sigma.support();
  std::set<ExponentVec, ExponentStorageLess> kept(rhs_set.begin(), rhs_set.end());
  std::vector<ExponentVec> lhs_set;
  for (const auto& e : psi.support())
    if (kept.count(q * e)) lhs_set.push_back(e);
  if (lhs_set.empty()) {
    rep.notes.push_back("empty support");
    return rep;
  }
  auto lhs = essential_exponents(lhs_set, Lattice::standard(h), order_compose(ord, q));
  auto rhs = essential_exponents(rhs_set, Lattice::standard(h), ord);
  if (lhs.length() != rhs.length())
    rep.fail("length", ExponentVec::zero(h),
             std::to_string(lhs.length()) + " vs " + std::to_string(rhs.length()) + " entries");
  for (std::size_t k = 0; k < std::min(lhs.length(), rhs.length()); ++k) {
    ExponentVec img = q * lhs.entries[k];
    rep.checked_exponents.push_back(rhs.entries[k]);
    if (img != rhs.entries[k]) rep.fail("q(ess_k) = ess_k(psi_sigma)", rhs.entries[k], "image " + img.str());
  }
  return rep;
}

}  // namespace npinv
