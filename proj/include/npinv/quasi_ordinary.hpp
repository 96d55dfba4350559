#pragma once

#include <optional>
#include <string>

#include "npinv/exponents.hpp"
#include "npinv/report.hpp"
#include "npinv/series.hpp"

namespace npinv {

enum class QoAnswer { yes, no, unknown };
std::string to_string(QoAnswer a);

/// A violated condition of Lipman's characterization.
///   condition 2: `first` (a support element) is outside Z^h + sum_{l_j <= first} Z l_j;
///                `second` is the largest candidate below it (or 0)
///   condition 3: candidates `first` and `second` are consecutive but incomparable
///   condition 4: candidate `first` lies in the lattice of its predecessors
struct QoWitness {
  int condition = 0;
  ExponentVec first;
  ExponentVec second;
  std::string description;
};

struct QOVerdict {
  QoAnswer is_qo = QoAnswer::unknown;
  /// Candidates from the essential sequence with an integral head dropped.
  std::vector<ExponentVec> char_exponents;
  std::optional<QoWitness> witness;
  bool certified = false;
  AdditiveOrder order = AdditiveOrder::lex(1);
  std::vector<std::string> notes;
};

/// Lipman's test. Exact series use lex; truncated ones use the graded order so
/// that every stored essential entry is final. A truncated series never gets a
/// certified "yes": unseen support could still violate condition 2.
QOVerdict qo_test(const PuiseuxSeries& psi);

/// Re-check the witness against the candidates and support it was found on.
bool witness_holds(const QoWitness& w, const std::vector<ExponentVec>& candidates);

/// x^lambda -> v^(q lambda), rows of q being the edge vectors of the cone.
PuiseuxSeries toric_pullback(const PuiseuxSeries& psi, const Matrix& q_sigma);

/// q(ess(psi, Z^h, ord_q)) = ess(psi_sigma, Z^h, ord) for unimodular q.
CheckReport verify_qsigma_relation(const PuiseuxSeries& psi, const Matrix& q_sigma, const AdditiveOrder& ord);

}  // namespace npinv
