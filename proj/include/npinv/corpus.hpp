#pragma once

#include <functional>
#include <string>
#include <vector>

namespace npinv {

struct CorpusCase {
  std::string id;
  std::string description;
  /// Returns true on agreement; detail receives the computed value.
  std::function<bool(std::string& detail)> run;
};

struct CorpusOutcome {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

/// Pinned worked examples with their known values.
const std::vector<CorpusCase>& worked_examples();
std::vector<CorpusOutcome> run_corpus();

}  // namespace npinv
