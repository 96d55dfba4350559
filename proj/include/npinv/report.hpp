#pragma once

#include <string>
#include <vector>

#include "npinv/exponent.hpp"

namespace npinv {

struct CheckFailure {
  std::string check;
  ExponentVec exponent;
  Rational lhs;
  Rational rhs;
  std::string note;
};

/// Outcome of an identity check. Failures are data; nothing here throws.
struct CheckReport {
  std::string name;
  std::vector<ExponentVec> checked_exponents;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;
  bool provisional = false;

  bool all_passed() const { return failures.empty(); }

  /// Records e as checked and a failure when lhs != rhs.
  bool expect_equal(const std::string& check, const ExponentVec& e, const Rational& lhs, const Rational& rhs);
  void fail(const std::string& check, const ExponentVec& e, const std::string& note);
  void merge(const CheckReport& other);
};

}  // namespace npinv
