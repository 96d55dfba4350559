#include "npinv/report.hpp"

#include <algorithm>

namespace npinv {

namespace {

void note_checked(std::vector<ExponentVec>& v, const ExponentVec& e) {
  if (std::find(v.begin(), v.end(), e) == v.end()) v.push_back(e);
}

}  // namespace

bool CheckReport::expect_equal(const std::string& check, const ExponentVec& e, const Rational& lhs,
                               const Rational& rhs) {
  note_checked(checked_exponents, e);
  if (lhs == rhs) return true;
  failures.push_back({check, e, lhs, rhs, ""});
  return false;
}

void CheckReport::fail(const std::string& check, const ExponentVec& e, const std::string& note) {
  note_checked(checked_exponents, e);
  failures.push_back({check, e, Rational(0), Rational(0), note});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& e : other.checked_exponents) note_checked(checked_exponents, e);
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  provisional = provisional || other.provisional;
}

}  // namespace npinv
