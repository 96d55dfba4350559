#pragma once

#include <json.hpp>

#include "npinv/exponents.hpp"
#include "npinv/inversion.hpp"
#include "npinv/quasi_ordinary.hpp"
#include "npinv/report.hpp"
#include "npinv/series.hpp"

namespace npinv {

using json = nlohmann::json;

// Rationals are "p/q" (or "p"). Exponent vectors are arrays of those, except in
// exponent sets with h = 1 where a bare string is used.

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const ExponentVec& e);
ExponentVec exponent_from_json(const json& j);

json exponent_set_to_json(const std::vector<ExponentVec>& v);
std::vector<ExponentVec> exponent_set_from_json(const json& j, std::size_t h);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json to_json(const AdditiveOrder& o);
AdditiveOrder order_from_json(const json& j);

/// {"vars", "ramification", "terms": [{"exp", "coef"}], "precision"}; precision null when exact.
json to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const json& j);

json to_json(const EssentialSequence& e);
EssentialSequence essential_from_json(const json& j);

json to_json(const CheckReport& r);
CheckReport report_from_json(const json& j);

json to_json(const QOVerdict& v);
QOVerdict verdict_from_json(const json& j);

json to_json(const InversionResult& r);
InversionResult inversion_from_json(const json& j);

}  // namespace npinv
