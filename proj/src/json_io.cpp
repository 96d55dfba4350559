#include "npinv/json_io.hpp"

#include "npinv/error.hpp"

namespace npinv {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational string", 0);
  return Rational::parse(j.get<std::string>());
}

json to_json(const ExponentVec& e) {
  json a = json::array();
  for (std::size_t i = 0; i < e.size(); ++i) a.push_back(to_json(e[i]));
  return a;
}

ExponentVec exponent_from_json(const json& j) {
  if (!j.is_array()) return ExponentVec{rational_from_json(j)};
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return ExponentVec(std::move(c));
}

json exponent_set_to_json(const std::vector<ExponentVec>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.size() == 1 ? to_json(e[0]) : to_json(e));
  return a;
}

std::vector<ExponentVec> exponent_set_from_json(const json& j, std::size_t h) {
  std::vector<ExponentVec> out;
  for (const auto& x : j) {
    out.push_back(exponent_from_json(x));
    require_dim(out.back(), h, "exponent set");
  }
  return out;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) a.push_back(to_json(ExponentVec(m.row(i))));
  return a;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows", 0);
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(exponent_from_json(r).coords());
  return Matrix::from_rows(rows);
}

json to_json(const Lattice& l) { return {{"dim", l.dim()}, {"basis", exponent_set_to_json(l.basis())}}; }

Lattice lattice_from_json(const json& j) {
  std::size_t h = j.at("dim").get<std::size_t>();
  return Lattice(h, exponent_set_from_json(j.at("basis"), h));
}

namespace {

const char* kind_name(AdditiveOrder::Kind k) {
  switch (k) {
    case AdditiveOrder::Kind::lex:
      return "lex";
    case AdditiveOrder::Kind::weight_lex:
      return "weight_lex";
    default:
      return "composed";
  }
}

}  // namespace

json to_json(const AdditiveOrder& o) { return {{"kind", kind_name(o.kind())}, {"matrix", to_json(o.matrix())}}; }

AdditiveOrder order_from_json(const json& j) {
  Matrix m = matrix_from_json(j.is_object() ? j.at("matrix") : j);
  std::string kind = j.is_object() ? j.value("kind", "composed") : "composed";
  if (kind == "lex" && m == Matrix::identity(m.size())) return AdditiveOrder::lex(m.size());
  if (kind == "weight_lex") {
    auto o = AdditiveOrder::weight_lex(m.row(0));
    if (o.matrix() == m) return o;
  }
  return AdditiveOrder::from_matrix(m);
}

json to_json(const PuiseuxSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back({{"exp", to_json(t.exp)}, {"coef", to_json(t.coef)}});
  json j = {{"vars", s.num_vars()}, {"ramification", s.ramification()}, {"terms", terms}};
  j["precision"] = s.precision() ? to_json(*s.precision()) : json(nullptr);
  if (s.laurent_ok()) j["laurent"] = true;
  return j;
}

PuiseuxSeries series_from_json(const json& j) {
  std::size_t h = j.at("vars").get<std::size_t>();
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    ExponentVec e = exponent_from_json(t.at("exp"));
    require_dim(e, h, "series term");
    terms.push_back({e, rational_from_json(t.at("coef"))});
  }
  if (j.contains("ramification")) {
    auto n = j.at("ramification").get<std::vector<std::int64_t>>();
    if (n.size() != h) throw DimensionMismatch("ramification has the wrong length");
    for (const auto& t : terms)
      for (std::size_t i = 0; i < h; ++i)
        if (!(t.exp[i] * Rational(n[i])).is_integer())
          throw PreconditionError("exponent " + t.exp.str() + " does not fit the declared ramification");
  }
  std::optional<Rational> T;
  if (j.contains("precision") && !j.at("precision").is_null()) T = rational_from_json(j.at("precision"));
  return PuiseuxSeries::from_terms(h, terms, T, j.value("laurent", false));
}

json to_json(const EssentialSequence& e) {
  return {{"entries", exponent_set_to_json(e.entries)},
          {"relative_to", to_json(e.relative_to)},
          {"final_lattice", to_json(e.final_lattice)},
          {"order", to_json(e.order)},
          {"complete", e.complete},
          {"certified_prefix", e.certified_prefix},
          {"truncation_safe", e.truncation_safe}};
}

EssentialSequence essential_from_json(const json& j) {
  EssentialSequence e;
  e.relative_to = lattice_from_json(j.at("relative_to"));
  e.entries = exponent_set_from_json(j.at("entries"), e.relative_to.dim());
  e.final_lattice = lattice_from_json(j.at("final_lattice"));
  e.order = order_from_json(j.at("order"));
  e.complete = j.at("complete").get<bool>();
  e.certified_prefix = j.value("certified_prefix", e.entries.size());
  e.truncation_safe = j.value("truncation_safe", true);
  return e;
}

json to_json(const CheckReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures) {
    json x = {{"check", f.check}, {"exponent", to_json(f.exponent)}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}};
    if (!f.note.empty()) x["note"] = f.note;
    fails.push_back(x);
  }
  json checked = json::array();
  for (const auto& e : r.checked_exponents) checked.push_back(to_json(e));
  return {{"name", r.name},          {"checked_exponents", checked}, {"all_passed", r.all_passed()},
          {"failures", fails},       {"notes", r.notes},             {"provisional", r.provisional}};
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.name = j.value("name", "");
  for (const auto& e : j.at("checked_exponents")) r.checked_exponents.push_back(exponent_from_json(e));
  for (const auto& f : j.at("failures"))
    r.failures.push_back({f.value("check", ""), exponent_from_json(f.at("exponent")), rational_from_json(f.at("lhs")),
                          rational_from_json(f.at("rhs")), f.value("note", "")});
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  r.provisional = j.value("provisional", false);
  return r;
}

json to_json(const QOVerdict& v) {
  json j = {{"is_qo", to_string(v.is_qo)},
            {"char_exponents", exponent_set_to_json(v.char_exponents)},
            {"certified", v.certified},
            {"order", to_json(v.order)},
            {"notes", v.notes}};
  if (v.witness)
    j["witness"] = {{"condition", v.witness->condition},
                    {"first", to_json(v.witness->first)},
                    {"second", to_json(v.witness->second)},
                    {"description", v.witness->description}};
  else
    j["witness"] = nullptr;
  return j;
}

QOVerdict verdict_from_json(const json& j) {
  QOVerdict v;
  std::string a = j.at("is_qo").get<std::string>();
  v.is_qo = a == "yes" ? QoAnswer::yes : a == "no" ? QoAnswer::no : QoAnswer::unknown;
  v.order = order_from_json(j.at("order"));
  v.char_exponents = exponent_set_from_json(j.at("char_exponents"), v.order.dim());
  v.certified = j.at("certified").get<bool>();
  if (j.contains("notes")) v.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const auto& w = j.at("witness");
    v.witness = QoWitness{w.at("condition").get<int>(), exponent_from_json(w.at("first")),
                          exponent_from_json(w.at("second")), w.value("description", "")};
  }
  return v;
}

json to_json(const InversionResult& r) {
  return {{"m1", r.m1},
          {"n1", r.n1},
          {"root_coeff", to_json(r.root_coeff)},
          {"ramification", r.n},
          {"eta", to_json(r.eta)},
          {"xi", to_json(r.xi)},
          {"eta_t", to_json(r.eta_t)},
          {"xi_u", to_json(r.xi_u)},
          {"unit_eta", to_json(r.unit_eta)},
          {"unit_xi", to_json(r.unit_xi)},
          {"ess_eta", to_json(r.ess_eta)},
          {"ess_xi", to_json(r.ess_xi)},
          {"ess_eta_t", to_json(r.ess_eta_t)},
          {"ess_xi_u", to_json(r.ess_xi_u)},
          {"checks", to_json(r.checks)}};
}

InversionResult inversion_from_json(const json& j) {
  InversionResult r;
  r.m1 = j.at("m1").get<long>();
  r.n1 = j.at("n1").get<long>();
  r.root_coeff = rational_from_json(j.at("root_coeff"));
  r.n = j.at("ramification").get<std::vector<std::int64_t>>();
  r.eta = series_from_json(j.at("eta"));
  r.xi = series_from_json(j.at("xi"));
  r.eta_t = series_from_json(j.at("eta_t"));
  r.xi_u = series_from_json(j.at("xi_u"));
  r.unit_eta = series_from_json(j.at("unit_eta"));
  r.unit_xi = series_from_json(j.at("unit_xi"));
  r.ess_eta = essential_from_json(j.at("ess_eta"));
  r.ess_xi = essential_from_json(j.at("ess_xi"));
  r.ess_eta_t = essential_from_json(j.at("ess_eta_t"));
  r.ess_xi_u = essential_from_json(j.at("ess_xi_u"));
  r.checks = report_from_json(j.at("checks"));
  return r;
}

}  // namespace npinv
