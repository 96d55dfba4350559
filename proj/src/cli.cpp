#include "npinv/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "npinv/corpus.hpp"
#include "npinv/duality.hpp"
#include "npinv/error.hpp"
#include "npinv/inversion.hpp"
#include "npinv/json_io.hpp"
#include "npinv/quasi_ordinary.hpp"

namespace npinv::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct Options {
  std::string input;
  std::string precision;
  std::string order = "lex";
  std::string lattice = "zh";
  std::string root_coeff;
  std::string matrix;
  std::string target;
  std::string check = "all";
  std::vector<std::string> params;
  std::vector<long> qs;
  long power = 3;
  std::size_t vars = 0;
  bool json = false;
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool is_file(const std::string& s) {
  if (s.empty() || s.find('\n') != std::string::npos) return false;
  std::ifstream f(s);
  return f.good();
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), 0);
  }
}

// FILE, or inline JSON when it starts with '['
json json_argument(const std::string& s) {
  std::string t = s;
  auto first = t.find_first_not_of(" \t");
  if (first != std::string::npos && (t[first] == '[' || t[first] == '{')) return parse_json_text(t);
  return parse_json_text(slurp(s));
}

std::optional<Rational> precision_of(const Options& o) {
  if (o.precision.empty()) return Rational(10);
  if (o.precision == "inf") return std::nullopt;
  return Rational::parse(o.precision);
}

PuiseuxSeries read_series(const Options& o, bool laurent = false) {
  std::string text = is_file(o.input) ? slurp(o.input) : o.input;
  for (const auto& p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects name=p/q, got " + p, 0);
    std::string name = p.substr(0, eq), value = p.substr(eq + 1);
    Rational::parse(value);
    text = substitute_param(text, name, value);
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    auto s = series_from_json(parse_json_text(text));
    return laurent ? s.with_laurent(true) : s;
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  ParseOptions po;
  po.num_vars = o.vars ? o.vars : infer_num_vars(text);
  po.default_precision = precision_of(o);
  po.laurent_ok = laurent;
  return parse_series(text, po);
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
  return v;
}

AdditiveOrder read_order(const Options& o, std::size_t h) {
  AdditiveOrder ord = AdditiveOrder::lex(h);
  if (o.order == "lex") {
    ord = AdditiveOrder::lex(h);
  } else if (o.order == "graded") {
    ord = AdditiveOrder::graded(h);
  } else if (o.order.rfind("weights:", 0) == 0) {
    ord = AdditiveOrder::weight_lex(parse_list(o.order.substr(8)));
  } else if (o.order.rfind("matrix:", 0) == 0) {
    ord = order_from_json(json_argument(o.order.substr(7)));
  } else {
    throw ParseError("unknown order '" + o.order + "' (lex, graded, weights:..., matrix:FILE)", 0);
  }
  if (ord.dim() != h) throw DimensionMismatch("order has dimension " + std::to_string(ord.dim()) + ", series has " +
                                              std::to_string(h) + " variables");
  if (!ord.accepted()) throw PreconditionError("order does not dominate the positive orthant");
  return ord;
}

Lattice read_lattice(const Options& o, std::size_t h) {
  if (o.lattice == "zh") return Lattice::standard(h);
  if (o.lattice.rfind("matrix:", 0) == 0) {
    std::vector<ExponentVec> gens;
    for (const auto& row : json_argument(o.lattice.substr(7))) {
      gens.push_back(exponent_from_json(row));
      require_dim(gens.back(), h, "lattice generator");
    }
    return Lattice(h, gens);
  }
  throw ParseError("unknown lattice '" + o.lattice + "' (zh, matrix:FILE)", 0);
}

std::optional<Rational> optional_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Rational::parse(s);
}

std::string seq_str(const std::vector<ExponentVec>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string ess_line(const EssentialSequence& e) {
  std::string s = seq_str(e.entries) + "  complete: " + (e.complete ? "yes" : "no");
  if (!e.truncation_safe) s += "  certified entries: " + std::to_string(e.certified_prefix);
  return s;
}

std::string ram_str(const std::vector<std::int64_t>& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? ", " : "") + std::to_string(n[i]);
  return s + ")";
}

std::string prec_str(const std::optional<Rational>& T) { return T ? T->str() : "exact"; }

void print_report(std::ostream& out, const CheckReport& r) {
  out << r.name << ": " << (r.all_passed() ? "passed" : "FAILED") << (r.provisional ? " (provisional)" : "") << ", "
      << r.checked_exponents.size() << " exponents checked\n";
  for (const auto& f : r.failures) {
    out << "  FAIL " << f.check << " at " << f.exponent.str();
    if (f.note.empty())
      out << ": " << f.lhs.str() << " != " << f.rhs.str();
    else
      out << ": " << f.note;
    out << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

std::vector<std::string> names_for(std::size_t h, const char* single, const char* prefix) {
  if (h == 1) return {single};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= h; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  auto s = read_series(o);
  const std::size_t h = s.num_vars();
  auto ord = read_order(o, h);
  auto M = read_lattice(o, h);
  if (s.is_zero()) throw PreconditionError("the zero series has no essential exponents");
  auto ess = essential_exponents(s, M, ord);
  auto irr = irreducible_exponents(s.support());
  std::optional<CharacteristicSequence> chars;
  if (h == 1 && s.constant_term().is_zero()) chars = characteristic_exponents(s);
  if (o.json) {
    json j = {{"series", to_json(s)}, {"essential", to_json(ess)}, {"irreducible", exponent_set_to_json(irr)}};
    if (chars) {
      json c = json::array();
      for (const auto& r : chars->entries) c.push_back(to_json(r));
      j["characteristic"] = {{"entries", c}, {"complete", chars->complete}};
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "series: " << s.str() << "\n";
  out << "variables: " << h << "  ramification: " << ram_str(s.ramification())
      << "  precision: " << prec_str(s.precision()) << "\n";
  out << "irreducible exponents: " << seq_str(irr) << "\n";
  out << "essential exponents: " << ess_line(ess) << "\n";
  if (chars) {
    std::vector<ExponentVec> c;
    for (const auto& r : chars->entries) c.push_back(ExponentVec{r});
    out << "characteristic exponents: " << seq_str(c) << "  complete: " << (chars->complete ? "yes" : "no") << "\n";
    out << "essential minus integral head: " << seq_str(drop_integral_head(ess.entries)) << "\n";
  }
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  auto s = read_series(o);
  auto cap = optional_rational(o.target);
  if (s.is_exact() && !cap && s.size() > 1)
    throw PreconditionError("exact input has an infinite dual; give --target or a finite --precision");
  auto d = dual(s, cap);
  if (o.json) {
    out << json{{"phi", to_json(s)}, {"dual", to_json(d)}}.dump(2) << "\n";
    return kOk;
  }
  out << "dual: " << d.str(names_for(s.num_vars(), "u", "u")) << "\n";
  return kOk;
}

BranchData branch_of(const Options& o) {
  auto eta = read_series(o);
  auto target = optional_rational(o.target);
  std::optional<Rational> cap;
  if (eta.is_exact()) {
    if (!target) throw PreconditionError("exact input needs --target (xi precision in u)");
    cap = *target - Rational(eta.ramification()[0]);
  }
  return extract_branch(eta, optional_rational(o.root_coeff), cap);
}

int cmd_invert(const Options& o, std::ostream& out) {
  auto b = branch_of(o);
  InversionOptions io;
  io.target_precision = optional_rational(o.target);
  io.order = read_order(o, b.eta.num_vars());
  auto r = invert_branch(b, io);
  const std::size_t h = r.eta.num_vars();
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    auto ynames = names_for(h, "y", "x");
    ynames[0] = h == 1 ? "y" : "y1";
    out << "eta: " << r.eta.str() << "\n";
    out << "m1: " << r.m1 << "  n: " << ram_str(r.n) << "  root coefficient: " << r.root_coeff.str() << "\n";
    out << "xi: " << r.xi.str(ynames) << "\n";
    out << "ess(eta): " << ess_line(r.ess_eta) << "\n";
    out << "ess(xi): " << ess_line(r.ess_xi) << "\n";
    print_report(out, r.checks);
  }
  return r.checks.all_passed() ? kOk : kFailed;
}

int cmd_lagrange(const Options& o, std::ostream& out) {
  if (o.qs.empty()) throw PreconditionError("lagrange needs at least one --q");
  auto b = branch_of(o);
  const std::size_t h = b.eta.num_vars();
  json j = json::array();
  for (long q : o.qs) {
    if (h == 1) {
      Rational c = lagrange_coefficient(b, q);
      if (o.json)
        j.push_back({{"q", q}, {"coefficient", to_json(c)}});
      else
        out << "[xi]_" << q << " (y^(" << Rational(q, b.m1).str() << ")): " << c.str() << "\n";
    } else {
      auto slice = lagrange_slice(b, q, b.unit.precision());
      if (o.json)
        j.push_back({{"q", q}, {"slice", to_json(slice)}});
      else
        out << "u1^" << q << " slice: " << slice.str(names_for(h, "t", "t")) << "\n";
    }
  }
  if (o.json) out << j.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto s = read_series(o);
  const bool invertible = !s.constant_term().is_zero();
  std::vector<CheckReport> reports;
  auto want = [&](const char* c) { return o.check == "all" || o.check == c; };
  if (o.check != "all" && o.check != "dual" && o.check != "power" && o.check != "hs")
    throw ParseError("unknown --check '" + o.check + "' (dual, power, hs, all)", 0);
  auto cap = optional_rational(o.target);
  if (invertible) {
    if (want("dual")) reports.push_back(verify_dual_identity(s, cap ? cap : s.precision()));
    if (want("power")) reports.push_back(verify_power_identity(s, o.power));
    if (o.check == "hs") throw PreconditionError("Halphen-Stolz checks need a series with zero constant term");
  } else {
    if (o.check == "dual" || o.check == "power")
      throw PreconditionError("dual and power identities need a nonzero constant term");
    Options bo = o;
    auto b = branch_of(bo);
    InversionOptions io;
    io.target_precision = cap;
    io.order = read_order(o, s.num_vars());
    reports.push_back(invert_branch(b, io).checks);
  }
  bool ok = true;
  json j = json::array();
  for (const auto& r : reports) {
    ok = ok && r.all_passed();
    if (o.json)
      j.push_back(to_json(r));
    else
      print_report(out, r);
  }
  if (o.json) out << j.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

int cmd_qo(const Options& o, std::ostream& out) {
  auto s = read_series(o);
  auto v = qo_test(s);
  if (o.json) {
    out << to_json(v).dump(2) << "\n";
    return kOk;
  }
  out << "quasi-ordinary: " << to_string(v.is_qo) << (v.certified ? " (certified)" : "") << "\n";
  if (!v.char_exponents.empty() || v.is_qo == QoAnswer::yes)
    out << "characteristic exponents: " << seq_str(v.char_exponents) << "\n";
  if (v.witness) out << "witness: condition " << v.witness->condition << ", " << v.witness->description << "\n";
  for (const auto& n : v.notes) out << "note: " << n << "\n";
  return kOk;
}

int cmd_toric(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.matrix.empty()) throw PreconditionError("toric needs --matrix");
  auto s = read_series(o);
  Matrix q = matrix_from_json(json_argument(o.matrix));
  if (q.size() != s.num_vars()) throw DimensionMismatch("matrix size does not match the number of variables");
  if (!q.is_invertible()) throw PreconditionError("chart matrix is singular");
  auto sigma = toric_pullback(s, q);
  std::optional<CheckReport> rep;
  if (q.is_unimodular())
    rep = verify_qsigma_relation(s, q, read_order(o, s.num_vars()));
  else
    err << "warning: determinant " << q.determinant().str() << " is not +-1, the cone is not regular\n";
  if (o.json) {
    json j = {{"pullback", to_json(sigma)}};
    j["qsigma"] = rep ? to_json(*rep) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "pullback: " << sigma.str(names_for(s.num_vars(), "v", "v")) << "\n";
    if (rep) print_report(out, *rep);
  }
  return !rep || rep->all_passed() ? kOk : kFailed;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  auto results = run_corpus();
  bool ok = true;
  json j = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (o.json)
      j.push_back({{"id", r.id}, {"passed", r.passed}, {"detail", r.detail}});
    else
      out << (r.passed ? "PASS  " : "FAIL  ") << r.id << "  " << r.description << "\n      " << r.detail << "\n";
  }
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << (ok ? "all " : "some ") << results.size() << " cases " << (ok ? "passed" : "did not pass") << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

std::string substitute_param(const std::string& text, const std::string& name, const std::string& value) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ident_char(text[i]) && !std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string tok = text.substr(i, j - i);
      out += tok == name ? "(" + value + ")" : tok;
      i = j;
    } else {
      out += text[i++];
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton-Puiseux inversion toolkit", "npinv"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("series", o.input, "series text, or a file with text or JSON")->required();
    sub->add_option("--precision", o.precision, "default precision R, or inf for exact input (default 10)");
    sub->add_option("--order", o.order, "lex | graded | weights:w1,...,wh | matrix:FILE");
    sub->add_option("--lattice", o.lattice, "zh | matrix:FILE (rows are generators)");
    sub->add_option("--param", o.params, "name=p/q, substituted before parsing");
    sub->add_option("--vars", o.vars, "number of variables (default: inferred)");
    sub->add_flag("--json", o.json, "JSON output");
  };
  auto* analyze = app.add_subcommand("analyze", "supports, irreducible, essential and characteristic exponents");
  common(analyze, true);
  auto* dualc = app.add_subcommand("dual", "dual series of an invertible series");
  common(dualc, true);
  dualc->add_option("--target", o.target, "precision of the dual (needed for exact input)");
  auto* invert = app.add_subcommand("invert", "invert an x1-dominating branch");
  common(invert, true);
  invert->add_option("--root-coeff", o.root_coeff, "m1-th root of the dominating coefficient");
  invert->add_option("--target", o.target, "precision of xi in (u1, t2, ...)");
  auto* lagrange = app.add_subcommand("lagrange", "Lagrange inversion coefficients");
  common(lagrange, true);
  lagrange->add_option("--q", o.qs, "exponent index q, repeatable")->required();
  lagrange->add_option("--root-coeff", o.root_coeff, "m1-th root of the dominating coefficient");
  lagrange->add_option("--target", o.target, "unit precision for exact input");
  auto* verify = app.add_subcommand("verify", "check dual, power or Halphen-Stolz identities");
  common(verify, true);
  verify->add_option("--check", o.check, "dual | power | hs | all");
  verify->add_option("--power", o.power, "exponent N for the power identity (default 3)");
  verify->add_option("--root-coeff", o.root_coeff, "m1-th root of the dominating coefficient");
  verify->add_option("--target", o.target, "precision cap for exact input");
  auto* qo = app.add_subcommand("qo", "quasi-ordinary test");
  common(qo, true);
  auto* toric = app.add_subcommand("toric", "toric chart pullback and the essential exponent relation");
  common(toric, true);
  toric->add_option("--matrix", o.matrix, "FILE or inline JSON rows; rows are the cone edges")->required();
  auto* corpus = app.add_subcommand("corpus", "run the pinned worked examples");
  corpus->add_flag("--json", o.json, "JSON output");

  static const std::vector<std::string> verbs{"analyze", "dual",   "invert", "lagrange",
                                             "verify",  "qo",     "toric",  "corpus"};
  if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
      std::find(verbs.begin(), verbs.end(), args[0]) == verbs.end()) {
    err << "error: unknown verb '" << args[0] << "'\n" << app.help();
    return kUsage;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (dualc->parsed()) return cmd_dual(o, out);
    if (invert->parsed()) return cmd_invert(o, out);
    if (lagrange->parsed()) return cmd_lagrange(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (qo->parsed()) return cmd_qo(o, out);
    if (toric->parsed()) return cmd_toric(o, out, err);
    if (corpus->parsed()) return cmd_corpus(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace npinv::cli
