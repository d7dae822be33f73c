#include "qbarnes/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbarnes/chars.hpp"
#include "qbarnes/error.hpp"
#include "qbarnes/fermionic.hpp"
#include "qbarnes/powerseries.hpp"
#include "qbarnes/qeuler.hpp"
#include "qbarnes/verify.hpp"
#include "qbarnes/zeta.hpp"

namespace qbarnes {

namespace {

using Json = nlohmann::ordered_json;

/// Malformed input detected before any computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Params {
  std::string family = "q-euler";
  std::optional<int> n;
  std::optional<std::string> s;
  double sImag = 0.0;
  std::string q = "1/2";
  double qImag = 0.0;
  std::optional<std::string> x;
  double xImag = 0.0;
  std::string w;
  std::string a;
  std::optional<int> r;
  std::optional<int> h;
  std::string chi;
  std::string chiValues;
  std::string backend = "complex";
  std::string method = "closed";
  std::string format = "json";
  int p = 3;
  int K = 10;
  std::string config;
  std::optional<double> tolerance;
  bool noCollapse = false;
  // table
  int nFrom = 0;
  int nTo = 6;
  double sFrom = 0.0;
  double sTo = 0.0;
  double sStep = 1.0;
  // verify
  std::string suite;
  int nMax = 6;
};

const std::vector<std::string> kFamilies{"q-euler",  "q-euler-r",        "q-euler-hr",       "barnes-q-euler",
                                         "q-zeta",   "q-l",              "barnes-classical", "bernoulli-multi",
                                         "euler-classical"};

bool is_degree_family(const std::string& f) {
  return f == "q-euler" || f == "q-euler-r" || f == "q-euler-hr" || f == "barnes-q-euler" ||
         f == "bernoulli-multi" || f == "euler-classical";
}

// ---- parsing ----------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

/// Integers, fractions a/b and finite decimals, all exact.
Rational parse_rational(const std::string& text) {
  const std::string t = text;
  if (t.empty()) throw UsageError("empty number");
  try {
    if (auto slash = t.find('/'); slash != std::string::npos) {
      const Rational num = parse_rational(t.substr(0, slash)), den = parse_rational(t.substr(slash + 1));
      if (denominator(num) != 1 || denominator(den) != 1) throw UsageError("malformed fraction '" + t + "'");
      if (den == 0) throw UsageError("zero denominator in '" + t + "'");
      return num / den;
    }
    std::string digits = t;
    int exponent = 0;
    if (auto e = digits.find_first_of("eE"); e != std::string::npos) {
      exponent = std::stoi(digits.substr(e + 1));
      digits = digits.substr(0, e);
    }
    if (auto dot = digits.find('.'); dot != std::string::npos) {
      exponent -= static_cast<int>(digits.size() - dot - 1);
      digits.erase(dot, 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") throw UsageError("malformed number '" + t + "'");
    if (digits.front() == '+') digits.erase(0, 1);
    // leading zeros would select octal parsing
    const std::size_t lead = digits.front() == '-' ? 1 : 0;
    while (digits.size() > lead + 1 && digits[lead] == '0') digits.erase(lead, 1);
    Rational v{BigInt(digits)};
    const Rational ten(10);
    return exponent >= 0 ? v * int_pow(ten, exponent) : v / int_pow(ten, -exponent);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("malformed number '" + t + "'");
  }
}

double parse_double(const std::string& text) { return parse_rational(text).convert_to<double>(); }

long long parse_integer(const std::string& text, const char* what) {
  const Rational v = parse_rational(text);
  if (denominator(v) != 1) throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  return numerator(v).convert_to<long long>();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_rational(item));
  return out;
}

Complex parse_char_value(const std::string& t) {
  if (t == "i" || t == "+i") return {0.0, 1.0};
  if (t == "-i") return {0.0, -1.0};
  return parse_double(t);
}

std::optional<DirichletChar> parse_character(const Params& P) {
  if (!P.chi.empty() && !P.chiValues.empty()) throw UsageError("give either --chi or --chi-values, not both");
  if (!P.chi.empty()) {
    const auto parts = split(P.chi, ':');
    if (parts.size() != 2) throw UsageError("--chi expects f:index");
    return character(static_cast<int>(parse_integer(parts[0], "modulus")),
                     static_cast<int>(parse_integer(parts[1], "character index")));
  }
  if (!P.chiValues.empty()) {
    std::vector<Complex> values;
    for (const std::string& item : split(P.chiValues, ',')) values.push_back(parse_char_value(item));
    return DirichletChar::from_values(values);
  }
  return std::nullopt;
}

void apply_config_file(const std::string& path, SumConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineNo) + ": expected key=value");
    const std::string key = split(line.substr(0, eq), ',').at(0);
    std::string value = line.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t\r") + 1);
    if (key == "tolerance") cfg.tolerance = parse_double(value);
    else if (key == "abelTolerance") cfg.abelTolerance = parse_double(value);
    else if (key == "maxTermsPerAxis") cfg.maxTermsPerAxis = static_cast<int>(parse_integer(value, key.c_str()));
    else if (key == "maxTermsPerAxisAbel")
      cfg.maxTermsPerAxisAbel = static_cast<int>(parse_integer(value, key.c_str()));
    else if (key == "richardsonOrder") cfg.richardsonOrder = static_cast<int>(parse_integer(value, key.c_str()));
    else if (key == "workBudget") cfg.workBudget = static_cast<std::uint64_t>(parse_integer(value, key.c_str()));
    else if (key == "collapse") cfg.collapse = (value == "true" || value == "1");
    else if (key == "abelSchedule") {
      cfg.abelSchedule.clear();
      for (const std::string& k : split(value, ',')) cfg.abelSchedule.push_back(static_cast<int>(parse_integer(k, "k")));
    } else {
      throw UsageError(path + ":" + std::to_string(lineNo) + ": unknown key '" + key + "'");
    }
  }
}

SumConfig sum_config(const Params& P) {
  SumConfig cfg;
  if (const char* env = std::getenv("QBARNES_WORK_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) cfg.workBudget = v;
  }
  if (!P.config.empty()) apply_config_file(P.config, cfg);
  if (P.tolerance) cfg.tolerance = *P.tolerance;
  if (P.noCollapse) cfg.collapse = false;
  return cfg;
}

// ---- evaluation ---------------------------------------------------------------

struct Outcome {
  Json value;
  std::string method;
  std::optional<double> certifiedError;
  std::uint64_t termsUsed = 0;
  std::optional<double> errorEstimate;
};

/// Abel extrapolation only yields an agreement estimate, not a bound.
Outcome with_error(Json value, SumMethod method, double error, std::uint64_t terms, bool certified = true) {
  Outcome o{std::move(value), std::string(method_name(method)), std::nullopt, terms, std::nullopt};
  if (method == SumMethod::abel || !certified) o.errorEstimate = error;
  else o.certifiedError = error;
  return o;
}

std::string x_text(const Params& P) {
  if (P.x) return *P.x;
  return (P.family == "q-zeta" || P.family == "q-l") ? "1" : "0";
}

Json complex_json(Complex v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

Json rational_json(const Rational& v) {
  return Json{{"num", numerator(v).str()}, {"den", denominator(v).str()}};
}

Json padic_json(const PadicNum& v) {
  return Json{{"p", v.prime()}, {"K", v.precision()}, {"residue", v.digits()}};
}

BarnesSpec complex_spec(const Params& P, const std::optional<DirichletChar>& chi) {
  const Complex x(parse_double(x_text(P)), P.xImag);
  const std::string& f = P.family;
  BarnesSpec spec;
  if (f == "q-euler") {
    spec = spec_q_euler(x);
  } else if (f == "q-euler-r") {
    spec = spec_q_euler_r(P.r.value_or(1), x);
  } else if (f == "q-euler-hr") {
    if (!P.h) throw UsageError("q-euler-hr needs --h");
    spec = spec_q_euler_hr(*P.h, P.r.value_or(1), x);
  } else {
    const std::vector<Rational> w = P.w.empty() ? std::vector<Rational>{Rational(1)} : parse_rational_list(P.w);
    for (const Rational& wj : w) spec.w.push_back(wj.convert_to<double>());
    spec.x = x;
    if (P.a.empty()) spec.a.assign(w.size(), 0);
    else
      for (const std::string& item : split(P.a, ',')) spec.a.push_back(static_cast<int>(parse_integer(item, "twist")));
  }
  if (P.r && (f == "barnes-q-euler" || f == "q-zeta" || f == "q-l") && *P.r != spec.order())
    throw UsageError("--r disagrees with the number of weights");
  if (spec.a.size() != spec.w.size()) throw UsageError("--w and --a need the same length");
  spec.chi = chi;
  return spec;
}

ExactBarnesSpec exact_spec(const BarnesSpec& spec, const Params& P) {
  ExactBarnesSpec e;
  for (const Rational& wj : P.w.empty() ? std::vector<Rational>(spec.w.size(), Rational(1)) : parse_rational_list(P.w)) {
    if (denominator(wj) != 1) throw UsageError("exact backends need integer weights");
    e.w.push_back(numerator(wj).convert_to<long long>());
  }
  if (P.family == "q-euler" || P.family == "q-euler-r" || P.family == "q-euler-hr")
    e.w.assign(spec.w.size(), 1);
  e.a.assign(spec.a.begin(), spec.a.end());
  e.x = parse_integer(x_text(P), "x (exact backends)");
  e.chi = spec.chi;
  return e;
}

Outcome eval_q_euler(const Params& P, int n, const SumConfig& cfg) {
  const auto chi = parse_character(P);
  const BarnesSpec spec = complex_spec(P, chi);
  spec.validate();
  if (P.backend == "rational") {
    const ExactBarnesSpec e = exact_spec(spec, P);
    return {rational_json(q_euler_closed_exact(n, e, parse_rational(P.q))), "CLOSED", std::nullopt, 0, std::nullopt};
  }
  if (P.backend == "padic") {
    const ExactBarnesSpec e = exact_spec(spec, P);
    if (chi && !chi->is_real()) throw UsageError("p-adic backend needs a real character");
    const PadicNum q = PadicNum::from_rational(P.p, P.K, parse_rational(P.q));
    const PadicNum x = PadicNum::from_rational(P.p, P.K, parse_rational(x_text(P)));
    FermionicConfig fc;
    fc.maxOrder = std::max(fc.maxOrder, spec.order());
    const FermionicResult res = fermionic_integral_multi(BarnesIntegrand{q, x, e.w, e.a, n, chi}, P.K, fc);
    return {padic_json(res.value), "FERMIONIC", std::nullopt, res.points, std::nullopt};
  }
  const ComplexQ q(Complex(parse_double(P.q), P.qImag));
  if (P.method == "closed") return {complex_json(q_euler_closed(n, spec, q)), "CLOSED", std::nullopt, 0, std::nullopt};
  if (P.method == "series") {
    const SeriesResult res = q_euler_series(n, spec, q, cfg);
    return with_error(complex_json(res.value()), res.method, res.error(), res.termsUsed);
  }
  if (P.method == "genfun")
    return {complex_json(q_euler_genfun_coefficient(n, spec, q, 0.5, 32, cfg)), "GENFUN", std::nullopt, 0, std::nullopt};
  throw UsageError("unknown --method '" + P.method + "' (closed, series, genfun)");
}

Outcome eval_family(const Params& P, std::optional<int> n, std::optional<std::string> s, const SumConfig& cfg) {
  const std::string& f = P.family;
  if (is_degree_family(f) && !n) throw UsageError("family " + f + " needs --n");
  if (!is_degree_family(f) && !s) throw UsageError("family " + f + " needs --s");
  if (n && *n < 0) throw UsageError("--n must be >= 0");

  if (f == "bernoulli-multi") {
    const auto a = parse_rational_list(P.a.empty() ? "1" : P.a);
    return {rational_json(barnes_bernoulli(*n, parse_rational(x_text(P)), a, std::max(kDefaultOrderBudget, *n))),
            "SERIES", std::nullopt, 0, std::nullopt};
  }
  if (f == "euler-classical") {
    const auto w = parse_rational_list(P.w.empty() ? "1" : P.w);
    return {rational_json(euler_multi_classical(*n, parse_rational(x_text(P)), w, std::max(kDefaultOrderBudget, *n))),
            "SERIES", std::nullopt, 0, std::nullopt};
  }
  if (f == "barnes-classical") {
    const std::vector<Rational> a = parse_rational_list(P.a.empty() ? "1" : P.a);
    const std::string shift = P.w.empty() ? "1" : P.w;
    const Rational sr = parse_rational(*s);
    if (P.sImag == 0.0 && denominator(sr) == 1 && sr <= 0) {
      const Rational v = barnes_zeta_negative(static_cast<int>(numerator(Rational(-sr)).convert_to<long long>()), parse_rational(shift), a);
      if (P.backend == "rational") return {rational_json(v), "BERNOULLI", std::nullopt, 0, std::nullopt};
      return {complex_json(v.convert_to<double>()), "BERNOULLI", std::nullopt, 0, std::nullopt};
    }
    std::vector<double> ad;
    for (const Rational& aj : a) ad.push_back(aj.convert_to<double>());
    const ZetaPoint z = barnes_zeta_classical(Complex(sr.convert_to<double>(), P.sImag), parse_double(shift), ad);
    return with_error(complex_json(z.value), z.method, z.certifiedError, z.termsUsed, z.certified);
  }
  if (f == "q-zeta" || f == "q-l") {
    const auto chi = parse_character(P);
    if (f == "q-l" && !chi) throw UsageError("q-l needs a character (--chi or --chi-values)");
    if (f == "q-zeta" && chi) throw UsageError("q-zeta takes no character; use q-l");
    if (P.backend != "complex") throw UsageError("zeta families use the complex backend");
    const BarnesSpec spec = complex_spec(P, chi);
    const ZetaPoint z =
        q_zeta(Complex(parse_double(*s), P.sImag), spec, ComplexQ(Complex(parse_double(P.q), P.qImag)), cfg);
    return with_error(complex_json(z.value), z.method, z.certifiedError, z.termsUsed, z.certified);
  }
  return eval_q_euler(P, *n, cfg);
}

Json params_json(const Params& P, std::optional<int> n, std::optional<std::string> s) {
  Json j;
  if (n) j["n"] = *n;
  if (s) j["s"] = Json{{"re", parse_double(*s)}, {"im", P.sImag}};
  if (P.family != "barnes-classical" && P.family != "bernoulli-multi" && P.family != "euler-classical") {
    j["q"] = P.q;
    if (P.qImag != 0.0) j["qImag"] = P.qImag;
  }
  j["x"] = x_text(P);
  if (P.xImag != 0.0) j["xImag"] = P.xImag;
  if (P.r) j["r"] = *P.r;
  if (P.h) j["h"] = *P.h;
  if (!P.w.empty()) j["w"] = P.w;
  if (!P.a.empty()) j["a"] = P.a;
  if (!P.chi.empty()) j["chi"] = P.chi;
  if (!P.chiValues.empty()) j["chiValues"] = P.chiValues;
  j["backend"] = P.backend;
  if (P.backend == "padic") {
    j["p"] = P.p;
    j["K"] = P.K;
  }
  if (is_degree_family(P.family) && P.backend == "complex") j["method"] = P.method;
  return j;
}

Json document(const Params& P, std::optional<int> n, std::optional<std::string> s, const Outcome& o) {
  Json doc;
  doc["family"] = P.family;
  doc["params"] = params_json(P, n, s);
  doc["value"] = o.value;
  doc["method"] = o.method;
  doc["certifiedError"] = o.certifiedError ? Json(*o.certifiedError) : Json(nullptr);
  doc["termsUsed"] = o.termsUsed;
  if (o.errorEstimate) doc["errorEstimate"] = *o.errorEstimate;
  return doc;
}

std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Flattens a value object into CSV columns.
std::vector<std::pair<std::string, std::string>> value_columns(const Json& value) {
  std::vector<std::pair<std::string, std::string>> cols;
  for (const auto& [k, v] : value.items()) {
    if (v.is_array()) {
      std::string digits;
      for (const auto& d : v) digits += (digits.empty() ? "" : " ") + d.dump();
      cols.emplace_back(k, digits);
    } else {
      cols.emplace_back(k, plain(v));
    }
  }
  return cols;
}

void emit(const Params& P, const Json& doc, std::ostream& out) {
  if (P.format == "json") {
    out << doc.dump(2) << '\n';
  } else if (P.format == "csv") {
    std::string header = "family", row = P.family;
    for (const auto& [k, v] : value_columns(doc["value"])) {
      header += "," + k;
      row += "," + v;
    }
    header += ",method,certifiedError,errorEstimate,termsUsed";
    row += "," + plain(doc["method"]) + "," + (doc["certifiedError"].is_null() ? "" : doc["certifiedError"].dump()) +
           "," + (doc.contains("errorEstimate") ? doc["errorEstimate"].dump() : "") + "," + doc["termsUsed"].dump();
    out << header << '\n' << row << '\n';
  } else {
    out << "family: " << P.family << '\n';
    for (const auto& [k, v] : doc["params"].items()) out << k << ": " << plain(v) << '\n';
    for (const auto& [k, v] : value_columns(doc["value"])) out << "value." << k << ": " << v << '\n';
    out << "method: " << plain(doc["method"]) << '\n';
    if (!doc["certifiedError"].is_null()) out << "certifiedError: " << doc["certifiedError"].dump() << '\n';
    out << "termsUsed: " << doc["termsUsed"].dump() << '\n';
    if (doc.contains("errorEstimate")) out << "errorEstimate: " << doc["errorEstimate"].dump() << '\n';
  }
}

int run_table(const Params& P, const SumConfig& cfg, std::ostream& out) {
  std::vector<std::pair<std::optional<int>, std::optional<std::string>>> points;
  if (is_degree_family(P.family)) {
    if (P.nTo < P.nFrom) throw UsageError("--n-to below --n-from");
    for (int n = P.nFrom; n <= P.nTo; ++n) points.emplace_back(n, std::nullopt);
  } else {
    if (!(P.sStep > 0) || P.sTo < P.sFrom) throw UsageError("need --s-step > 0 and --s-to >= --s-from");
    const int count = static_cast<int>(std::floor((P.sTo - P.sFrom) / P.sStep + 1e-9));
    if (count > 100000) throw UsageError("table too long");
    for (int i = 0; i <= count; ++i) {
      std::ostringstream os;
      os.precision(17);
      os << P.sFrom + i * P.sStep;
      points.emplace_back(std::nullopt, os.str());
    }
  }
  bool headerDone = false;
  int status = 0;
  for (const auto& [n, s] : points) {
    const std::string var = n ? std::to_string(*n) : *s;
    try {
      const Outcome o = eval_family(P, n, s, cfg);
      const auto cols = value_columns(o.value);
      if (!headerDone) {
        out << (n ? "n" : "s");
        for (const auto& [k, v] : cols) out << "," << k;
        out << ",method,certifiedError,errorEstimate,termsUsed,failure\n";
        headerDone = true;
      }
      out << var;
      for (const auto& [k, v] : cols) out << "," << v;
      out << "," << o.method << "," << (o.certifiedError ? Json(*o.certifiedError).dump() : "") << ","
          << (o.errorEstimate ? Json(*o.errorEstimate).dump() : "") << "," << o.termsUsed << ",\n";
    } catch (const Error& e) {
      if (!headerDone) {
        out << (n ? "n" : "s") << ",value,method,certifiedError,errorEstimate,termsUsed,failure\n";
        headerDone = true;
      }
      out << var << ",,,,,," << e.name() << '\n';
      status = 1;
    }
  }
  return status;
}

int run_verify(const Params& P, const SumConfig& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.nMax = P.nMax;
  opt.sum = cfg;
  const auto reports = run_suite(P.suite, opt);
  bool ok = true;
  Json doc;
  doc["suite"] = P.suite;
  Json groups = Json::array();
  for (const SuiteReport& rep : reports) {
    ok = ok && rep.passed();
    Json g;
    g["group"] = rep.suite;
    g["passed"] = rep.passed();
    Json checks = Json::array();
    for (const Check& c : rep.checks) {
      Json jc;
      jc["identity"] = c.name;
      jc["pass"] = c.pass;
      jc["deviation"] = c.deviation;
      jc["tolerance"] = c.tolerance;
      jc["cases"] = c.cases;
      jc["skipped"] = c.skipped;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    g["checks"] = checks;
    groups.push_back(g);
  }
  doc["passed"] = ok;
  doc["groups"] = groups;
  if (P.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    for (const SuiteReport& rep : reports)
      for (const Check& c : rep.checks)
        out << (c.pass ? "PASS " : "FAIL ") << rep.suite << ": " << c.name << "  deviation=" << c.deviation
            << " tolerance=" << c.tolerance << " cases=" << c.cases << (c.detail.empty() ? "" : "  [" + c.detail + "]")
            << '\n';
  }
  return ok ? 0 : 1;
}

void add_spec_options(CLI::App* cmd, Params& P) {
  cmd->add_option("--family", P.family, "q-euler, q-euler-r, q-euler-hr, barnes-q-euler, q-zeta, q-l, "
                                        "barnes-classical, bernoulli-multi, euler-classical");
  cmd->add_option("--q", P.q, "deformation parameter (real part; exact fraction for the rational/padic backends)");
  cmd->add_option("--q-imag", P.qImag, "imaginary part of q");
  cmd->add_option("--x", P.x, "argument x (shift)");
  cmd->add_option("--x-imag", P.xImag, "imaginary part of x");
  cmd->add_option("--w", P.w, "comma-separated weights (barnes-classical: the shift w)");
  cmd->add_option("--a", P.a, "comma-separated twists (barnes-classical, bernoulli-multi: parameters a_j)");
  cmd->add_option("--r", P.r, "order r");
  cmd->add_option("--h", P.h, "h for q-euler-hr (twists a_j = h - j)");
  cmd->add_option("--chi", P.chi, "character as modulus:index");
  cmd->add_option("--chi-values", P.chiValues, "character as a value list v0,v1,... (entries may be i, -i)");
  cmd->add_option("--backend", P.backend, "complex, rational or padic")->check(CLI::IsMember({"complex", "rational", "padic"}));
  cmd->add_option("--method", P.method, "closed, series or genfun")->check(CLI::IsMember({"closed", "series", "genfun"}));
  cmd->add_option("--p", P.p, "prime for the padic backend");
  cmd->add_option("--K", P.K, "p-adic precision in digits");
  cmd->add_option("--format", P.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--config", P.config, "key=value file overriding summation settings");
  cmd->add_option("--tol", P.tolerance, "relative tolerance for series evaluations");
  cmd->add_flag("--no-collapse", P.noCollapse, "always sum the full r-fold lattice");
  cmd->add_option("--s-imag", P.sImag, "imaginary part of s");
}

void validate_family(const Params& P) {
  if (std::find(kFamilies.begin(), kFamilies.end(), P.family) == kFamilies.end())
    throw UsageError("unknown family '" + P.family + "'");
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Params P;
  std::optional<int> n;
  std::optional<std::string> s;
  CLI::App app{"q-Euler polynomials, fermionic p-adic integrals and Barnes-type q-zeta functions"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  auto* evalCmd = app.add_subcommand("eval", "evaluate one family member");
  add_spec_options(evalCmd, P);
  evalCmd->add_option("--n", n, "degree");
  evalCmd->add_option("--s", s, "zeta argument (real part)");
  auto* zetaCmd = app.add_subcommand("zeta", "evaluate a zeta family at s (default family q-zeta)");
  add_spec_options(zetaCmd, P);
  zetaCmd->add_option("--s", s, "zeta argument (real part)")->required();
  auto* tableCmd = app.add_subcommand("table", "sweep n or s and emit CSV");
  add_spec_options(tableCmd, P);
  tableCmd->add_option("--n-from", P.nFrom);
  tableCmd->add_option("--n-to", P.nTo);
  tableCmd->add_option("--s-from", P.sFrom);
  tableCmd->add_option("--s-to", P.sTo);
  tableCmd->add_option("--s-step", P.sStep);
  auto* verifyCmd = app.add_subcommand("verify", "run an identity suite");
  verifyCmd->add_option("--suite", P.suite, "identities, distribution, interpolation, mellin, padic-consistency")
      ->required()
      ->check(CLI::IsMember({"identities", "distribution", "interpolation", "mellin", "padic-consistency"}));
  verifyCmd->add_option("--n-max", P.nMax, "largest degree");
  verifyCmd->add_option("--format", P.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verifyCmd->add_option("--config", P.config, "key=value file overriding summation settings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const SumConfig cfg = sum_config(P);
    if (verifyCmd->parsed()) return run_verify(P, cfg, out);
    if (zetaCmd->parsed() && zetaCmd->count("--family") == 0) P.family = "q-zeta";
    validate_family(P);
    if (tableCmd->parsed()) return run_table(P, cfg, out);
    if (zetaCmd->parsed() && is_degree_family(P.family)) throw UsageError("zeta needs a zeta family");
    const Outcome o = eval_family(P, n, s, cfg);
    emit(P, document(P, n, s, o), out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidParameter || e.kind() == ErrorKind::EvenModulus) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    }
    Json doc;
    doc["family"] = P.family;
    doc["error"] = std::string(e.name());
    doc["message"] = e.what();
    out << doc.dump(2) << '\n';
    return 1;
  }
}

}  // namespace qbarnes
