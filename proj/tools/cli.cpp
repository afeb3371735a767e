/*
   Copyright 2026 The tmeasure Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "tmeasure/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "tmeasure/approximants.hpp"
#include "tmeasure/effective.hpp"
#include "tmeasure/error.hpp"
#include "tmeasure/exponents.hpp"
#include "tmeasure/lab.hpp"
#include "tmeasure/siegel.hpp"

namespace tmeasure::cli {

namespace {

constexpr const char* kVersion = TMEASURE_VERSION;

// key=value lines; keys that are not top-level options belong to the
// subcommand selected on the command line.
class FlatConfig : public CLI::ConfigBase {
 public:
  explicit FlatConfig(const CLI::App* app) : app_(app) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<std::string> path;
    for (const CLI::App* cur = app_; !cur->get_subcommands().empty();) {
      cur = cur->get_subcommands().front();
      path.push_back(cur->get_name());
    }
    std::vector<CLI::ConfigItem> items = CLI::ConfigBase::from_config(input);
    for (auto& item : items) {
      if (item.inputs.size() > 1) {
        std::string joined;
        for (std::size_t i = 0; i < item.inputs.size(); ++i) joined += (i ? "," : "") + item.inputs[i];
        item.inputs = {joined};
      }
      bool top = item.name == "++" || item.name == "--";
      for (const CLI::Option* opt : app_->get_options())
        if (opt->check_lname(item.name)) top = true;
      if (item.parents.empty() && !top) item.parents = path;
    }
    return items;
  }

 private:
  const CLI::App* app_;
};

long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(trim(item));
  return parts;
}

struct Global {
  Precision precision = 128;
  double budget = 1e8;
  std::string format;
  std::string output;
  unsigned threads = 0;
};

struct Options {
  std::string alpha;
  std::string d;
  std::string delta;
  std::string H;
  long p = 0;
  long n = 0;
  std::string P;
  std::string checkpoint;
  bool closed_forms = false;
};

// Every option of the apps on the path, as given or defaulted.
Json config_echo(const std::vector<const CLI::App*>& path) {
  Json j = Json::object();
  for (const CLI::App* app : path) {
    for (const CLI::Option* opt : app->get_options()) {
      std::string name = opt->get_single_name();
      if (name.empty() || name == "help" || name == "config" || name == "version") continue;
      if (opt->count() > 0) {
        const auto& res = opt->results();
        std::string v;
        for (std::size_t i = 0; i < res.size(); ++i) v += (i ? " " : "") + res[i];
        j[name] = opt->get_expected_min() == 0 && v.empty() ? "true" : v;
      } else {
        j[name] = opt->get_default_str();
      }
    }
  }
  return j;
}

class Writer {
 public:
  Writer(const Global& g, std::ostream& fallback, Json provenance)
      : provenance_(std::move(provenance)), out_(&fallback) {
    if (!g.output.empty()) {
      file_.open(g.output);
      if (!file_) throw Error(ErrorCode::ConstraintViolated, "cannot open " + g.output);
      out_ = &file_;
    }
  }

  void json(Json body) {
    Json j;
    if (body.contains("schema")) j["schema"] = body["schema"];
    j["provenance"] = provenance_;
    j.update(body);
    *out_ << j.dump(2) << "\n";
  }

  std::ostream& csv() {
    if (!header_written_) {
      *out_ << "# tmeasure " << kVersion << "\n# command: " << provenance_["command"].get<std::string>() << "\n";
      for (const auto& [k, v] : provenance_["config"].items()) *out_ << "# " << k << " = " << v.get<std::string>() << "\n";
      header_written_ = true;
    }
    return *out_;
  }

 private:
  Json provenance_;
  std::ofstream file_;
  std::ostream* out_;
  bool header_written_ = false;
};

std::string format_or(const Global& g, const char* fallback) { return g.format.empty() ? fallback : g.format; }

long single(const std::vector<long>& values, const char* what) {
  if (values.size() != 1) throw Error(ErrorCode::ParseError, std::string(what) + " must be a single integer");
  return values.front();
}

Json exponent_json(const ExponentRow& r) {
  Json j;
  j["d"] = r.d;
  j["delta"] = r.delta;
  j["p1"] = r.choice.p1;
  j["p2"] = r.choice.p2;
  j["lambda"] = r.choice.lambda;
  j["psi_lambda"] = rational_json(r.choice.psi_lambda);
  j["zheng"] = r.competing.zheng.get_str();
  j["mahler"] = r.competing.mahler.get_str();
  j["lang_galochkin"] = r.competing.lang_galochkin.get_str();
  j["zheng_equal"] = r.choice.psi_lambda == BigRational(r.competing.zheng);
  if (r.bounds) {
    j["sandwich"] = {{"lower", interval_json(r.bounds->lower)},
                     {"upper", interval_json(r.bounds->upper)},
                     {"lower_ok", r.bounds->lower_ok},
                     {"upper_ok", r.bounds->upper_ok}};
    if (r.bounds->quarter_ok) j["quarter_ok"] = *r.bounds->quarter_ok;
  }
  return j;
}

Json closed_form_json(long d, const ClosedFormReport& c) {
  Json j;
  j["d"] = d;
  j["delta"] = c.which;
  j["computed"] = rational_json(c.computed);
  j["reference"] = rational_json(c.reference_value);
  j["matches_reference"] = c.matches_reference;
  if (c.corrected_value) {
    j["corrected"] = rational_json(*c.corrected_value);
    j["matches_corrected"] = c.matches_corrected;
    j["note"] = c.matches_reference ? "reference denominator 3d-1 agrees"
                                    : "reference denominator 3d-1 disagrees; the exact value has denominator 3d-2";
  }
  return j;
}

int cmd_exponent(const Options& o, const Global& g, Writer& w) {
  auto ds = parse_int_list(o.d), deltas = parse_int_list(o.delta);
  std::vector<ExponentRow> rows;
  for (long d : ds)
    for (long delta : deltas) rows.push_back(exponent_row(d, delta));
  std::vector<std::pair<long, ClosedFormReport>> forms;
  if (o.closed_forms)
    for (long d : ds)
      for (long delta : deltas)
        if (d >= 2 && delta <= 3) forms.emplace_back(d, closed_form_check(d, static_cast<int>(delta)));
  if (format_or(g, "csv") == "csv") {
    std::ostream& out = w.csv();
    write_exponent_csv(out, rows);
    if (!forms.empty()) {
      out << "\nd,delta,computed,reference,matches_reference,corrected,matches_corrected\n";
      for (const auto& [d, c] : forms)
        out << d << ',' << c.which << ',' << to_fraction_string(c.computed) << ','
            << to_fraction_string(c.reference_value) << ',' << (c.matches_reference ? "true" : "false") << ','
            << (c.corrected_value ? to_fraction_string(*c.corrected_value) : "") << ','
            << (c.corrected_value ? (c.matches_corrected ? "true" : "false") : "") << '\n';
    }
    return kOk;
  }
  Json j;
  j["schema"] = "tmeasure.exponent/1";
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(exponent_json(r));
  j["rows"] = arr;
  if (!forms.empty()) {
    Json cf = Json::array();
    for (const auto& [d, c] : forms) cf.push_back(closed_form_json(d, c));
    j["closed_forms"] = cf;
  }
  w.json(j);
  return kOk;
}

long resolve_d(const Options& o, const AlgebraicNumber& alpha) {
  return o.d.empty() ? alpha.degree() : single(parse_int_list(o.d), "--d");
}

int cmd_bound(const Options& o, const Global& g, Writer& w) {
  AlgebraicNumber alpha = AlgebraicNumber::parse(o.alpha);
  long d = resolve_d(o, alpha);
  long delta = single(parse_int_list(o.delta), "--delta");
  BigRational H = parse_rational(o.H);
  long lambda = optimal_p(d, delta).lambda;
  long p = o.p > 0 ? o.p : lambda;
  EffectiveConstants c = constants(alpha, d, delta, p, std::max<Precision>(g.precision, 256));
  BoundEvaluation e = certified_lower_bound(c, H);
  Json j = certificate_json(c, e);
  j["p_choice"] = {{"p", p}, {"lambda", lambda}, {"default", p == lambda}};
  if (p != lambda) j["p_choice"]["note"] = "non-default p";
  w.json(j);
  return e.n0_certified ? kOk : kPrecision;
}

int cmd_verify(const Options& o, const Global& g, Writer& w) {
  AlgebraicNumber alpha = AlgebraicNumber::parse(o.alpha);
  long d = resolve_d(o, alpha);
  long delta = single(parse_int_list(o.delta), "--delta");
  LabOptions lo;
  lo.bits = g.precision;
  lo.budget = g.budget;
  lo.threads = g.threads;
  lo.checkpoint = o.checkpoint;
  lo.strict = false;
  LabReport r = bound_vs_reality(alpha, d, delta, parse_int_list(o.H), lo);
  if (format_or(g, "json") == "csv") write_lab_csv(w.csv(), r);
  else w.json(to_json(r));
  return r.sentinel_held ? kOk : kSentinel;
}

BigInt default_q(const AlgebraicNumber& alpha, long p) {
  return lcm_upto(static_cast<unsigned long>(p)) * denominator_surrogate(inverse(alpha));
}

Json check_json(const BoundCheck& c) {
  return {{"passed", c.passed}, {"value", interval_json(c.value)}, {"bound", interval_json(c.bound)}};
}

int cmd_approximants(const Options& o, const Global& g, Writer& w) {
  AlgebraicNumber alpha = AlgebraicNumber::parse(o.alpha);
  if (o.n < 1 || o.p < 1) throw Error(ErrorCode::ConstraintViolated, "--n and --p must be at least 1");
  ApproximantSystem s = build_system(NumberField::create(alpha), o.n, o.p);
  Json j = to_json(s);
  BigInt q = default_q(alpha, o.p);
  MetricBoundsReport m = metric_bounds_report(s, q, g.precision);
  Json checks;
  checks["det_at_one_nonzero"] = det_at_one_check(s);
  checks["q"] = q.get_str();
  checks["entries"] = check_json(m.entries);
  checks["entries_nfact"] = check_json(m.entries_nfact);
  Json rem = Json::array();
  for (const auto& c : m.remainders) rem.push_back(check_json(c));
  checks["remainders"] = rem;
  checks["integrality"] = m.integrality;
  checks["non_integral_entries"] = m.non_integral_entries;
  j["checks"] = checks;
  Matrix<FieldElement> a = scaled_values(s, q);
  Json values = Json::array();
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    Json row = Json::array();
    for (Eigen::Index l = 0; l < a.cols(); ++l) row.push_back(field_element_json(a(k, l)));
    values.push_back(row);
  }
  j["scaled_values"] = values;
  w.json(j);
  return kOk;
}

int cmd_certificate(const Options& o, const Global& g, Writer& w) {
  AlgebraicNumber alpha = AlgebraicNumber::parse(o.alpha);
  std::vector<BigInt> P;
  BigRational height = 0;
  for (long a : parse_coefficients(o.P)) {
    P.push_back(BigInt(a));
    height = std::max(height, BigRational(std::abs(a)));
  }
  while (P.size() > 1 && P.back() == 0) P.pop_back();
  long delta = o.delta.empty() ? static_cast<long>(P.size()) - 1 : single(parse_int_list(o.delta), "--delta");
  if (delta < 1) throw Error(ErrorCode::ConstraintViolated, "P must have degree at least 1, or pass --delta");
  long d = resolve_d(o, alpha);
  long p = o.p > 0 ? o.p : optimal_p(d, delta).lambda;
  BigRational H = o.H.empty() ? height : parse_rational(o.H);
  EffectiveConstants c = constants(alpha, d, delta, p, std::max<Precision>(g.precision, 256));
  long n = o.n;
  if (n < 1) {
    BoundEvaluation e = find_n0(c, H);
    n = e.n0.fits_slong_p() ? std::min(e.n0.get_si(), 6L) : 6;
  }
  ApproximantSystem s = build_system(NumberField::create(alpha), n, p);
  SiegelCertificate cert = build_D(P, s, c.q, delta);
  ChainReport chain = verify_chain(cert, s, c, H, g.precision);
  Json j = to_json(cert);
  j["H"] = rational_json(H);
  j["chain"] = to_json(chain);
  w.json(j);
  return kOk;
}

int cmd_scan_parity(const Options& o, const Global& g, Writer& w) {
  auto ds = parse_int_list(o.d), deltas = parse_int_list(o.delta);
  ParityReport full = parity_scan(ds.back(), deltas.back());
  std::vector<ParityRow> rows;
  for (const auto& r : full.rows)
    if (std::binary_search(ds.begin(), ds.end(), r.d) && std::binary_search(deltas.begin(), deltas.end(), r.delta))
      rows.push_back(r);
  long counter = std::count_if(rows.begin(), rows.end(), [](const ParityRow& r) { return !r.matches_pattern; });
  if (format_or(g, "csv") == "csv") {
    std::ostream& out = w.csv();
    out << "d,delta,p1,p2,psi_p1,psi_p2,sign,matches_pattern\n";
    for (const auto& r : rows)
      out << r.d << ',' << r.delta << ',' << r.p1 << ',' << r.p2 << ',' << to_fraction_string(r.psi_p1) << ','
          << to_fraction_string(r.psi_p2) << ',' << r.sign << ',' << (r.matches_pattern ? "true" : "false") << '\n';
    out << "# rows = " << rows.size() << ", counterexamples = " << counter << "\n";
    return kOk;
  }
  Json j;
  j["schema"] = "tmeasure.parity/1";
  j["pattern"] = "odd delta: psi(p1) < psi(p2); even delta: psi(p1) > psi(p2)";
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back({{"d", r.d}, {"delta", r.delta}, {"p1", r.p1}, {"p2", r.p2},
                   {"psi_p1", rational_json(r.psi_p1)}, {"psi_p2", rational_json(r.psi_p2)},
                   {"sign", r.sign}, {"matches_pattern", r.matches_pattern}});
  j["rows"] = arr;
  j["counterexamples"] = counter;
  w.json(j);
  return kOk;
}

int cmd_scan_floor(const Options& o, const Global& g, Writer& w) {
  auto ds = parse_int_list(o.d), deltas = parse_int_list(o.delta);
  struct Row {
    long d, delta;
    BigInt floor;
    long closed;
    bool holds;
  };
  std::vector<Row> rows;
  for (long d : ds)
    for (long delta : deltas)
      rows.push_back({d, delta, floor_delta_sqrt(d, delta), delta * d - (delta + 2) / 2, floor_identity_check(d, delta)});
  if (format_or(g, "csv") == "csv") {
    std::ostream& out = w.csv();
    out << "d,delta,floor_delta_sqrt,delta_d_minus_ceil_half,holds\n";
    for (const auto& r : rows)
      out << r.d << ',' << r.delta << ',' << r.floor << ',' << r.closed << ',' << (r.holds ? "true" : "false") << '\n';
    return kOk;
  }
  Json j;
  j["schema"] = "tmeasure.floor/1";
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back({{"d", r.d}, {"delta", r.delta}, {"floor", r.floor.get_str()}, {"closed", r.closed}, {"holds", r.holds}});
  j["rows"] = arr;
  w.json(j);
  return kOk;
}

int cmd_scan_asymptotic(const Options& o, const Global& g, Writer& w) {
  AsymptoticReport r = asymptotic_spot_check(single(parse_int_list(o.delta), "--delta"), parse_int_list(o.d));
  if (format_or(g, "csv") == "csv") write_asymptotic_csv(w.csv(), r);
  else w.json(to_json(r));
  return kOk;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::PrecisionExhausted: return kPrecision;
    case ErrorCode::BudgetExceeded: return kBudget;
    case ErrorCode::AssertionFailed: return kSentinel;
    default: return kUsage;
  }
}

}  // namespace

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw Error(ErrorCode::ParseError, "empty item in '" + text + "'");
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_long(part));
      continue;
    }
    long lo = to_long(trim(part.substr(0, dots))), hi = to_long(trim(part.substr(dots + 2)));
    if (hi < lo) throw Error(ErrorCode::ParseError, "empty range '" + part + "'");
    if (hi - lo > 10000000) throw Error(ErrorCode::ParseError, "range too long '" + part + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long> parse_coefficients(const std::string& text) {
  std::vector<long> out;
  for (const auto& part : split(text, ',')) out.push_back(to_long(part));
  if (out.empty()) throw Error(ErrorCode::ParseError, "no coefficients");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified exponent and bound computations for values of the exponential at algebraic points",
               "tmeasure"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<FlatConfig>(&app));
  Global g;
  Options o;
  app.add_option("--precision", g.precision, "Working precision in bits")->capture_default_str()->check(CLI::Range(32, 1 << 20));
  app.add_option("--budget", g.budget, "Maximum number of enumerated polynomials")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", g.output, "Output file (default: standard output)");
  app.add_option("--threads", g.threads, "Worker threads, 0 for all cores")->capture_default_str();

  std::map<const CLI::App*, std::function<int(Writer&)>> handlers;

  auto* exponent = app.add_subcommand("exponent", "Exponent table against the competing exponents");
  exponent->add_option("--d", o.d, "Degree list, e.g. 2..5")->required();
  exponent->add_option("--delta", o.delta, "Polynomial degree list, e.g. 1..3")->required();
  exponent->add_flag("--check-closed-forms", o.closed_forms, "Compare against the closed forms for delta <= 3");
  handlers[exponent] = [&](Writer& w) { return cmd_exponent(o, g, w); };

  auto* bound = app.add_subcommand("bound", "Effective lower bound certificate for |P(e^alpha)|");
  bound->add_option("--alpha", o.alpha, "Minimal polynomial and root selector, e.g. x^2-2:+re")->required();
  bound->add_option("--d", o.d, "Degree parameter (default: degree of alpha)");
  bound->add_option("--delta", o.delta, "Degree of P")->required();
  bound->add_option("--H", o.H, "Height bound (rational)")->required();
  bound->add_option("--p", o.p, "Number of approximant columns minus one (default: lambda)");
  handlers[bound] = [&](Writer& w) { return cmd_bound(o, g, w); };

  auto* verify = app.add_subcommand("verify", "Compare the bound with brute-force minima");
  verify->add_option("--alpha", o.alpha, "Minimal polynomial and root selector")->required();
  verify->add_option("--d", o.d, "Degree parameter (default: degree of alpha)");
  verify->add_option("--delta", o.delta, "Degree of P")->required();
  verify->add_option("--H", o.H, "Height grid, e.g. 1..100")->required();
  verify->add_option("--checkpoint", o.checkpoint, "Checkpoint file to resume from and update");
  handlers[verify] = [&](Writer& w) { return cmd_verify(o, g, w); };

  auto* approximants = app.add_subcommand("approximants", "Build the approximant system");
  approximants->add_option("--alpha", o.alpha, "Minimal polynomial and root selector")->required();
  approximants->add_option("--n", o.n, "Degree parameter n")->required();
  approximants->add_option("--p", o.p, "Number of columns minus one")->required();
  handlers[approximants] = [&](Writer& w) { return cmd_approximants(o, g, w); };

  auto* certificate = app.add_subcommand("certificate", "Build D for a polynomial P and check its bounds");
  certificate->add_option("--alpha", o.alpha, "Minimal polynomial and root selector")->required();
  certificate->add_option("--P", o.P, "Coefficients a_0,...,a_delta")->required();
  certificate->add_option("--n", o.n, "Degree parameter n (default: min(n0, 6))");
  certificate->add_option("--p", o.p, "Number of columns minus one (default: lambda)");
  certificate->add_option("--d", o.d, "Degree parameter (default: degree of alpha)");
  certificate->add_option("--delta", o.delta, "Degree bound (default: degree of P)");
  certificate->add_option("--H", o.H, "Height bound (default: height of P)");
  handlers[certificate] = [&](Writer& w) { return cmd_certificate(o, g, w); };

  auto* scan = app.add_subcommand("scan", "Exploratory scans");
  scan->require_subcommand(1);
  auto* parity = scan->add_subcommand("parity", "Which of p1, p2 minimizes psi");
  parity->add_option("--d", o.d, "Degree list")->required();
  parity->add_option("--delta", o.delta, "Polynomial degree list")->required();
  handlers[parity] = [&](Writer& w) { return cmd_scan_parity(o, g, w); };
  auto* floor = scan->add_subcommand("floor", "floor(delta sqrt(d^2-d)) against delta d - ceil((delta+1)/2)");
  floor->add_option("--d", o.d, "Degree list")->required();
  floor->add_option("--delta", o.delta, "Polynomial degree list")->required();
  handlers[floor] = [&](Writer& w) { return cmd_scan_floor(o, g, w); };
  auto* asymptotic = scan->add_subcommand("asymptotic", "d |psi - leading terms| for delta 2 or 3");
  asymptotic->add_option("--d", o.d, "Degree list")->required();
  asymptotic->add_option("--delta", o.delta, "2 or 3")->required();
  handlers[asymptotic] = [&](Writer& w) { return cmd_scan_asymptotic(o, g, w); };

  for (auto& [sub, handler] : handlers) const_cast<CLI::App*>(sub)->configurable();
  scan->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::vector<const CLI::App*> path{&app};
  for (const CLI::App* cur = &app; !cur->get_subcommands().empty();) {
    cur = cur->get_subcommands().front();
    path.push_back(cur);
  }
  std::string command;
  for (std::size_t i = 1; i < path.size(); ++i) command += (i > 1 ? " " : "") + path[i]->get_name();

  try {
    Json provenance;
    provenance["tool"] = "tmeasure";
    provenance["version"] = kVersion;
    provenance["command"] = command;
    provenance["config"] = config_echo(path);
    Writer w(g, out, provenance);
    return handlers.at(path.back())(w);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace tmeasure::cli
