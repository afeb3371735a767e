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


#include "tmeasure/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "tmeasure/error.hpp"
#include "tmeasure/exponents.hpp"

namespace tmeasure {

namespace {

using Clock = std::chrono::steady_clock;
using Coeffs = std::vector<long>;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Screened {
  Coeffs a;
  double lower;
  double upper;
};

// Sign-reduced vectors of height exactly h with a_delta = lead, in lexicographic order
// (a_delta most significant), screened in double precision against `threshold`.
struct Block {
  long h = 0;
  long lead = 0;
  std::vector<Screened> kept;
  double best_upper = std::numeric_limits<double>::infinity();
  long long evaluated = 0;
};

class Screen {
 public:
  Screen(const AlgebraicNumber& alpha, long delta) : delta_(delta) {
    const Precision prec = 128;
    Ball a = alpha.enclosure(prec);
    std::vector<Ball> e;
    Float scale(prec);
    for (long k = 0; k <= delta; ++k) {
      e.push_back(exp(a * Ball(Interval(k, prec))));
      Float m = abs(e.back()).hi();
      if (mpfr_greater_p(m.get(), scale.get())) scale = m;
    }
    scale_ = scale;
    for (const auto& z : e) {
      Float re = z.mid_real(), im = z.mid_imag();
      mpfr_div(re.get(), re.get(), scale.get(), MPFR_RNDN);
      mpfr_div(im.get(), im.get(), scale.get(), MPFR_RNDN);
      e_.emplace_back(re.to_double(), im.to_double());
      abs_e_.push_back(std::abs(e_.back()) * (1 + 0x1p-50));
    }
  }

  // Scaled |P(e^alpha)| in double together with a rigorous error bound.
  std::pair<double, double> operator()(const Coeffs& a) const {
    std::complex<double> s = 0;
    double mag = 0;
    for (long k = 0; k <= delta_; ++k) {
      if (a[static_cast<std::size_t>(k)] == 0) continue;
      double c = static_cast<double>(a[static_cast<std::size_t>(k)]);
      s += c * e_[static_cast<std::size_t>(k)];
      mag += std::abs(c) * abs_e_[static_cast<std::size_t>(k)];
    }
    double err = 4.0 * static_cast<double>(delta_ + 4) * 0x1p-53 * mag + 0x1p-1000;
    return {std::abs(s), err};
  }

  // Converts a certified value to the scaled double units, rounded upward.
  double scaled_upper(const Float& x) const {
    Float r(scale_.precision());
    mpfr_div(r.get(), x.get(), scale_.get(), MPFR_RNDU);
    double v = mpfr_get_d(r.get(), MPFR_RNDU);
    return v * (1 + 0x1p-50);
  }

 private:
  long delta_;
  Float scale_;
  std::vector<std::complex<double>> e_;
  std::vector<double> abs_e_;
};

void run_block(const Screen& screen, long delta, double threshold, Block& block) {
  const long h = block.h;
  Coeffs a(static_cast<std::size_t>(delta) + 1, -h);
  a[static_cast<std::size_t>(delta)] = block.lead;
  auto admissible = [&] {
    long height = 0;
    for (long x : a) height = std::max(height, std::abs(x));
    if (height != h) return false;
    for (long k = delta; k >= 0; --k)
      if (a[static_cast<std::size_t>(k)] != 0) return a[static_cast<std::size_t>(k)] > 0;
    return false;
  };
  for (;;) {
    if (admissible()) {
      ++block.evaluated;
      auto [value, err] = screen(a);
      double lower = value - err, upper = value + err;
      if (lower <= std::min(threshold, block.best_upper)) {
        block.kept.push_back({a, lower, upper});
        if (upper < block.best_upper) {
          block.best_upper = upper;
          if (block.kept.size() > 64) {
            std::erase_if(block.kept, [&](const Screened& s) { return s.lower > block.best_upper; });
          }
        }
      }
    }
    long k = 0;
    while (k < delta && a[static_cast<std::size_t>(k)] == h) a[static_cast<std::size_t>(k++)] = -h;
    if (k == delta) break;
    ++a[static_cast<std::size_t>(k)];
  }
  std::erase_if(block.kept, [&](const Screened& s) { return s.lower > block.best_upper; });
}

Interval certified_abs(const AlgebraicNumber& alpha, const Coeffs& a, Precision prec) {
  Ball x = alpha.enclosure(prec);
  Ball s(prec);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) s += Ball(Interval(a[k], prec)) * exp(x * Ball(Interval(static_cast<long>(k), prec)));
  return abs(s);
}

struct Candidate {
  Coeffs a;
  Interval value;
};

// Running minimum over shells 1..h.
class Search {
 public:
  Search(const AlgebraicNumber& alpha, long delta, const LabOptions& options)
      : alpha_(alpha), delta_(delta), options_(options), screen_(alpha, delta) {
    threads_ = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  }

  void restore(long shell, Candidate best, long long evaluated, long long contenders) {
    shell_ = shell;
    best_ = std::move(best);
    evaluated_ = evaluated;
    contenders_ = contenders;
  }

  void next_shell() {
    const long h = ++shell_;
    std::vector<Block> blocks;
    for (long lead = 0; lead <= h; ++lead) blocks.push_back(Block{h, lead, {}, std::numeric_limits<double>::infinity(), 0});
    const double threshold =
        best_ ? screen_.scaled_upper(best_->value.hi()) : std::numeric_limits<double>::infinity();
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < blocks.size();) run_block(screen_, delta_, threshold, blocks[i]);
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(threads_, static_cast<unsigned>(blocks.size()));
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    double cut = threshold;
    for (const auto& b : blocks) cut = std::min(cut, b.best_upper);
    std::vector<Candidate> found;
    for (auto& b : blocks) {
      evaluated_ += b.evaluated;
      for (auto& s : b.kept)
        if (s.lower <= cut) found.push_back({std::move(s.a), Interval()});
    }
    contenders_ += static_cast<long long>(found.size());
    if (found.empty()) return;
    if (best_) found.insert(found.begin(), *best_);
    merge(std::move(found));
  }

  long shell() const { return shell_; }

  MinAbs result() const {
    MinAbs m;
    m.value = best_->value;
    for (long x : best_->a) m.argmin.push_back(BigInt(x));
    m.evaluated = evaluated_;
    m.contenders = contenders_;
    return m;
  }

  const Candidate& best() const { return *best_; }

 private:
  // Refines every candidate until the enclosure of their minimum is relatively tight.
  void merge(std::vector<Candidate> found) {
    for (Precision prec = options_.bits + 32;; prec *= 2) {
      if (prec > kMaxPrecision) throw Error(ErrorCode::PrecisionExhausted, "minimum not resolved");
      Float lo(prec), hi(prec);
      mpfr_set_inf(lo.get(), 1);
      mpfr_set_inf(hi.get(), 1);
      for (auto& c : found) {
        if (c.value.precision() < prec) c.value = certified_abs(alpha_, c.a, prec);
        mpfr_min(lo.get(), lo.get(), c.value.lo().get(), MPFR_RNDD);
        mpfr_min(hi.get(), hi.get(), c.value.hi().get(), MPFR_RNDU);
      }
      Float tol(prec);
      mpfr_div_2si(tol.get(), lo.get(), static_cast<long>(options_.bits), MPFR_RNDD);
      Float width(prec);
      mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
      if (mpfr_sgn(lo.get()) > 0 && mpfr_lessequal_p(width.get(), tol.get())) {
        std::size_t arg = 0;
        for (std::size_t i = 1; i < found.size(); ++i)
          if (certainly_less(found[i].value, found[arg].value) ||
              (!certainly_less(found[arg].value, found[i].value) &&
               mpfr_less_p(found[i].value.midpoint().get(), found[arg].value.midpoint().get())))
            arg = i;
        Interval value(lo, hi);
        best_ = Candidate{found[arg].a, value.with_precision(options_.bits)};
        return;
      }
    }
  }

  const AlgebraicNumber& alpha_;
  long delta_;
  LabOptions options_;
  Screen screen_;
  unsigned threads_ = 1;
  long shell_ = 0;
  std::optional<Candidate> best_;
  long long evaluated_ = 0;
  long long contenders_ = 0;
};

void check_inputs(const AlgebraicNumber& alpha, long delta, long H, const LabOptions& options) {
  if (alpha.is_zero()) throw Error(ErrorCode::ConstraintViolated, "alpha must be nonzero");
  if (delta < 1) throw Error(ErrorCode::ConstraintViolated, "delta must be at least 1");
  if (H < 1) throw Error(ErrorCode::ConstraintViolated, "H must be at least 1");
  if (H > (1L << 40)) throw Error(ErrorCode::BudgetExceeded, "H too large");
  double size = enumeration_size(delta, H);
  if (!(size <= options.budget)) {
    std::ostringstream msg;
    msg << size << " polynomials at H = " << H << " exceed the budget of " << options.budget;
    throw Error(ErrorCode::BudgetExceeded, msg.str());
  }
}

std::string hex(const Float& x) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra", x.get());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Float from_hex(const std::string& s, Precision prec) {
  Float x(prec);
  if (mpfr_set_str(x.get(), s.c_str(), 0, MPFR_RNDN) != 0) throw Error(ErrorCode::ParseError, "bad float " + s);
  return x;
}

Json coeffs_json(const Coeffs& a) {
  Json j = Json::array();
  for (long x : a) j.push_back(x);
  return j;
}

struct Checkpoint {
  Json rows = Json::array();
  long shell = 0;
  Json best;
  long long evaluated = 0;
  long long contenders = 0;
};

Json candidate_json(const Candidate& c) {
  Json j;
  j["a"] = coeffs_json(c.a);
  j["precision"] = c.value.precision();
  j["lo"] = hex(c.value.lo());
  j["hi"] = hex(c.value.hi());
  return j;
}

Candidate candidate_from(const Json& j) {
  Precision prec = j.at("precision").get<Precision>();
  return Candidate{j.at("a").get<Coeffs>(),
                   Interval(from_hex(j.at("lo").get<std::string>(), prec), from_hex(j.at("hi").get<std::string>(), prec))};
}

Json checkpoint_header(const AlgebraicNumber& alpha, long delta, const LabOptions& options) {
  Json j;
  j["schema"] = "tmeasure.lab-checkpoint/1";
  j["alpha"] = alpha.descriptor();
  j["delta"] = delta;
  j["bits"] = options.bits;
  return j;
}

std::optional<Checkpoint> load_checkpoint(const std::string& path, const Json& header) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "unreadable checkpoint " + path);
  for (const auto& [key, value] : header.items())
    if (j.value(key, Json()) != value) throw Error(ErrorCode::ConstraintViolated, "checkpoint " + path + " is for a different run");
  Checkpoint c;
  c.rows = j.at("rows");
  c.shell = j.at("completed_shell").get<long>();
  c.best = j.at("best");
  c.evaluated = j.at("evaluated").get<long long>();
  c.contenders = j.at("contenders").get<long long>();
  return c;
}

void save_checkpoint(const std::string& path, Json header, const Search& search, const Json& rows, long long evaluated,
                     long long contenders) {
  header["completed_shell"] = search.shell();
  header["best"] = candidate_json(search.best());
  header["evaluated"] = evaluated;
  header["contenders"] = contenders;
  header["rows"] = rows;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << header.dump(1) << "\n";
    if (!out) throw Error(ErrorCode::ConstraintViolated, "cannot write checkpoint " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error(ErrorCode::ConstraintViolated, "cannot replace " + path);
}

std::string coeff_string(const std::vector<BigInt>& a) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? " " : "") + a[k].get_str();
  return s;
}

double log_of(const Float& x) {
  Float r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r.to_double();
}

}  // namespace

double enumeration_size(long delta, long H) {
  return (std::pow(2.0 * static_cast<double>(H) + 1.0, static_cast<double>(delta + 1)) - 1.0) / 2.0;
}

MinAbs min_abs_value(const AlgebraicNumber& alpha, long delta, long H, const LabOptions& options) {
  check_inputs(alpha, delta, H, options);
  Search search(alpha, delta, options);
  while (search.shell() < H) search.next_shell();
  return search.result();
}

LabReport bound_vs_reality(const AlgebraicNumber& alpha, long d, long delta, std::vector<long> H_grid,
                           const LabOptions& options) {
  const auto t0 = Clock::now();
  std::sort(H_grid.begin(), H_grid.end());
  H_grid.erase(std::unique(H_grid.begin(), H_grid.end()), H_grid.end());
  if (H_grid.empty()) throw Error(ErrorCode::ConstraintViolated, "empty H grid");
  check_inputs(alpha, delta, H_grid.front(), options);
  check_inputs(alpha, delta, H_grid.back(), options);

  LabReport r;
  r.alpha = alpha.descriptor();
  r.d = d;
  r.delta = delta;
  r.H_grid = H_grid;
  OptimalChoice choice = optimal_p(d, delta);
  r.psi = choice.psi_lambda;
  EffectiveConstants consts = constants(alpha, d, delta, choice.lambda);

  Search search(alpha, delta, options);
  Json header = checkpoint_header(alpha, delta, options);
  Json saved_rows = Json::array();
  std::set<long> resumed;
  if (!options.checkpoint.empty()) {
    if (auto c = load_checkpoint(options.checkpoint, header)) {
      search.restore(c->shell, candidate_from(c->best), c->evaluated, c->contenders);
      saved_rows = c->rows;
    }
  }

  for (long H : H_grid) {
    const auto t1 = Clock::now();
    LabRow row;
    row.H = H;
    const Json* saved = nullptr;
    for (const auto& s : saved_rows)
      if (s.at("H").get<long>() == H) saved = &s;
    if (saved) {
      Candidate c = candidate_from(saved->at("min"));
      row.min_abs.value = c.value;
      for (long x : c.a) row.min_abs.argmin.push_back(BigInt(x));
      row.min_abs.evaluated = saved->at("evaluated").get<long long>();
      row.min_abs.contenders = saved->at("contenders").get<long long>();
      row.resumed = true;
    } else {
      if (search.shell() > H) throw Error(ErrorCode::ConstraintViolated, "checkpoint is ahead of the H grid");
      while (search.shell() < H) search.next_shell();
      row.min_abs = search.result();
      Json s;
      s["H"] = H;
      s["min"] = candidate_json(search.best());
      s["evaluated"] = row.min_abs.evaluated;
      s["contenders"] = row.min_abs.contenders;
      saved_rows.push_back(s);
      if (!options.checkpoint.empty())
        save_checkpoint(options.checkpoint, header, search, saved_rows, row.min_abs.evaluated, row.min_abs.contenders);
    }
    BoundEvaluation e = certified_lower_bound(consts, BigRational(H));
    row.p = consts.p;
    row.bound = e.lower_bound;
    row.log_denominator = e.log_denominator;
    row.sentinel = mpfr_lessequal_p(row.bound.get(), row.min_abs.value.lo().get());
    row.log_ratio = log_of(row.min_abs.value.lo()) - log_of(row.bound);
    row.seconds = seconds_since(t1);
    if (!row.sentinel) r.sentinel_held = false;
    r.rows.push_back(std::move(row));
  }

  std::vector<double> x, y;
  for (std::size_t i = r.rows.size() / 2; i < r.rows.size(); ++i) {
    x.push_back(std::log(static_cast<double>(r.rows[i].H)));
    y.push_back(-log_of(r.rows[i].min_abs.value.midpoint()));
  }
  r.empirical_exponent = ols_slope(x, y);
  if (r.empirical_exponent) r.exponent_gap = r.psi.get_d() - *r.empirical_exponent;
  r.seconds = seconds_since(t0);
  if (!r.sentinel_held && options.strict) {
    for (const auto& row : r.rows)
      if (!row.sentinel)
        throw Error(ErrorCode::AssertionFailed, "bound exceeds the certified minimum at H = " + std::to_string(row.H));
  }
  return r;
}

std::optional<double> ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

AsymptoticReport asymptotic_spot_check(long delta, const std::vector<long>& d_grid) {
  if (delta != 2 && delta != 3) throw Error(ErrorCode::ConstraintViolated, "asymptotic check needs delta 2 or 3");
  AsymptoticReport r;
  r.delta = delta;
  for (long d : d_grid) {
    if (d < 2) throw Error(ErrorCode::ConstraintViolated, "asymptotic check needs d >= 2");
    AsymptoticRow row;
    row.d = d;
    row.psi = optimal_p(d, delta).psi_lambda;
    BigRational dd(d);
    row.leading = delta == 2 ? 8 * dd * dd - 4 * dd - BigRational(3, 2) : 12 * dd * dd - 6 * dd - BigRational(5, 3);
    row.difference = row.psi - row.leading;
    row.scaled = dd * row.difference;
    r.bound = std::max<BigRational>(r.bound, abs(row.scaled));
    r.rows.push_back(std::move(row));
  }
  return r;
}

Json to_json(const MinAbs& m) {
  Json j;
  j["min_abs"] = interval_json(m.value);
  Json a = Json::array();
  for (const auto& x : m.argmin) a.push_back(x.get_str());
  j["argmin"] = a;
  j["evaluated"] = m.evaluated;
  j["contenders"] = m.contenders;
  return j;
}

Json to_json(const LabReport& r) {
  Json j;
  j["schema"] = "tmeasure.lab/1";
  j["alpha"] = r.alpha;
  j["d"] = r.d;
  j["delta"] = r.delta;
  j["H_grid"] = r.H_grid;
  j["psi"] = rational_json(r.psi);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["H"] = row.H;
    x.update(to_json(row.min_abs));
    x["p"] = row.p;
    x["prop1_bound"] = decimal_down(row.bound);
    x["log_denominator"] = interval_json(row.log_denominator);
    x["log_ratio"] = row.log_ratio;
    x["sentinel"] = row.sentinel;
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["empirical_exponent"] = r.empirical_exponent ? Json(*r.empirical_exponent) : Json();
  j["exponent_gap"] = r.exponent_gap ? Json(*r.exponent_gap) : Json();
  j["sentinel_held"] = r.sentinel_held;
  Json runtime;
  runtime["seconds"] = r.seconds;
  Json per = Json::array();
  for (const auto& row : r.rows) per.push_back(row.seconds);
  runtime["per_H_seconds"] = per;
  j["runtime"] = runtime;
  return j;
}

void write_lab_csv(std::ostream& out, const LabReport& r) {
  out << "H,min_abs_lo,min_abs_hi,argmin,p,prop1_bound,log_ratio,sentinel,evaluated,contenders,seconds\n";
  for (const auto& row : r.rows) {
    out << row.H << ',' << decimal_down(row.min_abs.value.lo()) << ',' << decimal_up(row.min_abs.value.hi()) << ','
        << coeff_string(row.min_abs.argmin) << ',' << row.p << ',' << decimal_down(row.bound) << ','
        << row.log_ratio << ',' << (row.sentinel ? "pass" : "FAIL") << ',' << row.min_abs.evaluated << ','
        << row.min_abs.contenders << ',' << row.seconds << '\n';
  }
}

Json to_json(const AsymptoticReport& r) {
  Json j;
  j["schema"] = "tmeasure.asymptotic/1";
  j["delta"] = r.delta;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["d"] = row.d;
    x["psi"] = rational_json(row.psi);
    x["leading"] = rational_json(row.leading);
    x["difference"] = rational_json(row.difference);
    x["d_times_difference"] = rational_json(row.scaled);
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["bound"] = rational_json(r.bound);
  return j;
}

void write_asymptotic_csv(std::ostream& out, const AsymptoticReport& r) {
  out << "d,delta,psi,leading,difference,d_times_difference\n";
  for (const auto& row : r.rows)
    out << row.d << ',' << r.delta << ',' << to_fraction_string(row.psi) << ',' << to_fraction_string(row.leading)
        << ',' << to_fraction_string(row.difference) << ',' << to_fraction_string(row.scaled) << '\n';
}

}  // namespace tmeasure
