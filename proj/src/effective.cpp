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


#include "tmeasure/effective.hpp"

#include "tmeasure/error.hpp"
#include "tmeasure/exponents.hpp"

namespace tmeasure {

namespace {

constexpr Precision kEffectivePrecisionCap = 8192;

struct Derived {
  Interval log_u;
  Interval log_v;
};

Derived derive(const EffectiveConstants& c, const BigRational& H) {
  const Precision prec = c.precision;
  Interval log_h = log(Interval(H, prec));
  Interval log_2adh = log(Interval(2L, prec)) + Interval(c.d, prec) * c.log_a +
                      Interval((c.p - c.delta + 1) * c.d, prec) * log_h;
  Interval m(c.m(), prec);
  return Derived{log_2adh / m, Interval(1L, prec) + Interval(c.d, prec) * c.log_b / m};
}

// n log(n / v) >= log u, decided on enclosures; nullopt when ambiguous.
std::optional<bool> stirling_holds(const BigInt& n, const Derived& x, Precision prec) {
  Interval ni(n, prec);
  Interval f = ni * (log(ni) - x.log_v);
  if (certainly_less_equal(x.log_u, f)) return true;
  if (certainly_less(f, x.log_u)) return false;
  return std::nullopt;
}

// log n! - n (d/m) log b >= log u
std::optional<bool> factorial_holds(const BigInt& n, const Derived& x, const EffectiveConstants& c) {
  const Precision prec = c.precision;
  Interval g = Interval::log_factorial(n, prec) -
               Interval(n, prec) * Interval(c.d, prec) * c.log_b / Interval(c.m(), prec);
  if (certainly_less_equal(x.log_u, g)) return true;
  if (certainly_less(g, x.log_u)) return false;
  return std::nullopt;
}

struct Ambiguous {};

template <typename Holds>
BigInt least_true(BigInt lo, BigInt hi, Holds holds) {
  // holds(lo) is false, holds(hi) is true
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    auto h = holds(mid);
    if (!h) throw Ambiguous{};
    if (*h) hi = mid;
    else lo = mid;
  }
  return hi;
}

BigInt floor_of(const Float& x) {
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), x.get(), MPFR_RNDD);
  return r;
}

BigInt ceil_of(const Float& x) {
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), x.get(), MPFR_RNDU);
  return r;
}

BoundEvaluation find_n0_at(const EffectiveConstants& c, const BigRational& H) {
  const Precision prec = c.precision;
  Derived x = derive(c, H);
  BoundEvaluation e;
  e.H = H;
  e.log_u = x.log_u;
  e.log_v = x.log_v;
  e.u = exp(x.log_u);
  e.v = exp(x.log_v);
  e.n0_cap = sqr(e.v) + Interval(4L, prec) * x.log_u / log(log(e.u + Interval(2L, prec))) + Interval(1L, prec);

  auto holds = [&](const BigInt& n) { return stirling_holds(n, x, prec); };
  BigInt lo = floor_of(e.v.lo());
  if (lo < 1) lo = 1;
  auto at_lo = holds(lo);
  if (!at_lo) throw Ambiguous{};
  if (*at_lo) throw Error(ErrorCode::AssertionFailed, "n0 search: inequality holds below v");
  BigInt hi = ceil_of(e.n0_cap.hi()) + 1;
  for (;;) {
    auto h = holds(hi);
    if (!h) throw Ambiguous{};
    if (*h) break;
    lo = hi;
    hi *= 2;
  }
  e.n0 = least_true(lo, hi, holds);
  auto at = holds(e.n0);
  auto before = holds(e.n0 - 1);
  e.n0_certified = at && *at && (e.n0 == 1 || (before && !*before));
  e.n0_cap_ok = certainly_less_equal(Interval(e.n0, prec), e.n0_cap);

  auto fholds = [&](const BigInt& n) { return factorial_holds(n, x, c); };
  BigInt flo = floor_of(exp(Interval(c.d, prec) * c.log_b / Interval(c.m(), prec)).lo());
  if (flo < 1) flo = 1;
  if (flo >= e.n0) flo = e.n0 - 1;
  auto f_at_lo = fholds(flo);
  if (!f_at_lo) throw Ambiguous{};
  e.n_factorial = (*f_at_lo || flo == 0) ? flo : least_true(flo, e.n0, fholds);
  return e;
}

}  // namespace

EffectiveConstants constants(const AlgebraicNumber& alpha, long d, long delta, long p, Precision bits) {
  if (d < 1 || delta < 1) throw Error(ErrorCode::ConstraintViolated, "constants need d >= 1 and delta >= 1");
  if (p < d * delta) throw Error(ErrorCode::ConstraintViolated, "constants need p >= d delta");
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroInput, "alpha must be nonzero");
  if (d != alpha.degree())
    throw Error(ErrorCode::ConstraintViolated,
                "d = " + std::to_string(d) + " differs from deg(alpha) = " + std::to_string(alpha.degree()));
  EffectiveConstants c(alpha);
  c.d = d;
  c.delta = delta;
  c.p = p;
  c.precision = std::max<Precision>(bits, kDefaultPrecision);
  const Precision prec = c.precision;
  AlgebraicNumber inv = inverse(alpha);
  c.den_inverse = denominator_surrogate(inv);
  c.q = lcm_upto(static_cast<unsigned long>(p)) * c.den_inverse;
  c.abs_alpha = abs(alpha.enclosure(prec)).with_precision(prec);
  c.t = max(Interval(1L, prec), house(inv, static_cast<long>(prec) - 16).with_precision(prec));
  Interval two_qt = Interval(2L, prec) * Interval(c.q, prec) * c.t;
  c.a = Interval(factorial(static_cast<unsigned long>(p + 1)), prec) *
        exp(c.abs_alpha * Interval(p * (p + 1) / 2, prec)) * pow(two_qt, static_cast<unsigned long>(p * delta));
  c.log_a = log(c.a);
  c.b = pow(two_qt, static_cast<unsigned long>((p + 1) * delta));
  c.log_b = log(c.b);
  c.psi = psi(d, delta, p);
  return c;
}

BoundEvaluation find_n0(const EffectiveConstants& c, const BigRational& H) {
  if (H < 1) throw Error(ErrorCode::ConstraintViolated, "H must be >= 1");
  for (Precision prec = c.precision; prec <= kEffectivePrecisionCap; prec *= 2) {
    try {
      if (prec == c.precision) return find_n0_at(c, H);
      return find_n0_at(constants(c.alpha, c.d, c.delta, c.p, prec), H);
    } catch (const Ambiguous&) {
    }
  }
  throw Error(ErrorCode::PrecisionExhausted, "n0 search could not separate the inequality");
}

BoundEvaluation certified_lower_bound(const EffectiveConstants& c, const BigRational& H) {
  BoundEvaluation e = find_n0(c, H);
  const Precision prec = c.precision;
  const BigRational m(c.m());
  BigRational s = BigRational(c.d) + BigRational(c.delta * c.d * c.d) / m;
  BigRational first = 1 + BigRational(c.delta * c.d) / m;
  Interval log_2ad = log(Interval(2L, prec)) + Interval(c.d, prec) * c.log_a;
  Interval log_h = log(Interval(H, prec));
  Interval lnln_u2 = log(log(e.u + Interval(2L, prec)));
  Interval si(s, prec);
  Interval without_h = Interval(first, prec) * log_2ad + (Interval(1L, prec) + sqr(e.v)) * si * c.log_b +
                       si * Interval(4L, prec) * c.log_b * e.log_u / lnln_u2;
  Interval with_h = without_h + Interval(c.psi, prec) * log_h;
  e.log_denominator = with_h;
  Float neg(prec);
  mpfr_neg(neg.get(), with_h.hi().get(), MPFR_RNDD);
  e.lower_bound = Float(prec);
  mpfr_exp(e.lower_bound.get(), neg.get(), MPFR_RNDD);
  if (H > 1) {
    e.mahlerian_exponent = with_h / log_h;
    e.varpi = without_h * log(log(Interval(H, prec) + Interval(2L, prec))) / log_h;
  }
  return e;
}

ChosenBound choose_p_and_bound(const AlgebraicNumber& alpha, long d, long delta, const BigRational& H) {
  long p = optimal_p(d, delta).lambda;
  EffectiveConstants c = constants(alpha, d, delta, p);
  BoundEvaluation e = certified_lower_bound(c, H);
  return ChosenBound{std::move(c), std::move(e)};
}

InternalConstantsReport internal_constants_check(const EffectiveConstants& c, long n_max) {
  const Precision prec = c.precision;
  const long p = c.p, delta = c.delta;
  InternalConstantsReport r;
  r.n_max = n_max;
  Interval two_qt = Interval(2L, prec) * Interval(c.q, prec) * c.t;
  Interval pf(factorial(static_cast<unsigned long>(p + 1)), prec);
  Interval qi(c.q, prec);
  auto ul = [](long x) { return static_cast<unsigned long>(x); };
  r.c1 = pf * exp(c.abs_alpha * Interval(p, prec)) * pow(two_qt, ul(p * delta));
  r.c2 = pow(two_qt, ul((p + 1) * delta));
  r.c3 = pf * exp(c.abs_alpha * Interval(p * (p + 1) / 2, prec)) * pow(qi, ul(p)) * pow(two_qt, ul(p * (delta - 1)));
  r.c4 = pow(qi, ul(p + 1)) * pow(two_qt, ul((p + 1) * (delta - 1)));
  r.c5 = pf * pow(two_qt, ul(p * delta));
  r.c6 = c.a;
  // c1 / c6 = e^{|alpha| (p - p(p+1)/2)}: equal for p = 1, smaller for p >= 2
  r.c1_equals_c6 = p == 1;
  bool c1_below = p >= 2 && certainly_less(r.c1, r.c6);
  bool c3_below = certainly_less(r.c3, r.c6);
  bool c5_below = certainly_less(r.c5, r.c6);
  r.strict_ok = c1_below && c3_below && c5_below;
  r.nonstrict_ok = (c1_below || r.c1_equals_c6) && c3_below && c5_below;
  r.growth_ok = true;
  Interval log_c2 = log(r.c2), log_c4 = log(r.c4);
  for (long n = 1; n <= n_max; ++n) {
    Interval lhs = Interval(p + 1, prec) * log(Interval(n, prec)) + Interval(n, prec) * log_c4;
    if (!certainly_less(lhs, Interval(n, prec) * log_c2)) r.growth_ok = false;
  }
  return r;
}

Json to_json(const EffectiveConstants& c) {
  Json j;
  j["alpha"] = c.alpha.descriptor();
  j["d"] = c.d;
  j["delta"] = c.delta;
  j["p"] = c.p;
  j["q"] = c.q.get_str();
  j["den_inverse"] = c.den_inverse.get_str();
  j["abs_alpha"] = interval_json(c.abs_alpha);
  j["t"] = interval_json(c.t);
  j["a"] = interval_json(c.a);
  j["b"] = interval_json(c.b);
  j["psi"] = rational_json(c.psi);
  j["precision_bits"] = c.precision;
  return j;
}

Json to_json(const BoundEvaluation& e) {
  Json j;
  j["H"] = rational_json(e.H);
  j["u"] = interval_json(e.u);
  j["v"] = interval_json(e.v);
  j["n0"] = e.n0.get_str();
  j["n0_certified"] = e.n0_certified;
  j["n0_cap"] = interval_json(e.n0_cap);
  j["n0_cap_ok"] = e.n0_cap_ok;
  j["n_factorial"] = e.n_factorial.get_str();
  j["log_denominator"] = interval_json(e.log_denominator);
  j["lower_bound"] = decimal_down(e.lower_bound);
  if (e.mahlerian_exponent) j["mahlerian_exponent"] = interval_json(*e.mahlerian_exponent);
  else j["mahlerian_exponent"] = nullptr;
  if (e.varpi) j["varpi"] = interval_json(*e.varpi);
  else j["varpi"] = nullptr;
  return j;
}

Json certificate_json(const EffectiveConstants& c, const BoundEvaluation& e) {
  Json j;
  j["schema"] = "tmeasure.bound/1";
  j.update(to_json(c));
  j.update(to_json(e));
  j["rounding"] = "all enclosures outward; lower_bound rounded toward zero";
  return j;
}

}  // namespace tmeasure
