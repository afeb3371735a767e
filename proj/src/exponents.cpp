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


#include "tmeasure/exponents.hpp"

#include <cstdio>
#include <string>

#include "tmeasure/error.hpp"

namespace tmeasure {

namespace {

Interval sqrt_d2_minus_d(long d, Precision prec) { return sqrt(Interval(d * d - d, prec)); }

std::string float_text(const Interval& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x.midpoint().to_double());
  return buf;
}

// Sign of (q - x) where x is known to be irrational; refines until decided.
template <typename MakeInterval>
int compare_with_irrational(const BigRational& q, MakeInterval make, Interval* kept) {
  for (Precision prec = kDefaultPrecision; prec <= kMaxPrecision; prec *= 2) {
    Interval x = make(prec);
    Interval qi(q, prec);
    int sign = certainly_less(x, qi) ? 1 : certainly_less(qi, x) ? -1 : 0;
    if (sign != 0) {
      if (kept) *kept = x;
      return sign;
    }
  }
  throw Error(ErrorCode::PrecisionExhausted, "cannot separate " + to_fraction_string(q) + " from an irrational bound");
}

}  // namespace

BigRational psi(long d, long delta, long p) {
  if (d < 1 || delta < 1) throw Error(ErrorCode::ConstraintViolated, "psi needs d >= 1 and delta >= 1");
  if (p < delta) throw Error(ErrorCode::ConstraintViolated, "psi needs p >= delta");
  const long den = p - delta * d + 1;
  if (den == 0) throw Error(ErrorCode::DegenerateDenominator, "psi: p - delta d + 1 = 0");
  BigRational first(BigInt(delta) * d * d * (p - delta + 1), BigInt(den));
  first.canonicalize();
  return first + BigRational(BigInt(d) * (p - delta + 1) - 1);
}

BigInt floor_delta_sqrt(long d, long delta) { return isqrt(BigInt(delta) * delta * (BigInt(d) * d - d)); }

OptimalChoice optimal_p(long d, long delta) {
  if (d < 1 || delta < 1) throw Error(ErrorCode::ConstraintViolated, "optimal_p needs d >= 1 and delta >= 1");
  OptimalChoice c;
  c.x0 = Interval(delta * d - 1, kDefaultPrecision) +
         Interval(delta, kDefaultPrecision) * sqrt_d2_minus_d(d, kDefaultPrecision);
  if (d == 1) {
    c.p1 = c.p2 = c.lambda = delta;
    c.psi_lambda = psi(d, delta, delta);
    return c;
  }
  c.p1 = delta * d - 1 + floor_delta_sqrt(d, delta).get_si();
  c.p2 = c.p1 + 1;
  BigRational a = psi(d, delta, c.p1), b = psi(d, delta, c.p2);
  if (a <= b) {
    c.lambda = c.p1;
    c.psi_lambda = a;
  } else {
    c.lambda = c.p2;
    c.psi_lambda = b;
  }
  return c;
}

bool floor_identity_check(long d, long delta) {
  if (d < 2) throw Error(ErrorCode::ConstraintViolated, "floor identity needs d >= 2");
  return floor_delta_sqrt(d, delta) == delta * d - (delta + 2) / 2;
}

CompetingExponents competing_exponents(long d, long delta) {
  CompetingExponents c;
  BigInt base = (BigInt(4) * d * d - 2 * d) * delta;
  c.zheng = base - 1;
  c.mahler = base + 2 * d - 1;
  c.lang_galochkin = BigInt(4) * delta * d * d;
  c.kappe_applicable = delta == 1;
  return c;
}

PsiBoundsReport psi_bounds_check(long d, long delta) {
  if (d < 2) throw Error(ErrorCode::ConstraintViolated, "bounds check needs d >= 2");
  PsiBoundsReport r;
  r.psi_lambda = optimal_p(d, delta).psi_lambda;
  auto lower = [&](Precision prec) {
    Interval s = sqrt_d2_minus_d(d, prec);
    return (Interval(2 * d * d - d, prec) + Interval(2 * d, prec) * s) * Interval(delta, prec) - Interval(1L, prec);
  };
  auto upper = [&](Precision prec) {
    Interval s = sqrt_d2_minus_d(d, prec);
    return lower(prec) + Interval(d, prec) / (Interval(delta, prec) * s - Interval(1L, prec));
  };
  r.lower_ok = compare_with_irrational(r.psi_lambda, lower, &r.lower) > 0;
  r.upper_ok = compare_with_irrational(r.psi_lambda, upper, &r.upper) < 0;
  CompetingExponents c = competing_exponents(d, delta);
  r.zheng_equal = r.psi_lambda == BigRational(c.zheng);
  r.zheng_ok = r.psi_lambda <= BigRational(c.zheng) && r.zheng_equal == (delta == 1);
  if (delta >= 2) r.quarter_ok = r.psi_lambda <= (BigRational(4 * d * d - 2 * d) - BigRational(1, 4)) * delta;
  return r;
}

bool monotonicity_check(long d, long delta_max) {
  BigRational prev = optimal_p(d, 1).psi_lambda;
  for (long delta = 2; delta <= delta_max; ++delta) {
    BigRational cur = optimal_p(d, delta).psi_lambda;
    if (!(cur > prev)) return false;
    prev = cur;
  }
  return true;
}

ClosedFormReport closed_form_check(long d, int which) {
  if (d < 2) throw Error(ErrorCode::ConstraintViolated, "closed forms need d >= 2");
  ClosedFormReport r;
  r.which = which;
  const BigInt D(d);
  switch (which) {
    case 1:
      r.computed = psi(d, 1, 2 * d - 2);
      r.reference_value = BigRational(4 * D * D - 2 * D - 1);
      break;
    case 2:
      r.computed = psi(d, 2, 4 * d - 2);
      r.reference_value = BigRational(16 * D * D * D - 16 * D * D + D + 1, 2 * D - 1);
      break;
    case 3: {
      r.computed = psi(d, 3, 6 * d - 3);
      BigInt num = 36 * D * D * D - 42 * D * D + 7 * D + 2;
      r.reference_value = BigRational(num, 3 * D - 1);
      r.corrected_value = BigRational(num, 3 * D - 2);
      r.corrected_value->canonicalize();
      r.matches_corrected = r.computed == *r.corrected_value;
      break;
    }
    default:
      throw Error(ErrorCode::ConstraintViolated, "closed form index must be 1, 2 or 3");
  }
  r.reference_value.canonicalize();
  r.matches_reference = r.computed == r.reference_value;
  return r;
}

ParityReport parity_scan(long d_max, long delta_max) {
  ParityReport report;
  for (long d = 2; d <= d_max; ++d) {
    for (long delta = 2; delta <= delta_max; ++delta) {
      ParityRow row;
      row.d = d;
      row.delta = delta;
      OptimalChoice c = optimal_p(d, delta);
      row.p1 = c.p1;
      row.p2 = c.p2;
      row.psi_p1 = psi(d, delta, c.p1);
      row.psi_p2 = psi(d, delta, c.p2);
      row.sign = cmp(row.psi_p1, row.psi_p2);
      row.sign = row.sign > 0 ? 1 : row.sign < 0 ? -1 : 0;
      row.matches_pattern = delta % 2 == 1 ? row.sign < 0 : row.sign > 0;
      if (!row.matches_pattern) report.counterexamples.push_back(row);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

BigRational phi(long d, long delta, long p, long k) {
  if (d < 1) throw Error(ErrorCode::ConstraintViolated, "phi: d >= 1 violated");
  if (delta < 1) throw Error(ErrorCode::ConstraintViolated, "phi: delta >= 1 violated");
  if (p < delta) throw Error(ErrorCode::ConstraintViolated, "phi: p >= delta violated");
  if (k < 1) throw Error(ErrorCode::ConstraintViolated, "phi: k >= 1 violated");
  if (k > p - delta + 1) throw Error(ErrorCode::ConstraintViolated, "phi: k <= p - delta + 1 violated");
  const long den = p + k * d - d * (p + 1) + 1;
  if (den <= 0) throw Error(ErrorCode::ConstraintViolated, "phi: p + kd - d(p+1) + 1 > 0 violated");
  BigRational frac(BigInt(d) * d * k * (p - k + 1), BigInt(den));
  frac.canonicalize();
  return BigRational(BigInt(d) * k - 1) + frac;
}

PhiMonotonicity phi_monotonicity_check(long d, long delta, long p) {
  PhiMonotonicity r;
  r.k_max = p - delta + 1;
  r.k_min = r.k_max + 1;
  for (long k = 1; k <= r.k_max; ++k) {
    if (p + k * d - d * (p + 1) + 1 > 0) {
      r.k_min = k;
      break;
    }
  }
  if (r.k_max - r.k_min < 1) throw Error(ErrorCode::ConstraintViolated, "phi monotonicity needs two admissible k");
  bool decreasing = true, constant = true;
  BigRational prev = phi(d, delta, p, r.k_min);
  for (long k = r.k_min + 1; k <= r.k_max; ++k) {
    BigRational cur = phi(d, delta, p, k);
    if (!(cur < prev)) decreasing = false;
    if (cur != prev) constant = false;
    prev = cur;
  }
  r.decreasing = decreasing;
  r.constant = constant;
  return r;
}

ExponentRow exponent_row(long d, long delta) {
  ExponentRow row;
  row.d = d;
  row.delta = delta;
  row.choice = optimal_p(d, delta);
  row.competing = competing_exponents(d, delta);
  if (d >= 2) row.bounds = psi_bounds_check(d, delta);
  return row;
}

void write_exponent_csv(std::ostream& out, const std::vector<ExponentRow>& rows) {
  out << "d,delta,p1,p2,lambda,psi_lambda,zheng,mahler,lang_galochkin,lower_bound_float,upper_bound_float,"
         "zheng_equal\n";
  for (const auto& r : rows) {
    out << r.d << ',' << r.delta << ',' << r.choice.p1 << ',' << r.choice.p2 << ',' << r.choice.lambda << ','
        << to_fraction_string(r.choice.psi_lambda) << ',' << r.competing.zheng << ',' << r.competing.mahler << ','
        << r.competing.lang_galochkin << ',';
    if (r.bounds) out << float_text(r.bounds->lower) << ',' << float_text(r.bounds->upper);
    else out << ',';
    out << ',' << (r.choice.psi_lambda == BigRational(r.competing.zheng) ? "true" : "false") << '\n';
  }
}

}  // namespace tmeasure
