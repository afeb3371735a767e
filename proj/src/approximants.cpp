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


#include "tmeasure/approximants.hpp"

#include <cmath>
#include <future>
#include <limits>

#include "tmeasure/error.hpp"

namespace tmeasure {

namespace {

FieldElement one_in(const FieldPtr& field) { return FieldElement::constant(field, 1); }

long degree_bound(long n, long k, long ell) { return k <= ell ? n : n - 1; }

double log_of(const Float& x) {
  if (mpfr_sgn(x.get()) <= 0) return -std::numeric_limits<double>::infinity();
  Float l(x.precision());
  mpfr_log(l.get(), x.get(), MPFR_RNDN);
  return l.to_double();
}

// Canonical scalar: integral power-basis coordinates, primitive, first nonzero
// coordinate in (k, degree, basis index) order positive.
void normalize(std::vector<FieldElement>& v, const FieldPtr& field) {
  BigInt den = 1;
  for (const auto& x : v)
    for (const auto& c : x.coordinates()) den = lcm(den, BigInt(c.get_den()));
  BigInt g = 0;
  int sign = 0;
  for (const auto& x : v) {
    for (const auto& c : x.coordinates()) {
      BigInt scaled = c.get_num() * (den / c.get_den());
      g = gcd(g, scaled);
      if (sign == 0 && scaled != 0) sign = sgn(scaled);
    }
  }
  BigRational factor(den * sign, g);
  factor.canonicalize();
  FieldElement f = FieldElement::constant(field, factor);
  for (auto& x : v) x *= f;
}

FieldElement residue_leading(const FieldPtr& field, long n, long p, long ell) {
  FieldElement alpha = FieldElement::generator(field);
  FieldElement denom = FieldElement::constant(field, BigRational(factorial(static_cast<unsigned long>(n))));
  for (long j = 1; j <= p; ++j) {
    long power = j <= ell ? n + 1 : n;
    denom *= pow(FieldElement::constant(field, -j) * alpha, static_cast<unsigned long>(power));
  }
  return one_in(field) / denom;
}

FieldElement value_at_one(const FieldPolynomial& poly) {
  FieldElement acc;
  for (const auto& c : poly.coefficients()) acc += c;
  return acc;
}

}  // namespace

BoundCheck check_le(const Interval& value, const Interval& bound) {
  BoundCheck c;
  c.passed = certainly_less_equal(value, bound);
  c.log_slack = mpfr_sgn(value.hi().get()) <= 0 ? std::numeric_limits<double>::infinity()
                                                 : log_of(bound.lo()) - log_of(value.hi());
  c.value = value;
  c.bound = bound;
  return c;
}

SeriesEngine::SeriesEngine(FieldPtr field, long truncation_order) : field_(std::move(field)), order_(truncation_order) {
  FieldElement alpha = FieldElement::generator(field_);
  FieldElement cur = one_in(field_);
  for (long i = 0; i < order_; ++i) {
    alpha_powers_over_factorial_.push_back(cur);
    cur = cur * alpha * FieldElement::constant(field_, BigRational(1, i + 1));
  }
}

FieldElement SeriesEngine::coefficient(long k, long j, long m) const {
  if (m < j || m >= order_) return FieldElement::constant(field_, 0);
  const long e = m - j;
  if (k == 0) return FieldElement::constant(field_, e == 0 ? 1 : 0);
  return alpha_powers_over_factorial_[static_cast<std::size_t>(e)] *
         FieldElement::constant(field_, BigRational(pow(BigInt(k), static_cast<unsigned long>(e))));
}

std::vector<FieldElement> SeriesEngine::combination(const std::vector<FieldPolynomial>& polys) const {
  std::vector<FieldElement> out(static_cast<std::size_t>(order_), FieldElement::constant(field_, 0));
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto& c = polys[k].coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      for (long m = static_cast<long>(j); m < order_; ++m)
        out[static_cast<std::size_t>(m)] += c[j] * coefficient(static_cast<long>(k), static_cast<long>(j), m);
    }
  }
  return out;
}

ApproximantColumn build_column(const FieldPtr& field, long n, long p, long ell) {
  if (n < 1 || p < 0 || ell < 0 || ell > p)
    throw Error(ErrorCode::ConstraintViolated, "build_column needs n >= 1, p >= 0, 0 <= ell <= p");
  if (field->generator().is_zero()) throw Error(ErrorCode::ZeroInput, "alpha must be nonzero");
  const long equations = (p + 1) * n + ell;
  const long unknowns = equations + 1;
  SeriesEngine series(field, equations + 1);

  Matrix<FieldElement> system(equations, unknowns);
  long col = 0;
  for (long k = 0; k <= p; ++k)
    for (long j = 0; j <= degree_bound(n, k, ell); ++j, ++col)
      for (long m = 0; m < equations; ++m) system(m, col) = series.coefficient(k, j, m);

  auto kernel = nullspace(std::move(system), one_in(field));
  if (kernel.size() != 1)
    throw Error(ErrorCode::KernelDimensionUnexpected,
                "kernel dimension " + std::to_string(kernel.size()) + " for ell = " + std::to_string(ell));
  std::vector<FieldElement> v(kernel.front().data(), kernel.front().data() + kernel.front().size());
  normalize(v, field);

  ApproximantColumn out;
  out.ell = ell;
  col = 0;
  for (long k = 0; k <= p; ++k) {
    std::vector<FieldElement> coeffs;
    for (long j = 0; j <= degree_bound(n, k, ell); ++j) coeffs.push_back(v[static_cast<std::size_t>(col++)]);
    FieldPolynomial poly(std::move(coeffs));
    if (poly.degree() != degree_bound(n, k, ell))
      throw Error(ErrorCode::DegreePatternViolation, "deg P_{" + std::to_string(k) + "," + std::to_string(ell) +
                                                         "} = " + std::to_string(poly.degree()));
    out.polys.push_back(std::move(poly));
  }
  std::vector<FieldElement> taylor = series.combination(out.polys);
  for (long m = 0; m < equations; ++m)
    if (!taylor[static_cast<std::size_t>(m)].is_zero())
      throw Error(ErrorCode::AssertionFailed, "kernel vector does not annihilate order " + std::to_string(m));
  out.vanishing_order = equations;
  out.next_coefficient = taylor[static_cast<std::size_t>(equations)];
  if (out.next_coefficient.is_zero())
    throw Error(ErrorCode::VanishingOrderExcess, "remainder vanishes beyond order " + std::to_string(equations));
  out.hermite_scale = residue_leading(field, n, p, ell) / out.polys[0].leading();
  return out;
}

ApproximantSystem build_system(const FieldPtr& field, long n, long p) {
  if (n < 1 || p < 1) throw Error(ErrorCode::ConstraintViolated, "build_system needs n >= 1 and p >= 1");
  ApproximantSystem sys;
  sys.field = field;
  sys.n = n;
  sys.p = p;
  std::vector<std::future<ApproximantColumn>> jobs;
  for (long ell = 0; ell <= p; ++ell)
    jobs.push_back(std::async(std::launch::async, [&field, n, p, ell] { return build_column(field, n, p, ell); }));
  for (auto& j : jobs) sys.columns.push_back(j.get());

  Matrix<FieldPolynomial> m(p + 1, p + 1);
  for (long k = 0; k <= p; ++k)
    for (long ell = 0; ell <= p; ++ell) m(k, ell) = sys.poly(k, ell);
  sys.determinant = determinant(std::move(m));
  const long expected = (p + 1) * n;
  if (sys.determinant.degree() != expected)
    throw Error(ErrorCode::DeterminantShapeViolation,
                "det has degree " + std::to_string(sys.determinant.degree()) + ", expected " + std::to_string(expected));
  for (long i = 0; i < expected; ++i)
    if (!sys.determinant.coeff(static_cast<std::size_t>(i)).is_zero())
      throw Error(ErrorCode::DeterminantShapeViolation, "det has a nonzero x^" + std::to_string(i) + " term");
  sys.det_constant = sys.determinant.leading();
  return sys;
}

bool det_at_one_check(const ApproximantSystem& system) {
  const long p = system.p;
  Matrix<FieldElement> m(p + 1, p + 1);
  for (long k = 0; k <= p; ++k)
    for (long ell = 0; ell <= p; ++ell) m(k, ell) = value_at_one(system.poly(k, ell));
  FieldElement direct = p == 0 ? m(0, 0) : determinant(std::move(m));
  FieldElement from_poly;
  for (const auto& c : system.determinant.coefficients()) from_poly += c;
  return !direct.is_zero() && direct == from_poly;
}

Matrix<FieldElement> scaled_values(const ApproximantSystem& system, const BigInt& q) {
  const long p = system.p, n = system.n;
  BigInt base = pow(q, static_cast<unsigned long>((p + 1) * n + p)) * factorial(static_cast<unsigned long>(n));
  Matrix<FieldElement> a(p + 1, p + 1);
  for (long ell = 0; ell <= p; ++ell) {
    FieldElement factor =
        FieldElement::constant(system.field, BigRational(base)) * system.columns[static_cast<std::size_t>(ell)].hermite_scale;
    for (long k = 0; k <= p; ++k) a(k, ell) = factor * value_at_one(system.poly(k, ell));
  }
  return a;
}

Ball remainder_at_one(const ApproximantSystem& system, long ell, Precision bits) {
  const auto& column = system.columns[static_cast<std::size_t>(ell)];
  std::vector<FieldElement> values;
  for (long k = 0; k <= system.p; ++k) values.push_back(column.hermite_scale * value_at_one(system.poly(k, ell)));
  for (Precision prec = bits + 64; prec <= kMaxPrecision; prec *= 2) {
    Ball alpha = system.alpha().enclosure(prec);
    Ball sum(prec);
    for (long k = 0; k <= system.p; ++k)
      sum += values[static_cast<std::size_t>(k)].embed(prec) * exp(alpha * Ball(Interval(k, prec)));
    Interval mag = abs(sum);
    if (!mag.is_positive()) continue;
    Float tol(prec);
    mpfr_div_2si(tol.get(), mag.lo().get(), static_cast<long>(bits), MPFR_RNDD);
    if (mpfr_lessequal_p(sum.radius().get(), tol.get())) return sum;
  }
  throw Error(ErrorCode::PrecisionExhausted, "remainder at 1 not resolved");
}

MetricBoundsReport metric_bounds_report(const ApproximantSystem& system, const BigInt& q, Precision bits) {
  const long p = system.p, n = system.n;
  const Precision prec = std::max<Precision>(bits, kDefaultPrecision);
  MetricBoundsReport r;
  r.q = q;
  Interval hinv = house(inverse(system.alpha())).with_precision(prec);
  r.t = max(Interval(1L, prec), hinv);
  const unsigned long big_n = static_cast<unsigned long>((p + 1) * n + p);
  Interval base = pow(Interval(2L, prec) * Interval(q, prec) * r.t, big_n);
  Interval bound1 = base * Interval(factorial(static_cast<unsigned long>(n + 1)), prec);
  Interval bound0 = base * Interval(factorial(static_cast<unsigned long>(n)), prec);

  Matrix<FieldElement> a = scaled_values(system, q);
  Interval worst(0L, prec);
  for (long k = 0; k <= p; ++k) {
    for (long ell = 0; ell <= p; ++ell) {
      for (const auto& c : a(k, ell).conjugates(prec)) worst = max(worst, abs(c));
      if (!charpoly_integrality_check(a(k, ell), system.alpha())) ++r.non_integral_entries;
    }
  }
  r.integrality = r.non_integral_entries == 0;
  r.entries = check_le(worst, bound1);
  r.entries_nfact = check_le(worst, bound0);

  Interval abs_alpha = abs(system.alpha().enclosure(prec));
  Interval nfact(factorial(static_cast<unsigned long>(n)), prec);
  Interval qn = pow(Interval(q, prec), big_n);
  Interval rbound = exp(abs_alpha * Interval(p * (p + 1) / 2, prec)) *
                    pow(Interval(n, prec), static_cast<unsigned long>(p + 1)) * qn /
                    pow(nfact, static_cast<unsigned long>(p));
  for (long ell = 0; ell <= p; ++ell) {
    Ball rem = remainder_at_one(system, ell, 64);
    Interval value = abs(rem) * qn.with_precision(rem.precision()) * nfact.with_precision(rem.precision());
    r.remainders.push_back(check_le(value, rbound));
  }
  return r;
}

Json field_element_json(const FieldElement& x) {
  if (!x.field() || x.field()->degree() == 1) return to_fraction_string(x.rational_value());
  Json arr = Json::array();
  for (const auto& c : x.coordinates()) arr.push_back(to_fraction_string(c));
  return arr;
}

Json to_json(const ApproximantSystem& system) {
  Json j;
  j["schema"] = "tmeasure.approximants/1";
  j["alpha"] = system.alpha().descriptor();
  j["n"] = system.n;
  j["p"] = system.p;
  j["basis"] = system.field->degree() == 1 ? "rational" : "power basis 1, alpha, ..., alpha^(d-1)";
  Json cols = Json::array();
  for (const auto& c : system.columns) {
    Json col;
    col["ell"] = c.ell;
    Json polys = Json::array();
    for (const auto& poly : c.polys) {
      Json coeffs = Json::array();
      for (const auto& x : poly.coefficients()) coeffs.push_back(field_element_json(x));
      polys.push_back(coeffs);
    }
    col["P"] = polys;
    col["vanishing_order"] = c.vanishing_order;
    col["next_taylor_coefficient"] = field_element_json(c.next_coefficient);
    col["residue_scale"] = field_element_json(c.hermite_scale);
    cols.push_back(col);
  }
  j["columns"] = cols;
  j["determinant"] = {{"degree", system.determinant.degree()}, {"c", field_element_json(system.det_constant)}};
  j["normalization"] = {
      {"scheme", "canonical"},
      {"rule", "integral power-basis coordinates, primitive, first nonzero coordinate in (k, degree, basis index) "
               "order positive"},
      {"scaled_values", "residue normalization: column ell multiplied by residue_scale"}};
  return j;
}

}  // namespace tmeasure
