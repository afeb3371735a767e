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


#include <doctest.h>

#include "tmeasure/approximants.hpp"
#include <cmath>

#include "tmeasure/error.hpp"

using namespace tmeasure;

namespace {

long weight(long n, long j, long ell) { return j <= ell ? n + 1 : n; }

// Residue of e^{xz} / prod_j (z - j alpha)^{N_j} at z = k alpha, without the
// factor e^{k alpha x}: coefficient of w^{N_k - 1} in e^{xw} prod_{j != k} (w + (k - j) alpha)^{-N_j}.
std::vector<FieldPolynomial> residue_oracle(const FieldPtr& f, long n, long p, long ell) {
  FieldElement alpha = FieldElement::generator(f);
  std::vector<FieldPolynomial> out;
  for (long k = 0; k <= p; ++k) {
    const long top = weight(n, k, ell) - 1;
    std::vector<FieldElement> s(static_cast<std::size_t>(top) + 1, FieldElement::constant(f, 0));
    s[0] = FieldElement::constant(f, 1);
    for (long j = 0; j <= p; ++j) {
      if (j == k) continue;
      const long N = weight(n, j, ell);
      FieldElement c = FieldElement::constant(f, BigRational(k - j)) * alpha;
      FieldElement cinv = c.inverse();
      // (w + c)^{-N} = sum_m (-1)^m binom(N + m - 1, m) c^{-N - m} w^m
      std::vector<FieldElement> factor;
      for (long m = 0; m <= top; ++m) {
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(N + m - 1), static_cast<unsigned long>(m));
        if (m % 2) b = -b;
        factor.push_back(FieldElement::constant(f, BigRational(b)) * pow(cinv, static_cast<unsigned long>(N + m)));
      }
      std::vector<FieldElement> next(s.size(), FieldElement::constant(f, 0));
      for (long a = 0; a <= top; ++a)
        for (long b = 0; a + b <= top; ++b)
          next[static_cast<std::size_t>(a + b)] += s[static_cast<std::size_t>(a)] * factor[static_cast<std::size_t>(b)];
      s = std::move(next);
    }
    std::vector<FieldElement> coeffs;
    for (long i = 0; i <= top; ++i)
      coeffs.push_back(FieldElement::constant(f, BigRational(1, factorial(static_cast<unsigned long>(i)))) *
                       s[static_cast<std::size_t>(top - i)]);
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

FieldPolynomial scaled(const FieldPolynomial& p, const FieldElement& c) {
  std::vector<FieldElement> v;
  for (const auto& x : p.coefficients()) v.push_back(x * c);
  return FieldPolynomial(std::move(v));
}

FieldElement at(const FieldPolynomial& p, const FieldElement& x) {
  FieldElement acc = FieldElement::constant(x.field(), 0);
  for (std::size_t i = p.coefficients().size(); i-- > 0;) acc = acc * x + p.coefficients()[i];
  return acc;
}

// Taylor coefficients of sum_k P_k(x) e^{k a x} for rational a, up to `order`.
std::vector<BigRational> taylor_rational(const std::vector<std::vector<BigRational>>& P, const BigRational& a,
                                         long order) {
  std::vector<BigRational> t(static_cast<std::size_t>(order), 0);
  for (std::size_t k = 0; k < P.size(); ++k)
    for (std::size_t j = 0; j < P[k].size(); ++j)
      for (long m = static_cast<long>(j); m < order; ++m) {
        long e = m - static_cast<long>(j);
        t[static_cast<std::size_t>(m)] += P[k][j] * pow(BigRational(static_cast<long>(k)) * a, static_cast<unsigned long>(e)) /
                                          BigRational(factorial(static_cast<unsigned long>(e)));
      }
  return t;
}

const char* const kAlphas[] = {"x-1", "2x-1", "x^2-2:+re", "x^2+1:+im"};

}  // namespace

TEST_CASE("hand-computed system for alpha = 1, n = 1, p = 1") {
  FieldPtr f = NumberField::create(AlgebraicNumber::parse("x-1"));
  ApproximantSystem s = build_system(f, 1, 1);
  auto coords = [](const FieldPolynomial& p) {
    std::vector<BigRational> v;
    for (const auto& c : p.coefficients()) v.push_back(c.rational_value());
    return v;
  };
  using V = std::vector<BigRational>;
  CHECK(coords(s.poly(0, 0)) == V{1, 1});
  CHECK(coords(s.poly(1, 0)) == V{-1});
  CHECK(coords(s.poly(0, 1)) == V{2, 1});
  CHECK(coords(s.poly(1, 1)) == V{-2, 1});
  CHECK(s.determinant.degree() == 2);
  CHECK(s.det_constant.rational_value() == 1);

  // R_0 = -(e^x - 1 - x), R_1 = x^3/6 + ...
  auto t0 = taylor_rational({coords(s.poly(0, 0)), coords(s.poly(1, 0))}, 1, 6);
  CHECK(t0 == V{0, 0, BigRational(-1, 2), BigRational(-1, 6), BigRational(-1, 24), BigRational(-1, 120)});
  auto t1 = taylor_rational({coords(s.poly(0, 1)), coords(s.poly(1, 1))}, 1, 5);
  CHECK(t1 == V{0, 0, 0, BigRational(1, 6), BigRational(1, 12)});
  CHECK(s.columns[0].next_coefficient.rational_value() == BigRational(-1, 2));
  CHECK(s.columns[1].next_coefficient.rational_value() == BigRational(1, 6));

  Matrix<FieldElement> a = scaled_values(s, 1);
  CHECK(a(0, 0).rational_value() == -2);
  CHECK(a(1, 0).rational_value() == 1);
  CHECK(a(0, 1).rational_value() == 3);
  CHECK(a(1, 1).rational_value() == -1);
}

TEST_CASE("structure over the small grid") {
  for (const char* text : kAlphas) {
    FieldPtr f = NumberField::create(AlgebraicNumber::parse(text));
    for (long n = 1; n <= 3; ++n)
      for (long p = 1; p <= 3; ++p) {
        CAPTURE(text);
        CAPTURE(n);
        CAPTURE(p);
        ApproximantSystem s = build_system(f, n, p);
        Matrix<FieldElement> at2(p + 1, p + 1);
        FieldElement two = FieldElement::constant(f, 2);
        for (long ell = 0; ell <= p; ++ell) {
          const auto& col = s.columns[static_cast<std::size_t>(ell)];
          CHECK(col.vanishing_order == (p + 1) * n + ell);
          CHECK(!col.next_coefficient.is_zero());
          for (long k = 0; k <= p; ++k) {
            CHECK(s.poly(k, ell).degree() == weight(n, k, ell) - 1);
            at2(k, ell) = at(s.poly(k, ell), two);
          }
          // residue normalization reproduces the contour-integral polynomials
          auto oracle = residue_oracle(f, n, p, ell);
          for (long k = 0; k <= p; ++k) CHECK(scaled(s.poly(k, ell), col.hermite_scale) == oracle[static_cast<std::size_t>(k)]);
        }
        CHECK(s.determinant.degree() == (p + 1) * n);
        CHECK(!s.det_constant.is_zero());
        CHECK(determinant(at2) == s.det_constant * pow(two, static_cast<unsigned long>((p + 1) * n)));
        CHECK(det_at_one_check(s));
      }
  }
}

TEST_CASE("scaled values and remainders") {
  for (const char* text : kAlphas) {
    CAPTURE(text);
    FieldPtr f = NumberField::create(AlgebraicNumber::parse(text));
    const long n = 2, p = 2;
    ApproximantSystem s = build_system(f, n, p);
    BigInt q = 2;
    Matrix<FieldElement> a = scaled_values(s, q);
    FieldElement one = FieldElement::constant(f, 1);
    BigInt mult = pow(q, static_cast<unsigned long>((p + 1) * n + p)) * factorial(static_cast<unsigned long>(n));
    for (long ell = 0; ell <= p; ++ell) {
      auto oracle = residue_oracle(f, n, p, ell);
      Ball sum(192);
      Ball alpha = f->generator().enclosure(192);
      for (long k = 0; k <= p; ++k) {
        FieldElement expect = FieldElement::constant(f, BigRational(mult)) * at(oracle[static_cast<std::size_t>(k)], one);
        CHECK(a(k, ell) == expect);
        sum += at(oracle[static_cast<std::size_t>(k)], one).embed(192) * exp(alpha * Ball(Interval(k, 192)));
      }
      CHECK(remainder_at_one(s, ell, 64).overlaps(sum));
    }
  }
}

TEST_CASE("metric bounds for sqrt 2") {
  FieldPtr f = NumberField::create(AlgebraicNumber::parse("x^2-2:+re"));
  ApproximantSystem s = build_system(f, 2, 2);
  MetricBoundsReport r = metric_bounds_report(s, 2, 128);
  CHECK(r.entries.passed);
  CHECK(r.entries.log_slack > 0);
  CHECK(r.integrality);
  for (const auto& c : r.remainders) CHECK(c.passed);
}

TEST_CASE("bound checks") {
  BoundCheck c = check_le(Interval(2L, 64), Interval(3L, 64));
  CHECK(c.passed);
  CHECK(c.log_slack == doctest::Approx(std::log(1.5)));
  CHECK(!check_le(Interval(3L, 64), Interval(2L, 64)).passed);
  CHECK(check_le(Interval(-1L, 64), Interval(1L, 64)).passed);
}

TEST_CASE("JSON shape") {
  ApproximantSystem s = build_system(NumberField::create(AlgebraicNumber::parse("x-1")), 1, 1);
  Json j = to_json(s);
  CHECK(j["schema"] == "tmeasure.approximants/1");
  CHECK(j["columns"].size() == 2);
  CHECK(j["determinant"]["degree"] == 2);
}

TEST_CASE("preconditions") {
  FieldPtr f = NumberField::create(AlgebraicNumber::parse("x-1"));
  CHECK_THROWS_AS(build_system(f, 0, 1), Error);
  CHECK_THROWS_AS(build_system(f, 1, 0), Error);
}
