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

#include "tmeasure/effective.hpp"
#include "tmeasure/error.hpp"
#include "tmeasure/exponents.hpp"

using namespace tmeasure;

namespace {

constexpr Precision kBits = 256;

struct Reference {
  Interval a, b;
};

// a and b from their definitions, with q and t supplied by hand.
Reference reference(const Interval& abs_alpha, long delta, long p, long q, const Interval& t) {
  Interval two_qt = Interval(2 * q, kBits) * t;
  Interval a = Interval(factorial(static_cast<unsigned long>(p + 1)), kBits) *
               exp(abs_alpha * Interval(p * (p + 1) / 2, kBits)) * pow(two_qt, static_cast<unsigned long>(p * delta));
  Interval b = pow(two_qt, static_cast<unsigned long>((p + 1) * delta));
  return {a, b};
}

bool overlap(const Interval& x, const Interval& y) { return !certainly_less(x, y) && !certainly_less(y, x); }

// m n (log n - 1) - d n log b  against  log 2 + d log a + (p - delta + 1) d log H
int defining_sign(const EffectiveConstants& c, const BigRational& H, const BigInt& n) {
  Interval ni(n, kBits);
  Interval lhs = Interval(c.m(), kBits) * ni * (log(ni) - Interval(1L, kBits)) -
                 Interval(c.d, kBits) * ni * log(c.b);
  Interval rhs = log(Interval(2L, kBits)) + Interval(c.d, kBits) * log(c.a) +
                 Interval((c.p - c.delta + 1) * c.d, kBits) * log(Interval(H, kBits));
  if (certainly_less_equal(rhs, lhs)) return 1;
  if (certainly_less(lhs, rhs)) return -1;
  return 0;
}

}  // namespace

TEST_CASE("constants from their definitions") {
  SUBCASE("alpha = 1") {
    EffectiveConstants c = constants(AlgebraicNumber::parse("x-1"), 1, 1, 1);
    CHECK(c.q == 1);
    CHECK(c.m() == 1);
    Reference r = reference(Interval(1L, kBits), 1, 1, 1, Interval(1L, kBits));
    CHECK(overlap(c.a, r.a));
    CHECK(overlap(c.b, r.b));
    CHECK(c.psi == 1);
  }
  SUBCASE("alpha = 1/2") {
    EffectiveConstants c = constants(AlgebraicNumber::parse("1/2"), 1, 2, 2);
    // 1/alpha = 2: denominator 1, house 2
    CHECK(c.den_inverse == 1);
    CHECK(c.q == 2);
    CHECK(c.t.contains(BigRational(2)));
    Reference r = reference(Interval(BigRational(1, 2), kBits), 2, 2, 2, Interval(2L, kBits));
    CHECK(overlap(c.a, r.a));
    CHECK(overlap(c.b, r.b));
  }
  SUBCASE("alpha = sqrt 2") {
    EffectiveConstants c = constants(AlgebraicNumber::parse("x^2-2:+re"), 2, 1, 2);
    // 1/alpha has minimal polynomial 2x^2 - 1 and house 1/sqrt 2 < 1
    CHECK(c.den_inverse == 2);
    CHECK(c.q == 4);
    CHECK(c.t.contains(BigRational(1)));
    Reference r = reference(sqrt(Interval(2L, kBits)), 1, 2, 4, Interval(1L, kBits));
    CHECK(overlap(c.a, r.a));
    CHECK(overlap(c.b, r.b));
    CHECK(c.psi == 11);
  }
  CHECK_THROWS_AS(constants(AlgebraicNumber::parse("x^2-2:+re"), 3, 1, 5), Error);
  CHECK_THROWS_AS(constants(AlgebraicNumber::parse("x-1"), 1, 2, 1), Error);
}

TEST_CASE("n0 by direct scan") {
  EffectiveConstants c = constants(AlgebraicNumber::parse("x-1"), 1, 1, 1);
  BoundEvaluation e = find_n0(c, 1);
  BigInt n = 1;
  while (defining_sign(c, 1, n) < 0) ++n;
  CHECK(defining_sign(c, 1, n) == 1);
  CHECK(e.n0 == n);
  CHECK(e.n0 == 14);
  CHECK(e.n0_certified);
  CHECK(e.n0_cap_ok);
}

TEST_CASE("n0 consistency grid") {
  const char* alphas[] = {"x-1", "x^2-2:+re", "x^3-2:+re"};
  for (long d = 1; d <= 3; ++d)
    for (long delta = 1; delta <= 2; ++delta)
      for (long H : {1L, 10L, 1000L, 1000000L}) {
        CAPTURE(d);
        CAPTURE(delta);
        CAPTURE(H);
        AlgebraicNumber alpha = AlgebraicNumber::parse(alphas[d - 1]);
        EffectiveConstants c = constants(alpha, d, delta, optimal_p(d, delta).lambda);
        BoundEvaluation e = find_n0(c, H);
        CHECK(e.n0_certified);
        CHECK(e.n0_cap_ok);
        CHECK(defining_sign(c, H, e.n0) == 1);
        if (e.n0 > 1) CHECK(defining_sign(c, H, e.n0 - 1) == -1);
        CHECK(certainly_less_equal(Interval(e.n0, kBits), e.n0_cap));
      }
}

TEST_CASE("lower bound and Mahlerian form") {
  EffectiveConstants c = constants(AlgebraicNumber::parse("x-1"), 1, 1, 1);
  BoundEvaluation e1 = certified_lower_bound(c, 1);
  CHECK(!e1.mahlerian_exponent.has_value());
  CHECK(mpfr_sgn(e1.lower_bound.get()) > 0);
  // exp(-log_denominator.hi) rounded down
  Float expect(kBits);
  mpfr_neg(expect.get(), e1.log_denominator.hi().get(), MPFR_RNDD);
  mpfr_exp(expect.get(), expect.get(), MPFR_RNDU);
  CHECK(mpfr_lessequal_p(e1.lower_bound.get(), expect.get()));

  BoundEvaluation e = certified_lower_bound(c, 100);
  REQUIRE(e.mahlerian_exponent.has_value());
  REQUIRE(e.varpi.has_value());
  // mahlerian exponent times log H recovers the log of the denominator
  Interval back = *e.mahlerian_exponent * log(Interval(100L, kBits));
  CHECK(overlap(back, e.log_denominator));
  CHECK(certainly_less(Interval(c.psi, kBits), *e.mahlerian_exponent));
  // the bound decreases with H
  CHECK(mpfr_less_p(e.lower_bound.get(), e1.lower_bound.get()));
}

TEST_CASE("choice of p") {
  ChosenBound b = choose_p_and_bound(AlgebraicNumber::parse("x^2-2:+re"), 2, 1, 100);
  CHECK(b.constants.p == 2);
  CHECK(b.constants.psi == 11);
  CHECK(b.evaluation.n0_certified);
  Json j = certificate_json(b.constants, b.evaluation);
  CHECK(j["schema"] == "tmeasure.bound/1");
  CHECK(j["psi"]["exact"] == "11");
  CHECK(j.contains("lower_bound"));
  CHECK(j.contains("mahlerian_exponent"));
}

TEST_CASE("internal constant inequalities") {
  AlgebraicNumber one = AlgebraicNumber::parse("x-1");
  InternalConstantsReport r1 = internal_constants_check(constants(one, 1, 1, 1));
  CHECK(r1.c1_equals_c6);
  CHECK(!r1.strict_ok);
  CHECK(r1.nonstrict_ok);
  CHECK(r1.growth_ok);
  InternalConstantsReport r2 = internal_constants_check(constants(AlgebraicNumber::parse("x^2-2:+re"), 2, 1, 2));
  CHECK(!r2.c1_equals_c6);
  CHECK(r2.strict_ok);
  CHECK(r2.growth_ok);
}
