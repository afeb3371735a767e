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

#include "tmeasure/ball.hpp"
#include "tmeasure/interval.hpp"

using namespace tmeasure;

namespace {

BigRational q(const char* s) { return BigRational(s); }

}  // namespace

TEST_CASE("interval arithmetic encloses exact rationals") {
  Interval third = Interval(1L, 64) / Interval(3L, 64);
  CHECK(third.contains(q("1/3")));
  CHECK(!third.contains(q("1/3") + q("1/1000000000000")));
  Interval sum = third + third + third;
  CHECK(sum.contains(BigRational(1)));

  Interval x(q("-7/5"), 100);
  CHECK(abs(x).contains(q("7/5")));
  CHECK(sqr(x).contains(q("49/25")));
  CHECK(pow(x, 3).contains(q("-343/125")));
  CHECK(certainly_less(x, Interval(0L, 100)));
  CHECK(!certainly_less(x, x));
  CHECK(certainly_less_equal(Interval(2L, 64), Interval(2L, 64)));
}

TEST_CASE("elementary functions against decimal references") {
  // e = 2.71828182845904523536028747135266249775724709369995...
  Interval e = Interval::e(200);
  CHECK(certainly_less(Interval(q("2718281828459045235360287471352662497757/1000000000000000000000000000000000000000"), 200), e));
  CHECK(certainly_less(e, Interval(q("2718281828459045235360287471352662497758/1000000000000000000000000000000000000000"), 200)));

  Interval two(2L, 128);
  Interval r = sqrt(two);
  CHECK(sqr(r).contains(BigRational(2)));
  CHECK(exp(log(two)).contains(BigRational(2)));
  // sin^2 + cos^2 = 1
  Interval t(q("3/7"), 128);
  CHECK((sqr(sin(t)) + sqr(cos(t))).contains(BigRational(1)));
  // log 10! = log 3628800
  Interval lf = Interval::log_factorial(BigInt(10), 128);
  Interval direct = log(Interval(BigInt(3628800), 128));
  CHECK(!certainly_less(lf, direct));
  CHECK(!certainly_less(direct, lf));
}

TEST_CASE("interval precision and hull") {
  Interval a(1L, 64), b(5L, 64);
  Interval h = Interval::hull(a, b);
  CHECK(h.contains(BigRational(3)));
  CHECK(max(a, b).contains(BigRational(5)));
  CHECK(min(a, b).contains(BigRational(1)));
  Interval c = (Interval(1L, 256) / Interval(3L, 256)).with_precision(53);
  CHECK(c.contains(q("1/3")));
  CHECK(c.precision() == 53);
}

TEST_CASE("ball arithmetic") {
  Ball z(q("3"), q("4"), 128);
  CHECK(abs(z).contains(BigRational(5)));
  Ball w = z * z.conj();
  CHECK(w.real().contains(BigRational(25)));
  CHECK(w.imag().contains(BigRational(0)));
  Ball u = z / z;
  CHECK(u.real().contains(BigRational(1)));
  CHECK(u.imag().contains(BigRational(0)));

  // |exp(i t)| = 1 and exp(a) exp(b) = exp(a + b)
  Ball it(BigRational(0), q("5/3"), 128);
  CHECK(abs(exp(it)).contains(BigRational(1)));
  Ball a(q("1/2"), q("-1/3"), 128), b(q("-2"), q("7/4"), 128);
  CHECK((exp(a) * exp(b)).overlaps(exp(a + b)));
  CHECK(pow(z, 3).overlaps(z * z * z));
  CHECK(z.contains(z.midpoint_ball()));
  CHECK(!z.contains_zero());
  CHECK((z - z).contains_zero());
}
