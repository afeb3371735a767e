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

#include <complex>
#include <functional>

#include "tmeasure/algebraic.hpp"
#include "tmeasure/error.hpp"

using namespace tmeasure;

namespace {

// Vieta: sum and product of the isolated roots against the coefficients.
void check_vieta(const std::string& text) {
  IntPolynomial f = parse_polynomial(text);
  RootIsolation iso = isolate_roots(f, 80);
  const int d = f.degree();
  REQUIRE(static_cast<int>(iso.roots.size()) == d);
  Ball sum(96), prod(Interval(1L, 96));
  for (const auto& r : iso.roots) {
    sum += r;
    prod *= r;
  }
  BigRational lead(f.leading());
  BigRational e1 = -BigRational(f.coeff(static_cast<std::size_t>(d - 1))) / lead;
  BigRational en = BigRational(f.coeff(0)) / lead;
  if (d % 2) en = -en;
  CHECK(sum.real().contains(e1));
  CHECK(sum.imag().contains(BigRational(0)));
  CHECK(prod.real().contains(en));
  CHECK(prod.imag().contains(BigRational(0)));
  for (std::size_t i = 0; i < iso.roots.size(); ++i) {
    Ball v = f.evaluate(iso.roots[i], [](const BigInt& c) { return Ball(Interval(c, 96)); });
    CHECK(v.contains_zero());
    for (std::size_t j = i + 1; j < iso.roots.size(); ++j) CHECK(!iso.roots[i].overlaps(iso.roots[j]));
  }
}

bool throws_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("root isolation satisfies Vieta") {
  for (const char* f : {"x^2-2", "x^2+1", "x^3-2", "x^5-x-1", "x^8-3x^3+x-7", "2x^2-1", "3x^4+x^3-5x+1"}) {
    CAPTURE(f);
    check_vieta(f);
  }
}

TEST_CASE("real roots are flagged") {
  RootIsolation iso = isolate_roots(parse_polynomial("x^3-2"), 64);
  int real = 0;
  for (bool r : iso.real) real += r;
  CHECK(real == 1);
  iso = isolate_roots(parse_polynomial("x^2+1"), 64);
  CHECK(!iso.real[0]);
  CHECK(!iso.real[1]);
}

TEST_CASE("selectors") {
  AlgebraicNumber s = AlgebraicNumber::parse("x^2-2:+re");
  Ball b = s.enclosure(128);
  CHECK(certainly_less(Interval(BigRational("14142135623730950/10000000000000000"), 128), b.real()));
  CHECK(certainly_less(b.real(), Interval(BigRational("14142135623730951/10000000000000000"), 128)));
  CHECK(sqr(b.real()).contains(BigRational(2)));

  Ball m = AlgebraicNumber::parse("x^2-2:-re").enclosure(64);
  CHECK(m.real().is_negative());

  Ball i = AlgebraicNumber::parse("x^2+1:+im").enclosure(64);
  CHECK(i.imag().contains(BigRational(1)));
  CHECK(i.real().contains(BigRational(0)));
  Ball mi = AlgebraicNumber::parse("x^2+1:-im").enclosure(64);
  CHECK(mi.imag().contains(BigRational(-1)));

  AlgebraicNumber half = AlgebraicNumber::parse("1/2");
  CHECK(half.is_rational());
  CHECK(half.rational_value() == BigRational(1, 2));
  CHECK(same_number(half, AlgebraicNumber::parse("2x-1")));
  CHECK(AlgebraicNumber::parse("x-1").rational_value() == 1);
}

TEST_CASE("descriptor round trip") {
  for (const char* text : {"x^2-2:+re", "x^3-2:+re", "x^2+1:-im", "x^5-x-1:+re", "2x-1"}) {
    AlgebraicNumber a = AlgebraicNumber::parse(text);
    AlgebraicNumber b = AlgebraicNumber::parse(a.descriptor());
    CHECK(same_number(a, b));
  }
}

TEST_CASE("invalid inputs") {
  CHECK(throws_code(ErrorCode::InvalidAlgebraic, [] { AlgebraicNumber::parse("x^2-4:+re"); }));
  CHECK(throws_code(ErrorCode::InvalidAlgebraic, [] { AlgebraicNumber::parse("x^4-4x^2+4:+re"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { AlgebraicNumber::parse("x^2-2"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { AlgebraicNumber::parse("x^2-2:sideways"); }));
  CHECK(throws_code(ErrorCode::InvalidAlgebraic, [] { AlgebraicNumber::parse("x^2-2:box=-2,2,-1,1"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { parse_polynomial("x^^2"); }));
}

TEST_CASE("polynomial text") {
  CHECK(to_string(parse_polynomial("2x^2-1")) == "2x^2-1");
  CHECK(to_string(parse_polynomial("-x + x^3 - 1")) == "x^3-x-1");
  IntPolynomial f = parse_polynomial("x^3-2");
  CHECK(f.coeff(3) == 1);
  CHECK(f.coeff(0) == -2);
}

TEST_CASE("house, denominator and inverse") {
  AlgebraicNumber c = AlgebraicNumber::parse("x^3-2:+re");
  Interval h = house(c);
  CHECK(pow(h, 3).contains(BigRational(2)));

  AlgebraicNumber s = AlgebraicNumber::parse("x^2-2:+re");
  AlgebraicNumber inv = inverse(s);
  CHECK(to_string(inv.minpoly()) == "2x^2-1");
  CHECK(denominator_surrogate(inv) == 2);
  CHECK(sqr(house(inv)).contains(BigRational(1, 2)));
  CHECK((inv.enclosure(64) * s.enclosure(64)).real().contains(BigRational(1)));

  AlgebraicNumber half = AlgebraicNumber::parse("1/2");
  CHECK(inverse(half).rational_value() == 2);
  CHECK(denominator_surrogate(half) == 2);

  HouseDenReport r = house_den_bound_check(AlgebraicNumber::parse("x^2+x+1:+im"));
  CHECK(r.denominator_ok);
  CHECK(r.house_ok);
}

TEST_CASE("conjugates are the roots") {
  AlgebraicNumber c = AlgebraicNumber::parse("x^3-2:+re");
  auto conj = conjugates(c, 64);
  REQUIRE(conj.size() == 3);
  for (const auto& z : conj) CHECK(pow(z, 3).real().contains(BigRational(2)));
}
