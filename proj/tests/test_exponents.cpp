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

#include <sstream>

#include "tmeasure/error.hpp"
#include "tmeasure/exponents.hpp"

using namespace tmeasure;

namespace {

// Direct transcription, independent of the library.
BigRational psi_oracle(long d, long delta, long p) {
  BigRational r(BigInt(delta) * d * d * (p - delta + 1), BigInt(p - delta * d + 1));
  r.canonicalize();
  return r + BigRational(d * (p - delta + 1) - 1);
}

// argmin of psi over p in [delta d, 4 delta d + 4], first minimizer.
std::pair<long, BigRational> scan_min(long d, long delta) {
  long best = delta * d;
  BigRational val = psi_oracle(d, delta, best);
  for (long p = delta * d + 1; p <= 4 * delta * d + 4; ++p) {
    BigRational v = psi_oracle(d, delta, p);
    if (v < val) {
      val = v;
      best = p;
    }
  }
  return {best, val};
}

}  // namespace

TEST_CASE("psi against the scanned minimum") {
  for (long d = 1; d <= 12; ++d)
    for (long delta = 1; delta <= 12; ++delta) {
      CAPTURE(d);
      CAPTURE(delta);
      OptimalChoice c = optimal_p(d, delta);
      auto [p, v] = scan_min(d, delta);
      CHECK(c.psi_lambda == v);
      CHECK(psi(d, delta, c.lambda) == v);
      // a tie between p1 and p2 resolves to p1, which is also the first scanned minimizer
      CHECK(c.lambda == p);
      CHECK(c.p2 == c.p1 + (d == 1 ? 0 : 1));
    }
}

TEST_CASE("documented values") {
  OptimalChoice c = optimal_p(2, 1);
  CHECK(c.p1 == 2);
  CHECK(c.p2 == 3);
  CHECK(c.lambda == 2);
  CHECK(c.psi_lambda == 11);
  CHECK(psi(2, 1, 3) == 11);
  CHECK(optimal_p(2, 2).lambda == 6);
  CHECK(optimal_p(2, 2).psi_lambda == BigRational(67, 3));
  CHECK(optimal_p(3, 1).p1 == 4);
  CHECK(optimal_p(3, 1).psi_lambda == 29);
  CHECK(optimal_p(1, 7).psi_lambda == 7);
  CHECK(optimal_p(1, 7).lambda == 7);
  CHECK(psi(2, 3, 9) == 34);
  for (long p = 1; p <= 20; ++p) CHECK(psi(1, 1, p) == p);
}

TEST_CASE("x0 brackets p1 and p2") {
  for (long d = 2; d <= 15; ++d)
    for (long delta = 1; delta <= 15; ++delta) {
      OptimalChoice c = optimal_p(d, delta);
      CHECK(certainly_less_equal(Interval(c.p1, 128), c.x0));
      CHECK(certainly_less(c.x0, Interval(c.p2, 128)));
    }
}

TEST_CASE("floor identity") {
  CHECK(floor_identity_check(2, 1));
  CHECK(floor_identity_check(2, 3));
  CHECK(floor_identity_check(2, 8));
  CHECK(floor_delta_sqrt(2, 8) == 11);
  CHECK(floor_delta_sqrt(3, 1) == 2);
  for (long d = 2; d <= 20; ++d)
    for (long delta = 1; delta <= 20; ++delta) {
      BigInt f = floor_delta_sqrt(d, delta);
      BigInt target = BigInt(delta) * delta * (d * d - d);
      CHECK(f * f <= target);
      CHECK((f + 1) * (f + 1) > target);
    }
}

TEST_CASE("competing exponents") {
  CompetingExponents c = competing_exponents(2, 2);
  CHECK(c.zheng == 23);
  CHECK(c.mahler == 27);
  CHECK(c.lang_galochkin == 32);
  CHECK(!c.kappe_applicable);
  CHECK(competing_exponents(2, 1).zheng == 11);
  CHECK(competing_exponents(2, 1).kappe_applicable);
  CHECK(competing_exponents(1, 1).zheng == 1);
}

TEST_CASE("sandwich and dominance") {
  PsiBoundsReport r = psi_bounds_check(2, 1);
  CHECK(r.lower_ok);
  CHECK(r.upper_ok);
  CHECK(r.zheng_equal);
  CHECK(r.zheng_ok);
  CHECK(!r.quarter_ok.has_value());
  r = psi_bounds_check(2, 2);
  CHECK(!r.zheng_equal);
  CHECK(r.quarter_ok.value());
  CHECK(psi_bounds_check(3, 1).zheng_equal);
}

TEST_CASE("monotonicity in delta") {
  CHECK(monotonicity_check(1, 10));
  CHECK(monotonicity_check(2, 3));
  CHECK(monotonicity_check(5, 20));
}

TEST_CASE("closed forms") {
  ClosedFormReport r1 = closed_form_check(2, 1);
  CHECK(r1.matches_reference);
  CHECK(r1.computed == 11);
  ClosedFormReport r2 = closed_form_check(2, 2);
  CHECK(r2.matches_reference);
  CHECK(r2.computed == BigRational(67, 3));
  ClosedFormReport r3 = closed_form_check(2, 3);
  CHECK(r3.computed == 34);
  CHECK(r3.reference_value == BigRational(136, 5));
  CHECK(!r3.matches_reference);
  REQUIRE(r3.corrected_value.has_value());
  CHECK(*r3.corrected_value == 34);
  CHECK(r3.matches_corrected);
}

TEST_CASE("parity scan") {
  ParityReport r = parity_scan(4, 4);
  CHECK(r.rows.size() == 9);
  const ParityRow* row23 = nullptr;
  for (const auto& row : r.rows)
    if (row.d == 2 && row.delta == 3) row23 = &row;
  REQUIRE(row23 != nullptr);
  CHECK(row23->psi_p1 == 34);
  CHECK(row23->psi_p2 == BigRational(171, 5));
  CHECK(row23->sign == -1);
  CHECK(row23->matches_pattern);
  for (const auto& row : r.rows) {
    CHECK(row.psi_p1 == psi_oracle(row.d, row.delta, row.p1));
    CHECK(row.psi_p2 == psi_oracle(row.d, row.delta, row.p2));
  }
}

TEST_CASE("phi") {
  CHECK(phi(1, 3, 7, 1) == 7);
  CHECK(phi(2, 2, 6, 5) == BigRational(67, 3));
  CHECK(phi(2, 2, 6, 4) == 55);
  CHECK_THROWS_AS(phi(2, 2, 6, 6), Error);
  CHECK_THROWS_AS(phi(2, 2, 6, 1), Error);
  CHECK(phi_monotonicity_check(2, 2, 6).decreasing);
  PhiMonotonicity flat = phi_monotonicity_check(1, 2, 5);
  CHECK(flat.constant);
  CHECK(phi_monotonicity_check(3, 1, 8).decreasing);
  for (long d = 2; d <= 6; ++d)
    for (long delta = 1; delta <= 3; ++delta)
      for (long p = delta * d; p <= 3 * delta * d; ++p) CHECK(phi(d, delta, p, p - delta + 1) == psi(d, delta, p));
}

TEST_CASE("exponent rows and CSV") {
  std::vector<ExponentRow> rows{exponent_row(2, 1), exponent_row(1, 7)};
  CHECK(!rows[1].bounds.has_value());
  std::ostringstream out;
  write_exponent_csv(out, rows);
  std::string text = out.str();
  CHECK(text.rfind("d,delta,p1,p2,lambda,psi_lambda,zheng,mahler,lang_galochkin,lower_bound_float,upper_bound_float", 0) == 0);
  CHECK(text.find("\n2,1,2,3,2,11,11,15,16,") != std::string::npos);
  CHECK(text.find("\n1,7,7,7,7,7,13,") != std::string::npos);
}
