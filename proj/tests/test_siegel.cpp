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

#include "tmeasure/error.hpp"
#include "tmeasure/exponents.hpp"
#include "tmeasure/siegel.hpp"

using namespace tmeasure;

namespace {

using Complex = std::complex<long double>;

Complex to_complex(const Ball& b) {
  return {static_cast<long double>(b.mid_real().to_double()), static_cast<long double>(b.mid_imag().to_double())};
}

// Gaussian elimination with partial pivoting on the embedded matrix.
Complex numeric_det(const Matrix<FieldElement>& m) {
  const Eigen::Index n = m.rows();
  std::vector<std::vector<Complex>> a(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = to_complex(m(i, j).embed(128));
  Complex det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    for (Eigen::Index r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (Eigen::Index r = c + 1; r < n; ++r) {
      Complex f = a[r][c] / a[c][c];
      for (Eigen::Index k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

struct Scenario {
  const char* alpha;
  long delta;
  std::vector<long> P;
  long n;
};

std::vector<BigInt> big(const std::vector<long>& v) {
  std::vector<BigInt> out;
  for (long x : v) out.push_back(BigInt(x));
  return out;
}

}  // namespace

TEST_CASE("hand-computed determinant") {
  AlgebraicNumber alpha = AlgebraicNumber::parse("x-1");
  ApproximantSystem s = build_system(NumberField::create(alpha), 1, 1);
  SiegelCertificate cert = build_D(big({-1, 1}), s, 1, 1);
  CHECK(cert.D.rational_value() == 1);
  CHECK(cert.ell_subset == std::vector<long>{0});
  CHECK(cert.subsets_tried == 1);
  CHECK(cert.matrix(0, 0).rational_value() == -1);
  CHECK(cert.matrix(0, 1).rational_value() == 1);
  CHECK(cert.matrix(1, 0).rational_value() == -2);
  CHECK(cert.matrix(1, 1).rational_value() == 1);
}

TEST_CASE("chain checks on sample polynomials") {
  std::vector<Scenario> cases = {{"x-1", 1, {-1, 1}, 3},        {"x-1", 2, {1, -3, 1}, 3},
                                 {"x^2-2:+re", 1, {1, -1}, 3}, {"x^2-2:+re", 2, {1, 0, -1}, 2},
                                 {"1/2", 1, {3, -5}, 4},        {"x^3-2:+re", 1, {2, 3}, 2}};
  for (const auto& sc : cases) {
    CAPTURE(sc.alpha);
    CAPTURE(sc.delta);
    AlgebraicNumber alpha = AlgebraicNumber::parse(sc.alpha);
    long d = alpha.degree();
    EffectiveConstants c = constants(alpha, d, sc.delta, optimal_p(d, sc.delta).lambda);
    ApproximantSystem s = build_system(NumberField::create(alpha), sc.n, c.p);
    long H = 0;
    for (long x : sc.P) H = std::max(H, std::abs(x));
    SiegelCertificate cert = build_D(big(sc.P), s, c.q, sc.delta);
    CHECK(!cert.D.is_zero());
    CHECK(static_cast<long>(cert.ell_subset.size()) == sc.delta);

    Complex expect = numeric_det(cert.matrix);
    Complex got = to_complex(cert.D.embed(128));
    CHECK(std::abs(expect - got) <= 1e-12L * std::abs(expect));

    ChainReport r = verify_chain(cert, s, c, H);
    CHECK(r.upper_D.passed);
    CHECK(r.conjugates_ok);
    CHECK(r.lower_L0.passed);
    CHECK(r.identity_exact);
    CHECK(r.identity_numeric);
    CHECK(r.norm_product.contains(abs(r.norm)));
    if (!r.entries_integral) CHECK(!r.norm_ok.has_value());
    else CHECK(r.norm_ok.value());
    CHECK(r.passed());
    Json j = to_json(r);
    CHECK(j["passed"] == true);
  }
}

TEST_CASE("series remainder agrees with the closed form") {
  for (const char* text : {"x-1", "x^2-2:+re", "x^2+1:+im"}) {
    CAPTURE(text);
    ApproximantSystem s = build_system(NumberField::create(AlgebraicNumber::parse(text)), 2, 2);
    BigInt q = 3;
    Interval mult(BigRational(BigInt(pow(q, 8) * factorial(2))), 256);
    for (long ell = 0; ell <= 2; ++ell) {
      Ball series = remainder_by_series(s, ell, q, 256);
      Ball closed = remainder_at_one(s, ell, 128) * mult;
      CHECK(series.overlaps(closed));
    }
  }
}

TEST_CASE("preconditions") {
  AlgebraicNumber alpha = AlgebraicNumber::parse("x-1");
  ApproximantSystem s = build_system(NumberField::create(alpha), 1, 2);
  CHECK_THROWS_AS(build_D(big({0, 0}), s, 2, 1), Error);
  CHECK_THROWS_AS(build_D(big({1, 1, 1, 1}), s, 2, 2), Error);
  CHECK_THROWS_AS(build_D(big({1, 1}), s, 2, 3), Error);
  try {
    build_D(big({0, 0}), s, 2, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInput);
  }
  EffectiveConstants c = constants(alpha, 1, 1, 2);
  SiegelCertificate cert = build_D(big({-3, 1}), s, c.q, 1);
  CHECK_THROWS_AS(verify_chain(cert, s, c, 2), Error);
}
