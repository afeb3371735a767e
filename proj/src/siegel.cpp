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


#include "tmeasure/siegel.hpp"

#include <algorithm>
#include <cmath>

#include "tmeasure/error.hpp"

namespace tmeasure {

namespace {

// Next delta-subset of {0..p} in lexicographic order; false after the last.
bool next_subset(std::vector<long>& s, long p) {
  const long k = static_cast<long>(s.size());
  for (long i = k - 1; i >= 0; --i) {
    if (s[static_cast<std::size_t>(i)] < p - (k - 1 - i)) {
      ++s[static_cast<std::size_t>(i)];
      for (long j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

Matrix<FieldElement> minor_without(const Matrix<FieldElement>& m, Eigen::Index row) {
  const Eigen::Index n = m.rows();
  Matrix<FieldElement> out(n - 1, n - 1);
  for (Eigen::Index i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 1; j < n; ++j) out(r, j - 1) = m(i, j);
    ++r;
  }
  return out;
}

Ball sum_with_precision(const std::vector<BigInt>& P, const AlgebraicNumber& alpha, Precision bits) {
  for (Precision prec = bits + 32; prec <= kMaxPrecision; prec *= 2) {
    Ball a = alpha.enclosure(prec);
    Ball s(prec);
    for (std::size_t k = 0; k < P.size(); ++k)
      if (P[k] != 0) s += Ball(Interval(P[k], prec)) * exp(a * Ball(Interval(static_cast<long>(k), prec)));
    Interval mag = abs(s);
    if (!mag.is_positive()) continue;
    Float tol(prec);
    mpfr_div_2si(tol.get(), mag.lo().get(), static_cast<long>(bits), MPFR_RNDD);
    if (mpfr_lessequal_p(s.radius().get(), tol.get())) return s;
  }
  throw Error(ErrorCode::PrecisionExhausted, "P(e^alpha) not resolved");
}

Ball with_error(Ball z, const Float& err) {
  Float zero(z.precision());
  Ball e = Ball::disc(zero, zero, err);
  return z + e;
}

}  // namespace

SiegelCertificate build_D(const std::vector<BigInt>& P, const ApproximantSystem& system, const BigInt& q,
                          long delta) {
  const long p = system.p;
  if (delta < 1 || p < delta) throw Error(ErrorCode::ConstraintViolated, "build_D needs 1 <= delta <= p");
  if (static_cast<long>(P.size()) > delta + 1) throw Error(ErrorCode::ConstraintViolated, "deg P exceeds delta");
  if (std::all_of(P.begin(), P.end(), [](const BigInt& a) { return a == 0; }))
    throw Error(ErrorCode::ZeroInput, "P is the zero polynomial");

  SiegelCertificate cert;
  cert.P = P;
  cert.P.resize(static_cast<std::size_t>(delta) + 1);
  cert.n = system.n;
  cert.p = p;
  cert.delta = delta;
  cert.q = q;
  Matrix<FieldElement> a = scaled_values(system, q);

  Matrix<FieldElement> m(p + 1, p + 1);
  for (long j = 0; j <= p - delta; ++j)
    for (long k = 0; k <= p; ++k) {
      long i = k - j;
      m(j, k) = FieldElement::constant(system.field, i >= 0 && i <= delta ? BigRational(cert.P[static_cast<std::size_t>(i)])
                                                                            : BigRational(0));
    }
  std::vector<long> subset(static_cast<std::size_t>(delta));
  for (long i = 0; i < delta; ++i) subset[static_cast<std::size_t>(i)] = i;
  do {
    ++cert.subsets_tried;
    for (long r = 0; r < delta; ++r)
      for (long k = 0; k <= p; ++k) m(p - delta + 1 + r, k) = a(k, subset[static_cast<std::size_t>(r)]);
    FieldElement D = determinant(Matrix<FieldElement>(m));
    if (!D.is_zero()) {
      cert.ell_subset = subset;
      cert.matrix = m;
      cert.D = D;
      return cert;
    }
  } while (next_subset(subset, p));
  throw Error(ErrorCode::AllSubsetsSingular, "every delta-subset of columns gives D = 0");
}

Ball remainder_by_series(const ApproximantSystem& system, long ell, const BigInt& q, Precision prec) {
  const long n = system.n, p = system.p;
  const auto& column = system.columns[static_cast<std::size_t>(ell)];
  FieldElement factor = FieldElement::constant(
      system.field, BigRational(pow(q, static_cast<unsigned long>((p + 1) * n + p)) *
                                factorial(static_cast<unsigned long>(n)))) * column.hermite_scale;
  Ball alpha = system.alpha().enclosure(prec);
  Interval abs_alpha = abs(alpha);

  // c[k][j] and |c[k][j]|
  std::vector<std::vector<Ball>> c(static_cast<std::size_t>(p) + 1);
  std::vector<std::vector<Interval>> cabs(static_cast<std::size_t>(p) + 1);
  long max_j = 0;
  for (long k = 0; k <= p; ++k) {
    for (const auto& coeff : column.polys[static_cast<std::size_t>(k)].coefficients()) {
      Ball b = (factor * coeff).embed(prec);
      cabs[static_cast<std::size_t>(k)].push_back(abs(b));
      c[static_cast<std::size_t>(k)].push_back(std::move(b));
    }
    max_j = std::max<long>(max_j, static_cast<long>(c[static_cast<std::size_t>(k)].size()) - 1);
  }
  const long start = column.vanishing_order;
  // w[k][e] = (k alpha)^e / e!
  auto extend = [&](std::vector<std::vector<Ball>>& w, long upto) {
    for (long k = 0; k <= p; ++k) {
      auto& wk = w[static_cast<std::size_t>(k)];
      Ball ka = alpha * Ball(Interval(k, prec));
      if (wk.empty()) wk.push_back(Ball(Interval(1L, prec)));
      while (static_cast<long>(wk.size()) <= upto) {
        long e = static_cast<long>(wk.size());
        wk.push_back(wk.back() * ka * Ball(Interval(1L, prec) / Interval(e, prec)));
      }
    }
  };
  std::vector<std::vector<Ball>> w(static_cast<std::size_t>(p) + 1);
  Ball sum(prec);
  long m = start;
  long stop = start + 32;
  for (;;) {
    extend(w, stop);
    for (; m <= stop; ++m) {
      for (long k = 0; k <= p; ++k) {
        const auto& ck = c[static_cast<std::size_t>(k)];
        for (long j = 0; j < static_cast<long>(ck.size()) && j <= m; ++j) {
          if (k == 0 && m != j) continue;
          sum += ck[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(m - j)];
        }
      }
    }
    // tail: sum_{k,j} |c_kj| sum_{e >= E} x^e / e!, x = k |alpha|, E = stop + 1 - j
    Interval tail(0L, prec);
    bool finite = true;
    for (long k = 1; k <= p; ++k) {
      Interval x = abs_alpha * Interval(k, prec);
      const auto& ck = cabs[static_cast<std::size_t>(k)];
      for (long j = 0; j < static_cast<long>(ck.size()); ++j) {
        long e0 = stop + 1 - j;
        Interval ratio = x / Interval(e0 + 1, prec);
        if (!certainly_less(ratio, Interval(1L, prec))) {
          finite = false;
          break;
        }
        Interval first = pow(x, static_cast<unsigned long>(e0)) / exp(Interval::log_factorial(BigInt(e0), prec));
        tail += ck[static_cast<std::size_t>(j)] * first / (Interval(1L, prec) - ratio);
      }
    }
    if (finite) {
      Interval mag = abs(sum);
      Float limit(prec);
      mpfr_div_2si(limit.get(), mag.lo().get(), static_cast<long>(prec) / 2, MPFR_RNDD);
      if (mpfr_less_p(limit.get(), sum.radius().get())) mpfr_set(limit.get(), sum.radius().get(), MPFR_RNDD);
      if (mpfr_lessequal_p(tail.hi().get(), limit.get()) || stop > start + 4000) return with_error(sum, tail.hi());
    }
    stop += 32;
  }
}

ChainReport verify_chain(const SiegelCertificate& cert, const ApproximantSystem& system,
                         const EffectiveConstants& consts, const BigRational& H, Precision bits) {
  for (const auto& a : cert.P)
    if (BigRational(abs(a)) > H) throw Error(ErrorCode::ConstraintViolated, "H is below the height of P");
  const long n = cert.n, p = cert.p, delta = cert.delta, d = system.field->degree();
  const Precision prec = std::max<Precision>(bits, kDefaultPrecision);
  auto ul = [](long x) { return static_cast<unsigned long>(x); };
  ChainReport r;
  r.L0 = sum_with_precision(cert.P, system.alpha(), prec);
  r.abs_L0 = abs(r.L0).with_precision(prec);

  Interval h(H, prec);
  Interval nf(factorial(ul(n)), prec);
  Interval a_bn = consts.a.with_precision(prec) * pow(consts.b.with_precision(prec), ul(n));
  Interval small = h / pow(nf, ul(p + 1));

  Ball d_main = cert.D.embed(prec);
  r.upper_D = check_le(abs(d_main).with_precision(prec),
                       a_bn * pow(h, ul(p - delta)) * pow(nf, ul(delta)) * (r.abs_L0 + small));
  Interval conj_bound = a_bn * pow(h, ul(p - delta + 1)) * pow(nf, ul(delta));
  r.conjugates_ok = true;
  r.norm_product = Interval(1L, prec);
  for (const auto& s : cert.D.conjugates(prec)) {
    Interval mod = abs(s).with_precision(prec);
    r.norm_product *= mod;
    r.upper_conjugates.push_back(check_le(mod, conj_bound));
    r.conjugates_ok = r.conjugates_ok && r.upper_conjugates.back().passed;
  }

  r.entries_integral = true;
  for (Eigen::Index i = 0; i < cert.matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < cert.matrix.cols(); ++j)
      if (!charpoly_integrality_check(cert.matrix(i, j), system.alpha())) r.entries_integral = false;
  r.norm = cert.D.norm();
  if (r.entries_integral) r.norm_ok = abs(r.norm) >= 1;

  Interval denom = pow(consts.a.with_precision(prec), ul(d)) * pow(consts.b.with_precision(prec), ul(d * n)) *
                   pow(h, ul((p - delta + 1) * (d - 1) + p - delta)) * pow(nf, ul(delta * d));
  r.M = Interval(1L, prec) / denom - small;
  r.lower_L0 = check_le(r.M, r.abs_L0);

  // Column reduction: first column replaced by (L_0 .. L_{p-delta}, R_ell ...).
  const Eigen::Index size = p + 1;
  std::vector<FieldElement> minors;
  for (Eigen::Index i = 0; i < size; ++i) minors.push_back(determinant(minor_without(cert.matrix, i)));

  FieldPolynomial reduced;
  Matrix<FieldElement> a = scaled_values(system, cert.q);
  for (Eigen::Index i = 0; i < size; ++i) {
    std::vector<FieldElement> col;
    if (i <= p - delta) {
      col.assign(static_cast<std::size_t>(i) + cert.P.size(), FieldElement::constant(system.field, 0));
      for (std::size_t k = 0; k < cert.P.size(); ++k)
        col[static_cast<std::size_t>(i) + k] = FieldElement::constant(system.field, BigRational(cert.P[k]));
    } else {
      long ell = cert.ell_subset[static_cast<std::size_t>(i - (p - delta + 1))];
      for (long k = 0; k <= p; ++k) col.push_back(a(k, ell));
    }
    FieldPolynomial term = FieldPolynomial(std::move(col)) * minors[static_cast<std::size_t>(i)];
    reduced = (i % 2 == 0) ? reduced + term : reduced - term;
  }
  r.identity_exact = reduced.degree() <= 0 && reduced.coeff(0) == cert.D;

  for (Precision wp = prec; wp <= 16 * prec; wp *= 2) {
    Ball alpha = system.alpha().enclosure(wp);
    Ball l0 = sum_with_precision(cert.P, system.alpha(), wp);
    Ball acc(wp);
    for (Eigen::Index i = 0; i < size; ++i) {
      Ball entry = i <= p - delta
                       ? l0 * exp(alpha * Ball(Interval(static_cast<long>(i), wp)))
                       : remainder_by_series(system, cert.ell_subset[static_cast<std::size_t>(i - (p - delta + 1))],
                                             cert.q, wp);
      Ball term = entry * minors[static_cast<std::size_t>(i)].embed(wp);
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    Ball exact = cert.D.embed(wp);
    Float tol(wp);
    Interval scale = abs(exact) + Interval(1L, wp);
    mpfr_div_2si(tol.get(), scale.lo().get(), 20, MPFR_RNDD);
    r.D_reduced = acc;
    if (mpfr_lessequal_p(acc.radius().get(), tol.get())) {
      r.identity_numeric = acc.overlaps(exact);
      break;
    }
  }
  return r;
}

bool ChainReport::passed() const {
  return upper_D.passed && conjugates_ok && norm_ok.value_or(true) && lower_L0.passed && identity_numeric &&
         identity_exact;
}

Json to_json(const SiegelCertificate& cert) {
  Json j;
  j["schema"] = "tmeasure.certificate/1";
  Json P = Json::array();
  for (const auto& a : cert.P) P.push_back(a.get_str());
  j["P"] = P;
  j["n"] = cert.n;
  j["p"] = cert.p;
  j["delta"] = cert.delta;
  j["q"] = cert.q.get_str();
  j["ell_subset"] = cert.ell_subset;
  j["subsets_tried"] = cert.subsets_tried;
  j["D"] = field_element_json(cert.D);
  return j;
}

Json to_json(const ChainReport& r) {
  auto check = [](const BoundCheck& c) {
    Json j;
    j["passed"] = c.passed;
    j["log_slack"] = std::isfinite(c.log_slack) ? Json(c.log_slack) : Json("inf");
    j["value"] = interval_json(c.value);
    j["bound"] = interval_json(c.bound);
    return j;
  };
  Json j;
  j["L0"] = r.L0.to_string();
  j["abs_L0"] = interval_json(r.abs_L0);
  j["upper_D"] = check(r.upper_D);
  Json conj = Json::array();
  for (const auto& c : r.upper_conjugates) conj.push_back(check(c));
  j["upper_conjugates"] = conj;
  j["entries_integral"] = r.entries_integral;
  j["norm"] = rational_json(r.norm);
  j["norm_product"] = interval_json(r.norm_product);
  j["norm_check"] = r.norm_ok ? Json(*r.norm_ok ? "passed" : "failed") : Json("not applicable");
  j["M"] = interval_json(r.M);
  j["lower_L0"] = check(r.lower_L0);
  j["identity_numeric"] = r.identity_numeric;
  j["D_reduced"] = r.D_reduced.to_string();
  j["identity_exact"] = r.identity_exact;
  j["passed"] = r.passed();
  return j;
}

}  // namespace tmeasure
