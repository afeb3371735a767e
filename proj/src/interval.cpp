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

#include "tmeasure/interval.hpp"

#include <algorithm>
#include <string>

#include "tmeasure/error.hpp"

namespace tmeasure {

namespace {

void ensure_exponent_range() {
  thread_local const bool widened = [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    return true;
  }();
  (void)widened;
}

Precision joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Float::Float(Precision prec) {
  ensure_exponent_range();
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Float::Float(const Float& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Float& Float::operator=(const Float& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Float::~Float() { mpfr_clear(value_); }

std::string Float::to_decimal(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(digits), value_, rnd);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  // mpfr returns 0.d1d2... x 10^exponent
  out += "e" + std::to_string(static_cast<long long>(exponent) - 1);
  return out;
}

Interval::Interval(Precision prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long value, Precision prec) : lo_(prec), hi_(prec) {
  mpfr_set_si(lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

Interval::Interval(const BigInt& value, Precision prec) : lo_(prec), hi_(prec) {
  mpfr_set_z(lo_.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_.get(), value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const BigRational& value, Precision prec) : lo_(prec), hi_(prec) {
  mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(Float lo, Float hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.precision() != hi_.precision()) {
    Precision p = std::max(lo_.precision(), hi_.precision());
    Float l(p), h(p);
    mpfr_set(l.get(), lo_.get(), MPFR_RNDD);
    mpfr_set(h.get(), hi_.get(), MPFR_RNDU);
    lo_ = std::move(l);
    hi_ = std::move(h);
  }
  if (mpfr_cmp(lo_.get(), hi_.get()) > 0) throw Error(ErrorCode::DomainError, "interval with lo > hi");
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Precision p = joint(a, b);
  Float lo(p), hi(p);
  mpfr_min(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::e(Precision prec) { return exp(Interval(1L, prec)); }

Interval Interval::log_factorial(const BigInt& n, Precision prec) {
  if (sgn(n) < 0) throw Error(ErrorCode::DomainError, "log_factorial of a negative integer");
  if (n <= 1) return Interval(0L, prec);
  BigInt np1 = n + 1;
  Float xl(prec), xh(prec), lo(prec), hi(prec);
  mpfr_set_z(xl.get(), np1.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(xh.get(), np1.get_mpz_t(), MPFR_RNDU);
  // lngamma is increasing on [2, inf)
  mpfr_lngamma(lo.get(), xl.get(), MPFR_RNDD);
  mpfr_lngamma(hi.get(), xh.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Float Interval::midpoint() const {
  Float m(precision());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Float Interval::width() const {
  Float w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

bool Interval::contains(const BigRational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

Interval Interval::with_precision(Precision prec) const {
  Float lo(prec), hi(prec);
  mpfr_set(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_decimal(digits, MPFR_RNDD) + ", " + hi_.to_decimal(digits, MPFR_RNDU) + "]";
}

Interval& Interval::operator+=(const Interval& o) {
  Precision p = joint(*this, o);
  Float lo(p), hi(p);
  mpfr_add(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Precision p = joint(*this, o);
  Float lo(p), hi(p);
  mpfr_sub(lo.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  Precision p = joint(*this, o);
  Float lo(p), hi(p), t(p);
  mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
  mpfr_srcptr ys[2] = {o.lo_.get(), o.hi_.get()};
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (mpfr_nan_p(t.get())) mpfr_set_zero(t.get(), 1);  // 0 * inf
      mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (mpfr_nan_p(t.get())) mpfr_set_zero(t.get(), 1);
      mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw Error(ErrorCode::DomainError, "interval division by an interval containing 0");
  Precision p = joint(*this, o);
  Float lo(p), hi(p), t(p);
  mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
  mpfr_srcptr ys[2] = {o.lo_.get(), o.hi_.get()};
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval operator+(Interval a, const Interval& b) { return a += b; }
Interval operator-(Interval a, const Interval& b) { return a -= b; }
Interval operator*(Interval a, const Interval& b) { return a *= b; }
Interval operator/(Interval a, const Interval& b) { return a /= b; }

Interval operator-(const Interval& a) {
  Float lo(a.precision()), hi(a.precision());
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo().get()) >= 0) return x;
  if (mpfr_sgn(x.hi().get()) <= 0) return -x;
  Float lo(x.precision()), hi(x.precision());
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sqr(const Interval& x) { return pow(x, 2); }

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi().get()) < 0) throw Error(ErrorCode::DomainError, "sqrt of a negative interval");
  Float lo(x.precision()), hi(x.precision());
  if (mpfr_sgn(x.lo().get()) > 0) mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval exp(const Interval& x) {
  Float lo(x.precision()), hi(x.precision());
  mpfr_exp(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo().get()) <= 0) throw Error(ErrorCode::DomainError, "log of an interval not bounded away from 0");
  Float lo(x.precision()), hi(x.precision());
  mpfr_log(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

namespace {

// f is 1-Lipschitz, so f([c, c + r]) lies within f(c) +- r.
template <typename Fn>
Interval lipschitz_one(const Interval& x, Fn fn) {
  Precision p = x.precision();
  Float r = x.width();
  Float lo(p), hi(p);
  fn(lo.get(), x.lo().get(), MPFR_RNDD);
  fn(hi.get(), x.lo().get(), MPFR_RNDU);
  mpfr_sub(lo.get(), lo.get(), r.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi.get(), r.get(), MPFR_RNDU);
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval sin(const Interval& x) { return lipschitz_one(x, mpfr_sin); }
Interval cos(const Interval& x) { return lipschitz_one(x, mpfr_cos); }

Interval pow(const Interval& x, unsigned long k) {
  if (k == 0) return Interval(1L, x.precision());
  Precision p = x.precision();
  Float lo(p), hi(p);
  if (mpfr_sgn(x.lo().get()) >= 0) {
    mpfr_pow_ui(lo.get(), x.lo().get(), k, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), x.hi().get(), k, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi().get()) <= 0) {
    Interval m = pow(-x, k);
    return (k % 2 == 0) ? m : -m;
  } else if (k % 2 == 1) {
    mpfr_pow_ui(lo.get(), x.lo().get(), k, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), x.hi().get(), k, MPFR_RNDU);
  } else {
    Interval m = abs(x);
    mpfr_pow_ui(hi.get(), m.hi().get(), k, MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval max(const Interval& a, const Interval& b) {
  Precision p = joint(a, b);
  Float lo(p), hi(p);
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval min(const Interval& a, const Interval& b) {
  Precision p = joint(a, b);
  Float lo(p), hi(p);
  mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi().get(), b.lo().get()) != 0; }

bool certainly_less_equal(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.hi().get(), b.lo().get()) != 0;
}

}  // namespace tmeasure
