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

#include "tmeasure/ball.hpp"

#include "tmeasure/error.hpp"

namespace tmeasure {

Ball Ball::disc(const Float& re, const Float& im, const Float& rad) {
  Precision p = std::max({re.precision(), im.precision(), rad.precision()});
  Float rl(p), rh(p), il(p), ih(p);
  mpfr_sub(rl.get(), re.get(), rad.get(), MPFR_RNDD);
  mpfr_add(rh.get(), re.get(), rad.get(), MPFR_RNDU);
  mpfr_sub(il.get(), im.get(), rad.get(), MPFR_RNDD);
  mpfr_add(ih.get(), im.get(), rad.get(), MPFR_RNDU);
  return Ball(Interval(std::move(rl), std::move(rh)), Interval(std::move(il), std::move(ih)));
}

Float Ball::radius() const {
  Precision p = precision();
  Float a(p), b(p);
  mpfr_set(a.get(), re_.width().get(), MPFR_RNDU);
  mpfr_set(b.get(), im_.width().get(), MPFR_RNDU);
  // half-diagonal, rounded up
  mpfr_hypot(a.get(), a.get(), b.get(), MPFR_RNDU);
  mpfr_div_2ui(a.get(), a.get(), 1, MPFR_RNDU);
  return a;
}

Ball Ball::midpoint_ball() const {
  Float r = re_.midpoint();
  Float i = im_.midpoint();
  Float r2 = r, i2 = i;
  return Ball(Interval(std::move(r), std::move(r2)), Interval(std::move(i), std::move(i2)));
}

Ball Ball::with_precision(Precision prec) const { return Ball(re_.with_precision(prec), im_.with_precision(prec)); }

bool Ball::contains(const Ball& other) const {
  return mpfr_lessequal_p(re_.lo().get(), other.re_.lo().get()) &&
         mpfr_lessequal_p(other.re_.hi().get(), re_.hi().get()) &&
         mpfr_lessequal_p(im_.lo().get(), other.im_.lo().get()) &&
         mpfr_lessequal_p(other.im_.hi().get(), im_.hi().get());
}

bool Ball::overlaps(const Ball& other) const {
  auto sep = [](const Interval& a, const Interval& b) {
    return mpfr_less_p(a.hi().get(), b.lo().get()) || mpfr_less_p(b.hi().get(), a.lo().get());
  };
  return !sep(re_, other.re_) && !sep(im_, other.im_);
}

std::string Ball::to_string(int digits) const { return re_.to_string(digits) + " + i*" + im_.to_string(digits); }

Ball& Ball::operator+=(const Ball& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Ball& Ball::operator-=(const Ball& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Ball& Ball::operator*=(const Ball& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Interval re = re_ * o.re_ - im_ * o.im_;
  Interval im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Ball& Ball::operator/=(const Ball& o) {
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Interval norm = sqr(o.re_) + sqr(o.im_);
  if (norm.contains_zero()) throw Error(ErrorCode::DomainError, "complex division by a ball containing 0");
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

Ball operator+(Ball a, const Ball& b) { return a += b; }
Ball operator-(Ball a, const Ball& b) { return a -= b; }
Ball operator*(Ball a, const Ball& b) { return a *= b; }
Ball operator/(Ball a, const Ball& b) { return a /= b; }
Ball operator-(const Ball& a) { return Ball(-a.real(), -a.imag()); }
Ball operator*(const Ball& a, const Interval& s) { return Ball(a.real() * s, a.imag() * s); }

Interval abs(const Ball& z) {
  if (z.is_real()) return abs(z.real());
  return sqrt(sqr(z.real()) + sqr(z.imag()));
}

Ball exp(const Ball& z) {
  Interval m = exp(z.real());
  if (z.is_real()) return Ball(std::move(m));
  return Ball(m * cos(z.imag()), m * sin(z.imag()));
}

Ball pow(const Ball& z, unsigned long k) {
  Ball result(Interval(1L, z.precision()));
  Ball base = z;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

}  // namespace tmeasure
