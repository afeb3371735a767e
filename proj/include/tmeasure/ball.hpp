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

#ifndef TMEASURE_BALL_HPP
#define TMEASURE_BALL_HPP

#include <string>

#include "tmeasure/interval.hpp"

namespace tmeasure {

/// Certified complex enclosure, stored as a rectangle of real intervals.
///
/// The midpoint/radius view required by callers is derived: `radius()` is an
/// upper bound on the distance from `midpoint` to any point of the rectangle.
class Ball {
 public:
  explicit Ball(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  explicit Ball(Interval re) : re_(std::move(re)), im_(re_.precision()) {}
  Ball(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}
  Ball(const BigRational& re, const BigRational& im, Precision prec) : re_(re, prec), im_(im, prec) {}

  /// Smallest rectangle containing the closed disc of radius `rad` around (re, im).
  static Ball disc(const Float& re, const Float& im, const Float& rad);

  const Interval& real() const { return re_; }
  const Interval& imag() const { return im_; }
  Precision precision() const { return std::max(re_.precision(), im_.precision()); }

  Float mid_real() const { return re_.midpoint(); }
  Float mid_imag() const { return im_.midpoint(); }
  Float radius() const;

  /// Point ball at the (rounded) midpoint; used by approximate iterations.
  Ball midpoint_ball() const;
  Ball with_precision(Precision prec) const;
  Ball conj() const { return Ball(re_, -im_); }

  bool is_real() const { return is_zero(im_); }
  bool contains(const Ball& other) const;
  bool overlaps(const Ball& other) const;
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

  std::string to_string(int digits = 20) const;

  Ball& operator+=(const Ball& o);
  Ball& operator-=(const Ball& o);
  Ball& operator*=(const Ball& o);
  Ball& operator/=(const Ball& o);

 private:
  Interval re_;
  Interval im_;
};

Ball operator+(Ball a, const Ball& b);
Ball operator-(Ball a, const Ball& b);
Ball operator*(Ball a, const Ball& b);
Ball operator/(Ball a, const Ball& b);
Ball operator-(const Ball& a);
Ball operator*(const Ball& a, const Interval& s);

/// Modulus enclosure.
Interval abs(const Ball& z);
Ball exp(const Ball& z);
Ball pow(const Ball& z, unsigned long k);

inline bool is_zero(const Ball& z) { return is_zero(z.real()) && is_zero(z.imag()); }

}  // namespace tmeasure

namespace Eigen {

template <>
struct NumTraits<tmeasure::Ball> : GenericNumTraits<tmeasure::Ball> {
  using Real = tmeasure::Interval;
  using NonInteger = tmeasure::Ball;
  using Nested = tmeasure::Ball;
  using Literal = tmeasure::Ball;
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 1, RequireInitialization = 1,
         ReadCost = 20, AddCost = 40, MulCost = 160 };
};

}  // namespace Eigen

#endif  // TMEASURE_BALL_HPP
