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

#ifndef TMEASURE_INTERVAL_HPP
#define TMEASURE_INTERVAL_HPP

#include <mpfr.h>

#include <string>

#include "tmeasure/rational.hpp"

namespace tmeasure {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kMaxPrecision = Precision{1} << 20;

/// Owning wrapper around an mpfr_t. Values carry their own precision.
///
/// Constructing a Float also widens the calling thread's MPFR exponent range
/// to the maximum, since effective bounds reach magnitudes like 2^(-10^13).
class Float {
 public:
  explicit Float(Precision prec = kDefaultPrecision);
  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Precision precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  /// Scientific decimal with `digits` significant digits, rounded in `rnd`.
  std::string to_decimal(int digits, mpfr_rnd_t rnd) const;

 private:
  mpfr_t value_;
};

/// Closed real interval [lo, hi] with outward-rounded endpoints.
///
/// Every operation returns an interval containing the exact image of every
/// point of its operands. The result precision is the larger operand
/// precision.
class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision);
  Interval(long value, Precision prec);
  Interval(const BigInt& value, Precision prec);
  Interval(const BigRational& value, Precision prec);
  Interval(Float lo, Float hi);

  static Interval hull(const Interval& a, const Interval& b);
  /// The constant e.
  static Interval e(Precision prec);
  /// Natural log of n!, for n >= 0.
  static Interval log_factorial(const BigInt& n, Precision prec);

  const Float& lo() const { return lo_; }
  const Float& hi() const { return hi_; }
  Precision precision() const { return lo_.precision(); }

  Float midpoint() const;
  /// Upper bound on hi - lo.
  Float width() const;

  bool contains(const BigRational& q) const;
  bool contains_zero() const;
  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

  /// Same enclosure rounded outward to a different precision.
  Interval with_precision(Precision prec) const;

  std::string to_string(int digits = 20) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

 private:
  Float lo_;
  Float hi_;
};

Interval operator+(Interval a, const Interval& b);
Interval operator-(Interval a, const Interval& b);
Interval operator*(Interval a, const Interval& b);
Interval operator/(Interval a, const Interval& b);
Interval operator-(const Interval& a);

Interval abs(const Interval& x);
Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval pow(const Interval& x, unsigned long k);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

/// a < b holds for every pair of points.
bool certainly_less(const Interval& a, const Interval& b);
/// a <= b holds for every pair of points.
bool certainly_less_equal(const Interval& a, const Interval& b);

inline bool is_zero(const Interval& x) {
  return mpfr_zero_p(x.lo().get()) && mpfr_zero_p(x.hi().get());
}

}  // namespace tmeasure

namespace Eigen {

template <>
struct NumTraits<tmeasure::Interval> : GenericNumTraits<tmeasure::Interval> {
  using Real = tmeasure::Interval;
  using NonInteger = tmeasure::Interval;
  using Nested = tmeasure::Interval;
  using Literal = tmeasure::Interval;
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
         ReadCost = 10, AddCost = 20, MulCost = 40 };
};

}  // namespace Eigen

#endif  // TMEASURE_INTERVAL_HPP
