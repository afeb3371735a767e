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

#ifndef TMEASURE_POLYNOMIAL_HPP
#define TMEASURE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "tmeasure/error.hpp"
#include "tmeasure/rational.hpp"

namespace tmeasure {

namespace detail {
template <typename S>
bool scalar_is_zero(const S& s) {
  return is_zero(s);
}
}  // namespace detail

/// Dense univariate polynomial, coefficients stored from degree 0 upward.
///
/// `Scalar` must provide `+ - *`, a default constructor yielding zero and a
/// free `is_zero(const Scalar&)`. Division-based algorithms additionally need
/// exact `/` (a field, or exact division in a domain).
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

  static Polynomial monomial(Scalar c, std::size_t power) {
    std::vector<Scalar> v(power + 1, zero_like(c));
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i (zero beyond the degree).
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar{}; }
  const Scalar& leading() const { return coeffs_.back(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  template <typename X, typename Convert>
  X evaluate(const X& x, Convert convert) const {
    if (coeffs_.empty()) return convert(Scalar{});
    X acc = convert(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + convert(coeffs_[i]);
    return acc;
  }

  Scalar evaluate(const Scalar& x) const {
    return evaluate(x, [](const Scalar& c) { return c; });
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Scalar(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Scalar& s) {
    std::vector<Scalar> r(a.coeffs_);
    for (auto& c : r) c = c * s;
    return Polynomial(std::move(r));
  }

  /// Euclidean division; requires exact scalar division by the leading coefficient.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw Error(ErrorCode::DomainError, "polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial(), num};
    std::vector<Scalar> rem = num.coeffs_;
    std::vector<Scalar> quot(num.coeffs_.size() - den.coeffs_.size() + 1);
    const Scalar& lead = den.leading();
    for (std::size_t i = quot.size(); i-- > 0;) {
      const Scalar& top = rem[i + den.coeffs_.size() - 1];
      if (tmeasure_is_zero(top)) continue;
      Scalar f = top / lead;
      for (std::size_t j = 0; j < den.coeffs_.size(); ++j) rem[i + j] = rem[i + j] - f * den.coeffs_[j];
      quot[i] = std::move(f);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Exact quotient; throws if the division leaves a remainder.
  friend Polynomial operator/(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw Error(ErrorCode::DomainError, "inexact polynomial division");
    return q;
  }

  friend Polynomial operator%(const Polynomial& num, const Polynomial& den) { return divmod(num, den).second; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!tmeasure_is_zero(a.coeffs_[i] - b.coeffs_[i])) return false;
    return true;
  }

 private:
  static bool tmeasure_is_zero(const Scalar& s) { return detail::scalar_is_zero(s); }
  static Scalar zero_like(const Scalar&) { return Scalar{}; }

  void trim() {
    while (!coeffs_.empty() && tmeasure_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

template <typename Scalar>
bool is_zero(const Polynomial<Scalar>& p) {
  return p.is_zero();
}

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

/// Monic gcd over a field.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Scalar lead = a.leading();
  std::vector<Scalar> c = a.coefficients();
  for (auto& x : c) x = x / lead;
  return Polynomial<Scalar>(std::move(c));
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

/// Gcd of all coefficients (nonnegative; 0 for the zero polynomial).
inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = gcd(g, c);
  return g;
}

}  // namespace tmeasure

namespace Eigen {

template <typename S>
struct NumTraits<tmeasure::Polynomial<S>> : GenericNumTraits<tmeasure::Polynomial<S>> {
  using Real = tmeasure::Polynomial<S>;
  using NonInteger = tmeasure::Polynomial<S>;
  using Nested = tmeasure::Polynomial<S>;
  using Literal = tmeasure::Polynomial<S>;
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
         ReadCost = 10, AddCost = 200, MulCost = 400 };
};

}  // namespace Eigen

#endif  // TMEASURE_POLYNOMIAL_HPP
