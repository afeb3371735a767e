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

#ifndef TMEASURE_ALGEBRAIC_HPP
#define TMEASURE_ALGEBRAIC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tmeasure/ball.hpp"
#include "tmeasure/polynomial.hpp"

namespace tmeasure {

/// Axis-parallel rectangle with rational corners.
struct RootBox {
  BigRational re_lo, re_hi, im_lo, im_hi;

  Ball to_ball(Precision prec) const;
  std::string to_string() const;
};

/// Deterministic root choice for the text shorthand ":+re" etc.
/// Ties are broken by the other coordinate, larger first.
enum class RootSelector { LargestReal, SmallestReal, LargestImag, SmallestImag };

/// Certified isolation of all complex roots of a squarefree integer polynomial.
struct RootIsolation {
  /// Pairwise disjoint enclosures, each containing exactly one root, sorted by
  /// (real midpoint, imaginary midpoint).
  std::vector<Ball> roots;
  /// True where the root is certified real; its ball then has imaginary part [0, 0].
  std::vector<bool> real;
};

/// Isolates every root with radius <= 2^-bits (1 + |midpoint|).
/// Throws PrecisionExhausted if isolation does not succeed below kMaxPrecision.
RootIsolation isolate_roots(const IntPolynomial& f, Precision bits);

/// An algebraic number: a primitive integer minimal polynomial with positive
/// leading coefficient, plus a rational box isolating the chosen embedding.
///
/// Construction verifies squarefreeness and (for degree >= 2) the absence of
/// rational roots. Irreducibility beyond that is the caller's obligation.
class AlgebraicNumber {
 public:
  AlgebraicNumber(IntPolynomial minpoly, RootBox box);

  static AlgebraicNumber rational(const BigRational& value);
  static AlgebraicNumber select(IntPolynomial minpoly, RootSelector selector);
  /// "<poly in x>", "<poly>:+re" (also -re, +im, -im) or
  /// "<poly>:box=re_lo,re_hi,im_lo,im_hi" with rational endpoints.
  static AlgebraicNumber parse(const std::string& text);

  const IntPolynomial& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  /// Max absolute coefficient of the minimal polynomial.
  const BigInt& height() const { return height_; }
  const RootBox& box() const { return box_; }
  bool is_zero() const { return minpoly_.degree() == 1 && tmeasure::is_zero(minpoly_.coeff(0)); }
  bool is_rational() const { return minpoly_.degree() == 1; }
  /// The value itself when rational.
  BigRational rational_value() const;

  /// Canonical text form "<poly>:box=..." (or "<poly>" for rationals).
  std::string descriptor() const;

  struct Embeddings {
    RootIsolation isolation;
    /// Index of the selected root inside `isolation.roots`.
    std::size_t identity = 0;
  };
  Embeddings embeddings(Precision bits) const;
  /// Enclosure of the selected root.
  Ball enclosure(Precision bits) const;

 private:
  IntPolynomial minpoly_;
  RootBox box_;
  BigInt height_;
};

std::string to_string(const IntPolynomial& p);
IntPolynomial parse_polynomial(const std::string& text);

std::vector<Ball> conjugates(const AlgebraicNumber& alpha, Precision bits);

/// Enclosure of max |sigma(alpha)| with hi - lo <= 2^-rel_bits hi.
Interval house(const AlgebraicNumber& alpha, long rel_bits = 64);

/// Leading coefficient of the minimal polynomial: a (not necessarily
/// minimal) denominator of alpha.
BigInt denominator_surrogate(const AlgebraicNumber& alpha);

AlgebraicNumber inverse(const AlgebraicNumber& alpha);

/// Same minimal polynomial and same selected root.
bool same_number(const AlgebraicNumber& a, const AlgebraicNumber& b);

struct HouseDenReport {
  bool denominator_ok = false;
  bool house_ok = false;
  BigInt denominator_of_inverse;
  Interval house_of_inverse;
  /// H(alpha) sqrt(1 + deg alpha).
  Interval bound;
};

HouseDenReport house_den_bound_check(const AlgebraicNumber& alpha);

}  // namespace tmeasure

#endif  // TMEASURE_ALGEBRAIC_HPP
