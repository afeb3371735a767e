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


#ifndef TMEASURE_EFFECTIVE_HPP
#define TMEASURE_EFFECTIVE_HPP

#include <optional>
#include <vector>

#include "tmeasure/algebraic.hpp"
#include "tmeasure/format.hpp"

namespace tmeasure {

/// Explicit constants for a lower bound of |P(e^alpha)|, deg P <= delta.
/// Large quantities are carried as logarithms; `a` and `b` are also given
/// directly.
struct EffectiveConstants {
  explicit EffectiveConstants(AlgebraicNumber value) : alpha(std::move(value)) {}

  AlgebraicNumber alpha;
  long d = 0;
  long delta = 0;
  long p = 0;
  Precision precision = 0;
  /// Denominator surrogate of 1 / alpha.
  BigInt den_inverse;
  /// lcm(1, ..., p) * den_inverse
  BigInt q;
  Interval abs_alpha;
  /// max(1, house(1 / alpha))
  Interval t;
  /// (p+1)! e^{|alpha| p(p+1)/2} (2qt)^{p delta}
  Interval a;
  Interval log_a;
  /// (2qt)^{(p+1) delta}
  Interval b;
  Interval log_b;
  BigRational psi;

  /// p - d delta + 1
  long m() const { return p - d * delta + 1; }
};

/// Requires p >= d delta >= 1 and d = deg(alpha).
EffectiveConstants constants(const AlgebraicNumber& alpha, long d, long delta, long p,
                             Precision bits = 256);

struct BoundEvaluation {
  BigRational H;
  /// u = (2 a^d H^{(p-delta+1)d})^{1/m}, v = b^{d/m} e, m = p - d delta + 1
  Interval log_u;
  Interval log_v;
  Interval u;
  Interval v;
  /// Least n >= 1 with n^{mn} e^{-mn} b^{-dn} >= 2 a^d H^{(p-delta+1)d}.
  BigInt n0;
  /// The defining inequality was certified to hold at n0 and fail at n0 - 1.
  bool n0_certified = false;
  /// v^2 + 4 ln u / lnln(u+2) + 1
  Interval n0_cap;
  bool n0_cap_ok = false;
  /// Least n with n!^m b^{-dn} >= 2 a^d H^{(p-delta+1)d}; diagnostic only.
  BigInt n_factorial;
  /// Log of the full denominator, including H^psi.
  Interval log_denominator;
  /// exp(-log_denominator.hi), rounded down.
  Float lower_bound;
  /// psi + log(denominator without H^psi) / log H, for H > 1.
  std::optional<Interval> mahlerian_exponent;
  /// Coefficient w in H^{-psi - w / lnln(H+2)}, for H > 1.
  std::optional<Interval> varpi;
};

BoundEvaluation find_n0(const EffectiveConstants& c, const BigRational& H);

/// find_n0 plus the certified lower bound.
BoundEvaluation certified_lower_bound(const EffectiveConstants& c, const BigRational& H);

struct ChosenBound {
  EffectiveConstants constants;
  BoundEvaluation evaluation;
};

/// p = lambda(d, delta), then certified_lower_bound.
ChosenBound choose_p_and_bound(const AlgebraicNumber& alpha, long d, long delta, const BigRational& H);

/// The proof's intermediate constants c1 .. c6 and the two simplifications
/// that fold them into a and b.
struct InternalConstantsReport {
  Interval c1, c2, c3, c4, c5, c6;
  /// max(c1, c3, c5) < c6, certified.
  bool strict_ok = false;
  /// max(c1, c3, c5) <= c6; c1 = c6 exactly when p = 1.
  bool nonstrict_ok = false;
  bool c1_equals_c6 = false;
  /// n^{p+1} c4^n < c2^n for every n in [1, n_max].
  bool growth_ok = false;
  long n_max = 0;
};

InternalConstantsReport internal_constants_check(const EffectiveConstants& c, long n_max = 20);

Json to_json(const EffectiveConstants& c);
Json to_json(const BoundEvaluation& e);
/// Full certificate document for the bound command.
Json certificate_json(const EffectiveConstants& c, const BoundEvaluation& e);

}  // namespace tmeasure

#endif  // TMEASURE_EFFECTIVE_HPP
