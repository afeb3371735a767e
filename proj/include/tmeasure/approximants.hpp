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


#ifndef TMEASURE_APPROXIMANTS_HPP
#define TMEASURE_APPROXIMANTS_HPP

#include <optional>
#include <vector>

#include "tmeasure/format.hpp"
#include "tmeasure/linalg.hpp"
#include "tmeasure/number_field.hpp"

namespace tmeasure {

/// Exact Taylor coefficients of x^j e^{k alpha x} over Q(alpha).
class SeriesEngine {
 public:
  SeriesEngine(FieldPtr field, long truncation_order);

  long truncation_order() const { return order_; }
  /// Coefficient of x^m in x^j e^{k alpha x}: (k alpha)^{m-j} / (m-j)!.
  FieldElement coefficient(long k, long j, long m) const;
  /// Taylor coefficients 0 .. order-1 of sum_k P_k(x) e^{k alpha x}.
  std::vector<FieldElement> combination(const std::vector<FieldPolynomial>& polys) const;

 private:
  FieldPtr field_;
  long order_;
  std::vector<FieldElement> alpha_powers_over_factorial_;
};

struct ApproximantColumn {
  long ell = 0;
  /// P_{k, ell} for k = 0 .. p, canonically normalized.
  std::vector<FieldPolynomial> polys;
  long vanishing_order = 0;
  /// Taylor coefficient of the remainder at x^{vanishing_order}; nonzero.
  FieldElement next_coefficient;
  /// Factor turning this column into the residue (Hermite) normalization.
  FieldElement hermite_scale;
};

struct ApproximantSystem {
  FieldPtr field;
  long n = 0;
  long p = 0;
  std::vector<ApproximantColumn> columns;
  /// det(P_{k, ell}(x)) = c x^{(p+1) n}.
  FieldPolynomial determinant;
  FieldElement det_constant;

  const AlgebraicNumber& alpha() const { return field->generator(); }
  const FieldPolynomial& poly(long k, long ell) const {
    return columns[static_cast<std::size_t>(ell)].polys[static_cast<std::size_t>(k)];
  }
};

/// Kernel of the vanishing conditions with the prescribed degree pattern.
ApproximantColumn build_column(const FieldPtr& field, long n, long p, long ell);

/// All p + 1 columns plus the verified determinant identity. Columns are
/// built concurrently.
ApproximantSystem build_system(const FieldPtr& field, long n, long p);

/// det(P_{k, ell}(1)) != 0.
bool det_at_one_check(const ApproximantSystem& system);

/// A_{k, ell} = q^{(p+1)n+p} n! P_{k, ell}(1) in the residue normalization;
/// row k, column ell.
Matrix<FieldElement> scaled_values(const ApproximantSystem& system, const BigInt& q);

struct BoundCheck {
  bool passed = false;
  /// log(bound) - log(value); positive when the check holds.
  double log_slack = 0.0;
  Interval value;
  Interval bound;
};

/// value <= bound, certified, with the log slack recorded. A nonpositive
/// value passes with infinite slack.
BoundCheck check_le(const Interval& value, const Interval& bound);

struct MetricBoundsReport {
  BigInt q;
  Interval t;
  /// max over (k, ell, sigma) against (2qt)^{(p+1)n+p} (n+1)!
  BoundCheck entries;
  /// the same entries against (2qt)^{(p+1)n+p} n!
  BoundCheck entries_nfact;
  /// per column, |R_ell| against e^{|alpha| p(p+1)/2} n^{p+1} q^{(p+1)n+p} / n!^p
  std::vector<BoundCheck> remainders;
  /// every A_{k, ell} an algebraic integer
  bool integrality = false;
  std::size_t non_integral_entries = 0;
};

MetricBoundsReport metric_bounds_report(const ApproximantSystem& system, const BigInt& q, Precision bits);

/// R_ell(1) = sum_k P_{k, ell}(1) e^{k alpha} in the residue normalization,
/// enclosed to roughly `bits` relative bits.
Ball remainder_at_one(const ApproximantSystem& system, long ell, Precision bits);

Json field_element_json(const FieldElement& x);
Json to_json(const ApproximantSystem& system);

}  // namespace tmeasure

#endif  // TMEASURE_APPROXIMANTS_HPP
