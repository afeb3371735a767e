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


#ifndef TMEASURE_EXPONENTS_HPP
#define TMEASURE_EXPONENTS_HPP

#include <optional>
#include <ostream>
#include <vector>

#include "tmeasure/interval.hpp"
#include "tmeasure/rational.hpp"

namespace tmeasure {

/// psi(d, delta, p) = delta d^2 (p - delta + 1) / (p - delta d + 1) + d (p - delta + 1) - 1.
BigRational psi(long d, long delta, long p);

struct OptimalChoice {
  long p1 = 0;
  long p2 = 0;
  long lambda = 0;
  BigRational psi_lambda;
  /// Encloses delta d - 1 + delta sqrt(d^2 - d).
  Interval x0;
};

/// Minimizer of p -> psi(d, delta, p) over p >= delta d; ties go to p1.
OptimalChoice optimal_p(long d, long delta);

/// floor(delta sqrt(d^2 - d)), exactly.
BigInt floor_delta_sqrt(long d, long delta);

/// floor(delta sqrt(d^2 - d)) == delta d - ceil((delta + 1) / 2).
bool floor_identity_check(long d, long delta);

struct CompetingExponents {
  BigInt zheng;
  BigInt mahler;
  BigInt lang_galochkin;
  bool kappe_applicable = false;
};

CompetingExponents competing_exponents(long d, long delta);

struct PsiBoundsReport {
  BigRational psi_lambda;
  /// (2d^2 + 2d sqrt(d^2 - d) - d) delta - 1
  Interval lower;
  /// lower + d / (delta sqrt(d^2 - d) - 1)
  Interval upper;
  bool lower_ok = false;
  bool upper_ok = false;
  bool zheng_equal = false;
  /// psi <= zheng, with equality exactly when delta = 1.
  bool zheng_ok = false;
  /// Only evaluated for delta >= 2.
  std::optional<bool> quarter_ok;
};

/// Requires d >= 2.
PsiBoundsReport psi_bounds_check(long d, long delta);

/// psi(d, delta, lambda_delta) strictly increasing for delta = 1 .. delta_max.
bool monotonicity_check(long d, long delta_max);

struct ClosedFormReport {
  int which = 0;
  BigRational computed;
  /// The closed form as usually stated in the literature.
  BigRational reference_value;
  bool matches_reference = false;
  /// For which = 3 only: the same numerator over 3d - 2.
  std::optional<BigRational> corrected_value;
  bool matches_corrected = false;
};

/// which = 1: psi(d,1,2d-2) vs 4d^2-2d-1; which = 2: psi(d,2,4d-2) vs
/// (16d^3-16d^2+d+1)/(2d-1); which = 3: psi(d,3,6d-3) vs
/// (36d^3-42d^2+7d+2)/(3d-1) and /(3d-2).
ClosedFormReport closed_form_check(long d, int which);

struct ParityRow {
  long d = 0;
  long delta = 0;
  long p1 = 0;
  long p2 = 0;
  BigRational psi_p1;
  BigRational psi_p2;
  /// sign of psi(p1) - psi(p2)
  int sign = 0;
  /// odd delta >= 3 -> p1 strictly better, even delta -> p2 strictly better
  bool matches_pattern = false;
};

struct ParityReport {
  std::vector<ParityRow> rows;
  std::vector<ParityRow> counterexamples;
};

ParityReport parity_scan(long d_max, long delta_max);

/// phi(d, delta, p, k) = d k - 1 + d^2 k (p - k + 1) / (p + k d - d (p + 1) + 1).
BigRational phi(long d, long delta, long p, long k);

struct PhiMonotonicity {
  bool decreasing = false;
  /// d = 1: phi is constant in k.
  bool constant = false;
  long k_min = 0;
  long k_max = 0;
};

PhiMonotonicity phi_monotonicity_check(long d, long delta, long p);

struct ExponentRow {
  long d = 0;
  long delta = 0;
  OptimalChoice choice;
  CompetingExponents competing;
  /// Absent for d = 1.
  std::optional<PsiBoundsReport> bounds;
};

ExponentRow exponent_row(long d, long delta);

/// Column order: d, delta, p1, p2, lambda, psi_lambda, zheng, mahler,
/// lang_galochkin, lower_bound_float, upper_bound_float.
void write_exponent_csv(std::ostream& out, const std::vector<ExponentRow>& rows);

}  // namespace tmeasure

#endif  // TMEASURE_EXPONENTS_HPP
