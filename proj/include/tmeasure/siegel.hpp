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


#ifndef TMEASURE_SIEGEL_HPP
#define TMEASURE_SIEGEL_HPP

#include <optional>
#include <vector>

#include "tmeasure/approximants.hpp"
#include "tmeasure/effective.hpp"

namespace tmeasure {

/// The (p+1) x (p+1) determinant built from an integer polynomial P and delta
/// columns of scaled approximant values.
struct SiegelCertificate {
  /// a_0 .. a_delta
  std::vector<BigInt> P;
  long n = 0;
  long p = 0;
  long delta = 0;
  BigInt q;
  std::vector<long> ell_subset;
  /// Number of subsets examined before a nonsingular one was found.
  long subsets_tried = 0;
  /// First p - delta + 1 rows: shifted coefficients of P; last delta rows:
  /// A_{., ell} for ell in ell_subset.
  Matrix<FieldElement> matrix;
  FieldElement D;
};

/// Requires p >= delta and P not identically zero.
SiegelCertificate build_D(const std::vector<BigInt>& P, const ApproximantSystem& system, const BigInt& q,
                          long delta);

struct ChainReport {
  /// L_0 = P(e^alpha)
  Ball L0;
  Interval abs_L0;
  /// (i) |D| <= a b^n H^{p-delta} n!^delta (|L_0| + H / n!^{p+1})
  BoundCheck upper_D;
  /// (ii) |sigma(D)| <= a b^n H^{p-delta+1} n!^delta, every embedding
  std::vector<BoundCheck> upper_conjugates;
  bool conjugates_ok = false;
  /// Every matrix entry is an algebraic integer.
  bool entries_integral = false;
  BigRational norm;
  /// prod |sigma(D)|
  Interval norm_product;
  /// (iii) |Norm(D)| >= 1; empty when the entries are not all integral.
  std::optional<bool> norm_ok;
  /// (iv) |L_0| >= M
  Interval M;
  BoundCheck lower_L0;
  /// Column-reduction identity, in ball arithmetic with a series evaluation
  /// of the remainders.
  bool identity_numeric = false;
  Ball D_reduced;
  /// The same identity with e^alpha replaced by an indeterminate.
  bool identity_exact = false;

  bool passed() const;
};

ChainReport verify_chain(const SiegelCertificate& cert, const ApproximantSystem& system,
                         const EffectiveConstants& consts, const BigRational& H, Precision bits = 128);

/// R_ell(1) scaled by q^{(p+1)n+p} n!, summed from the Taylor expansion of the
/// remainder with a rigorous tail bound (independent of the closed form).
Ball remainder_by_series(const ApproximantSystem& system, long ell, const BigInt& q, Precision prec);

Json to_json(const SiegelCertificate& cert);
Json to_json(const ChainReport& report);

}  // namespace tmeasure

#endif  // TMEASURE_SIEGEL_HPP
