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


#ifndef TMEASURE_LAB_HPP
#define TMEASURE_LAB_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tmeasure/algebraic.hpp"
#include "tmeasure/effective.hpp"
#include "tmeasure/format.hpp"

namespace tmeasure {

struct LabOptions {
  Precision bits = 128;
  /// Cap on ((2H+1)^{delta+1} - 1) / 2, the number of sign-reduced vectors.
  double budget = 1e8;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// JSON file updated after each completed H; resumed from when present.
  std::string checkpoint;
  /// Throw AssertionFailed on a sentinel violation instead of only recording it.
  bool strict = true;
};

struct MinAbs {
  /// Encloses min |P(e^alpha)| over nonzero P with deg P <= delta, H(P) <= H.
  Interval value;
  /// a_0 .. a_delta, top nonzero coefficient positive.
  std::vector<BigInt> argmin;
  long long evaluated = 0;
  long long contenders = 0;
};

/// Number of sign-reduced coefficient vectors of height at most H.
double enumeration_size(long delta, long H);

MinAbs min_abs_value(const AlgebraicNumber& alpha, long delta, long H, const LabOptions& options = {});

struct LabRow {
  long H = 0;
  MinAbs min_abs;
  long p = 0;
  Float bound;
  Interval log_denominator;
  /// log(min_abs.lo) - log(bound); nonnegative when the sentinel holds.
  double log_ratio = 0;
  bool sentinel = false;
  double seconds = 0;
  bool resumed = false;
};

struct LabReport {
  std::string alpha;
  long d = 0;
  long delta = 0;
  std::vector<long> H_grid;
  std::vector<LabRow> rows;
  BigRational psi;
  /// OLS slope of -log(min_abs) against log H over the upper half of the grid.
  std::optional<double> empirical_exponent;
  std::optional<double> exponent_gap;
  bool sentinel_held = true;
  double seconds = 0;
};

LabReport bound_vs_reality(const AlgebraicNumber& alpha, long d, long delta, std::vector<long> H_grid,
                           const LabOptions& options = {});

/// Least-squares slope of y against x.
std::optional<double> ols_slope(const std::vector<double>& x, const std::vector<double>& y);

struct AsymptoticRow {
  long d = 0;
  BigRational psi;
  BigRational leading;
  BigRational difference;
  BigRational scaled;
};

struct AsymptoticReport {
  long delta = 0;
  std::vector<AsymptoticRow> rows;
  /// max d |psi - leading| over the grid
  BigRational bound;
};

/// delta = 2 compares with 8d^2 - 4d - 3/2, delta = 3 with 12d^2 - 6d - 5/3.
AsymptoticReport asymptotic_spot_check(long delta, const std::vector<long>& d_grid);

Json to_json(const MinAbs& m);
Json to_json(const LabReport& r);
void write_lab_csv(std::ostream& out, const LabReport& r);
Json to_json(const AsymptoticReport& r);
void write_asymptotic_csv(std::ostream& out, const AsymptoticReport& r);

}  // namespace tmeasure

#endif  // TMEASURE_LAB_HPP
