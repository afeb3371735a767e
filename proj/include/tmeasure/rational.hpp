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

#ifndef TMEASURE_RATIONAL_HPP
#define TMEASURE_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <string>

namespace tmeasure {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

/// Canonical text form of a rational: "num/den", or "num" when den = 1.
inline std::string to_fraction_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "n", "n/m" or a finite decimal like "-1.25" exactly.
BigRational parse_rational(const std::string& text);

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// lcm(1, 2, ..., n); equals 1 for n = 0.
inline BigInt lcm_upto(unsigned long n) {
  BigInt r = 1;
  for (unsigned long k = 2; k <= n; ++k) r = lcm(r, BigInt(k));
  return r;
}

inline BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline BigRational pow(const BigRational& base, unsigned long e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace tmeasure

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
         ReadCost = 6, AddCost = 150, MulCost = 100 };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum { IsInteger = 1, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
         ReadCost = 6, AddCost = 100, MulCost = 100 };
};

}  // namespace Eigen

#endif  // TMEASURE_RATIONAL_HPP
