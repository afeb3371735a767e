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


#ifndef TMEASURE_NUMBER_FIELD_HPP
#define TMEASURE_NUMBER_FIELD_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tmeasure/algebraic.hpp"
#include "tmeasure/polynomial.hpp"

namespace tmeasure {

/// Q(alpha) with the power basis 1, alpha, ..., alpha^{d-1}.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> create(AlgebraicNumber alpha);

  const AlgebraicNumber& generator() const { return alpha_; }
  int degree() const { return alpha_.degree(); }
  /// Monic minimal polynomial over Q.
  const RatPolynomial& modulus() const { return modulus_; }
  /// Coordinates of alpha^{d+i} for i = 0 .. d-2.
  const std::vector<std::vector<BigRational>>& reductions() const { return reductions_; }

  /// All complex embeddings at the requested precision (cached).
  AlgebraicNumber::Embeddings embeddings(Precision bits) const;

 private:
  explicit NumberField(AlgebraicNumber alpha);

  AlgebraicNumber alpha_;
  RatPolynomial modulus_;
  std::vector<std::vector<BigRational>> reductions_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Precision, AlgebraicNumber::Embeddings> cache_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q(alpha) in power-basis coordinates.
///
/// A default-constructed element, or one built from a rational, is "detached":
/// it has no field yet and adopts the field of whatever it is combined with.
/// This lets Eigen and Polynomial create zeros and ones without a context.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long value) : coords_{BigRational(value)} {}  // NOLINT(google-explicit-constructor)
  explicit FieldElement(const BigRational& value) : coords_{value} {}
  FieldElement(FieldPtr field, std::vector<BigRational> coords);

  static FieldElement generator(const FieldPtr& field);
  static FieldElement constant(const FieldPtr& field, const BigRational& value);

  const FieldPtr& field() const { return field_; }
  /// Exactly degree() coordinates when attached, one when detached.
  std::vector<BigRational> coordinates() const;
  bool is_zero() const;
  bool is_rational() const;
  BigRational rational_value() const;

  FieldElement inverse() const;

  /// Image under the embedding alpha -> root.
  Ball evaluate_at(const Ball& root) const;
  /// Image under the embedding selected by alpha's box.
  Ball embed(Precision bits) const;
  /// Images under every embedding, in the order of the field's isolation.
  std::vector<Ball> conjugates(Precision bits) const;

  /// Characteristic polynomial over Q, computed as Res_y(m(y), x - b(y)).
  RatPolynomial charpoly() const;
  BigRational norm() const;

  std::string to_string() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void adopt(const FieldElement& o);
  void trim();

  FieldPtr field_;
  // Trailing zeros trimmed; empty means zero.
  std::vector<BigRational> coords_;
};

FieldElement operator+(FieldElement a, const FieldElement& b);
FieldElement operator-(FieldElement a, const FieldElement& b);
FieldElement operator*(FieldElement a, const FieldElement& b);
FieldElement operator/(FieldElement a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

FieldElement pow(const FieldElement& x, unsigned long k);

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

using FieldPolynomial = Polynomial<FieldElement>;

/// True iff beta is an algebraic integer: its monic characteristic polynomial
/// has integer coefficients.
bool charpoly_integrality_check(const FieldElement& beta, const AlgebraicNumber& alpha);

}  // namespace tmeasure

namespace Eigen {

template <>
struct NumTraits<tmeasure::FieldElement> : GenericNumTraits<tmeasure::FieldElement> {
  using Real = tmeasure::FieldElement;
  using NonInteger = tmeasure::FieldElement;
  using Nested = tmeasure::FieldElement;
  using Literal = tmeasure::FieldElement;
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
         ReadCost = 10, AddCost = 300, MulCost = 1000 };
};

}  // namespace Eigen

#endif  // TMEASURE_NUMBER_FIELD_HPP
