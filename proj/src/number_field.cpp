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


#include "tmeasure/number_field.hpp"

#include "tmeasure/error.hpp"
#include "tmeasure/linalg.hpp"

namespace tmeasure {

std::shared_ptr<const NumberField> NumberField::create(AlgebraicNumber alpha) {
  return std::shared_ptr<const NumberField>(new NumberField(std::move(alpha)));
}

NumberField::NumberField(AlgebraicNumber alpha) : alpha_(std::move(alpha)) {
  RatPolynomial m = to_rational(alpha_.minpoly());
  BigRational lead = m.leading();
  std::vector<BigRational> c = m.coefficients();
  for (auto& x : c) x /= lead;
  modulus_ = RatPolynomial(std::move(c));

  const auto d = static_cast<std::size_t>(degree());
  std::vector<BigRational> cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = -modulus_.coeff(i);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    reductions_.push_back(cur);
    // multiply by alpha and reduce the overflowing top coordinate
    BigRational top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (!tmeasure::is_zero(top))
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * modulus_.coeff(i);
  }
}

AlgebraicNumber::Embeddings NumberField::embeddings(Precision bits) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(bits);
    if (it != cache_.end()) return it->second;
  }
  AlgebraicNumber::Embeddings e = alpha_.embeddings(bits);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(bits, e);
  return e;
}

FieldElement::FieldElement(FieldPtr field, std::vector<BigRational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (field_ && coords_.size() > static_cast<std::size_t>(field_->degree()))
    throw Error(ErrorCode::DomainError, "too many coordinates for the field");
  trim();
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (field->degree() == 1) return constant(field, field->generator().rational_value());
  return FieldElement(field, {BigRational(0), BigRational(1)});
}

FieldElement FieldElement::constant(const FieldPtr& field, const BigRational& value) {
  return FieldElement(field, {value});
}

void FieldElement::trim() {
  while (!coords_.empty() && tmeasure::is_zero(coords_.back())) coords_.pop_back();
}

void FieldElement::adopt(const FieldElement& o) {
  if (!o.field_ || field_ == o.field_) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (!same_number(field_->generator(), o.field_->generator()))
    throw Error(ErrorCode::DomainError, "mixing elements of different number fields");
}

std::vector<BigRational> FieldElement::coordinates() const {
  std::vector<BigRational> c = coords_;
  c.resize(field_ ? static_cast<std::size_t>(field_->degree()) : 1);
  return c;
}

bool FieldElement::is_zero() const { return coords_.empty(); }
bool FieldElement::is_rational() const { return coords_.size() <= 1; }

BigRational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::DomainError, "field element is not rational");
  return coords_.empty() ? BigRational(0) : coords_[0];
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  adopt(o);
  if (o.coords_.size() > coords_.size()) coords_.resize(o.coords_.size());
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] += o.coords_[i];
  trim();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  adopt(o);
  if (o.coords_.size() > coords_.size()) coords_.resize(o.coords_.size());
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] -= o.coords_[i];
  trim();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  adopt(o);
  if (coords_.empty() || o.coords_.empty()) {
    coords_.clear();
    return *this;
  }
  std::vector<BigRational> prod(coords_.size() + o.coords_.size() - 1);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (tmeasure::is_zero(coords_[i])) continue;
    for (std::size_t j = 0; j < o.coords_.size(); ++j) prod[i + j] += coords_[i] * o.coords_[j];
  }
  if (field_) {
    const auto d = static_cast<std::size_t>(field_->degree());
    if (prod.size() > d) {
      const auto& red = field_->reductions();
      for (std::size_t k = d; k < prod.size(); ++k) {
        if (tmeasure::is_zero(prod[k])) continue;
        for (std::size_t i = 0; i < d; ++i) prod[i] += prod[k] * red[k - d][i];
      }
      prod.resize(d);
    }
  }
  coords_ = std::move(prod);
  trim();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DomainError, "division by zero in number field");
  if (is_rational()) {
    FieldElement r(BigRational(1 / coords_[0]));
    r.field_ = field_;
    return r;
  }
  RatPolynomial r0 = field_->modulus(), r1(coords_);
  RatPolynomial s0, s1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::InvalidAlgebraic, "minimal polynomial is reducible");
  BigRational scale = 1 / r0.coeff(0);
  std::vector<BigRational> c = s0.coefficients();
  for (auto& x : c) x *= scale;
  return FieldElement(field_, std::move(c));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  adopt(o);
  FieldElement inv = o.inverse();
  inv.field_ = field_;
  return *this *= inv;
}

bool operator==(const FieldElement& a, const FieldElement& b) { return (a - b).is_zero(); }

FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
FieldElement operator-(const FieldElement& a) { return FieldElement() - a; }

FieldElement pow(const FieldElement& x, unsigned long k) {
  FieldElement result(1L), base = x;
  result += base * FieldElement();  // attach to the field of x
  while (k > 0) {
    if (k & 1UL) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Ball FieldElement::evaluate_at(const Ball& root) const {
  Precision prec = root.precision();
  RatPolynomial poly(coords_);
  return poly.evaluate(root, [prec](const BigRational& c) { return Ball(Interval(c, prec)); });
}

Ball FieldElement::embed(Precision bits) const {
  if (!field_ || is_rational()) return Ball(Interval(rational_value(), bits));
  auto e = field_->embeddings(bits);
  return evaluate_at(e.isolation.roots[e.identity]);
}

std::vector<Ball> FieldElement::conjugates(Precision bits) const {
  if (!field_) return {Ball(Interval(rational_value(), bits))};
  auto e = field_->embeddings(bits);
  std::vector<Ball> out;
  for (const auto& root : e.isolation.roots) out.push_back(evaluate_at(root));
  return out;
}

RatPolynomial FieldElement::charpoly() const {
  const int d = field_ ? field_->degree() : 1;
  if (is_rational()) {
    RatPolynomial linear{BigRational(-rational_value()), BigRational(1)};
    RatPolynomial r = RatPolynomial::constant(1);
    for (int i = 0; i < d; ++i) r = r * linear;
    return r;
  }
  // Sylvester matrix of m(y) (degree d) and g(y) = x - b(y) (degree e) with
  // entries in Q[x]; m is monic so the resultant is the characteristic polynomial.
  const int e = static_cast<int>(coords_.size()) - 1;
  const RatPolynomial& m = field_->modulus();
  std::vector<RatPolynomial> g(static_cast<std::size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) g[static_cast<std::size_t>(i)] = RatPolynomial::constant(-coords_[static_cast<std::size_t>(i)]);
  g[0] += RatPolynomial{BigRational(0), BigRational(1)};
  const int size = d + e;
  Matrix<RatPolynomial> s(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) s(r, c) = RatPolynomial();
  for (int r = 0; r < e; ++r)
    for (int i = 0; i <= d; ++i) s(r, r + d - i) = RatPolynomial::constant(m.coeff(static_cast<std::size_t>(i)));
  for (int r = 0; r < d; ++r)
    for (int i = 0; i <= e; ++i) s(e + r, r + e - i) = g[static_cast<std::size_t>(i)];
  RatPolynomial res = determinant(std::move(s));
  // normalize to monic (the sign convention of the Sylvester layout)
  BigRational lead = res.leading();
  std::vector<BigRational> c = res.coefficients();
  for (auto& x : c) x /= lead;
  return RatPolynomial(std::move(c));
}

BigRational FieldElement::norm() const {
  RatPolynomial cp = charpoly();
  BigRational c0 = cp.coeff(0);
  return cp.degree() % 2 == 0 ? c0 : BigRational(-c0);
}

std::string FieldElement::to_string() const {
  std::vector<BigRational> c = coordinates();
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += to_fraction_string(c[i]);
  }
  return out + "]";
}

bool charpoly_integrality_check(const FieldElement& beta, const AlgebraicNumber& alpha) {
  FieldElement b = beta;
  if (!b.field()) b += FieldElement::constant(NumberField::create(alpha), 0);
  RatPolynomial cp = b.charpoly();
  for (const auto& c : cp.coefficients())
    if (c.get_den() != 1) return false;
  return true;
}

}  // namespace tmeasure
