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


#include "tmeasure/format.hpp"

#include <cctype>

#include "tmeasure/error.hpp"

namespace tmeasure {

BigRational parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&]() -> BigRational { throw Error(ErrorCode::ParseError, "not a rational number: '" + raw + "'"); };
  if (s.empty()) return fail();
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) return fail();
      BigRational q(num, den);
      q.canonicalize();
      return q;
    }
    // decimal with optional exponent: [-+]digits[.digits][e[-+]digits]
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
      if (s[i] == '.') {
        if (seen_point) return fail();
        seen_point = true;
        continue;
      }
      digits += s[i];
      if (seen_point) --scale;
    }
    if (digits.empty()) return fail();
    if (i < s.size()) {
      if (s[i] != 'e' && s[i] != 'E') return fail();
      std::string e = s.substr(i + 1);
      if (e.empty() || e.find_first_not_of("+-0123456789") != std::string::npos) return fail();
      scale += std::stol(e);
    }
    BigRational q{BigInt(digits)};
    BigInt ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    if (scale >= 0) q *= ten_power;
    else q /= ten_power;
    q.canonicalize();
    return negative ? BigRational(-q) : q;
  } catch (const std::invalid_argument&) {
    return fail();
  }
}

std::string rational_decimal(const BigRational& q, int digits) {
  Float f(static_cast<Precision>(digits * 4 + 64));
  mpfr_set_q(f.get(), q.get_mpq_t(), MPFR_RNDN);
  return f.to_decimal(digits, MPFR_RNDN);
}

Json rational_json(const BigRational& q) {
  return Json{{"exact", to_fraction_string(q)}, {"decimal", rational_decimal(q)}};
}

Json interval_json(const Interval& x, int digits) { return x.to_string(digits); }

std::string decimal_down(const Float& x, int digits) { return x.to_decimal(digits, MPFR_RNDD); }
std::string decimal_up(const Float& x, int digits) { return x.to_decimal(digits, MPFR_RNDU); }

}  // namespace tmeasure
