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


#ifndef TMEASURE_FORMAT_HPP
#define TMEASURE_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "tmeasure/interval.hpp"
#include "tmeasure/rational.hpp"

namespace tmeasure {

using Json = nlohmann::ordered_json;

/// Decimal with `digits` significant digits, rounded to nearest.
std::string rational_decimal(const BigRational& q, int digits = 20);

/// {"exact": "num/den", "decimal": "..."}
Json rational_json(const BigRational& q);

/// "[lo, hi]" with `digits` significant digits, rounded outward.
Json interval_json(const Interval& x, int digits = 20);

/// Lower endpoint rounded down, as a decimal string.
std::string decimal_down(const Float& x, int digits = 20);
std::string decimal_up(const Float& x, int digits = 20);

}  // namespace tmeasure

#endif  // TMEASURE_FORMAT_HPP
