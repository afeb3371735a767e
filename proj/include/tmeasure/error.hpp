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

#ifndef TMEASURE_ERROR_HPP
#define TMEASURE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tmeasure {

enum class ErrorCode {
  PrecisionExhausted,
  ZeroInput,
  InvalidAlgebraic,
  DegenerateDenominator,
  ConstraintViolated,
  KernelDimensionUnexpected,
  VanishingOrderExcess,
  DegreePatternViolation,
  DeterminantShapeViolation,
  AllSubsetsSingular,
  BudgetExceeded,
  AssertionFailed,
  ParseError,
  DomainError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::InvalidAlgebraic: return "InvalidAlgebraic";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::KernelDimensionUnexpected: return "KernelDimensionUnexpected";
    case ErrorCode::VanishingOrderExcess: return "VanishingOrderExcess";
    case ErrorCode::DegreePatternViolation: return "DegreePatternViolation";
    case ErrorCode::DeterminantShapeViolation: return "DeterminantShapeViolation";
    case ErrorCode::AllSubsetsSingular: return "AllSubsetsSingular";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

}  // namespace tmeasure

#endif  // TMEASURE_ERROR_HPP
