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


#ifndef TMEASURE_CLI_HPP
#define TMEASURE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tmeasure::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSentinel = 2,
  kPrecision = 3,
  kBudget = 4,
};

/// "2..5", "7" or "1,4,9..12" to a sorted list without repeats.
std::vector<long> parse_int_list(const std::string& text);

/// "-1,1" to {-1, 1}.
std::vector<long> parse_coefficients(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tmeasure::cli

#endif  // TMEASURE_CLI_HPP
