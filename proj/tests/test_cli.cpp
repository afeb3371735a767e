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


#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tmeasure/cli.hpp"
#include "tmeasure/error.hpp"
#include "tmeasure/format.hpp"

using namespace tmeasure;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tmeasure");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("integer lists") {
  CHECK(cli::parse_int_list("2..5") == std::vector<long>{2, 3, 4, 5});
  CHECK(cli::parse_int_list("7") == std::vector<long>{7});
  CHECK(cli::parse_int_list("9, 1..3, 2") == std::vector<long>{1, 2, 3, 9});
  CHECK_THROWS_AS(cli::parse_int_list("5..2"), Error);
  CHECK_THROWS_AS(cli::parse_int_list("a"), Error);
  CHECK_THROWS_AS(cli::parse_int_list(""), Error);
  CHECK(cli::parse_coefficients("-1, 1") == std::vector<long>{-1, 1});
}

TEST_CASE("exponent table") {
  Result r = run({"exponent", "--d", "2..5", "--delta", "1..3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# command: exponent") != std::string::npos);
  CHECK(r.out.find("# d = 2..5") != std::string::npos);
  CHECK(r.out.find("\n2,1,2,3,2,11,11,15,16,") != std::string::npos);

  r = run({"exponent", "--d", "1", "--delta", "7", "--format", "json"});
  CHECK(r.code == 0);
  Json j = json_of(r);
  CHECK(j["schema"] == "tmeasure.exponent/1");
  CHECK(j["provenance"]["config"]["delta"] == "7");
  CHECK(j["rows"][0]["psi_lambda"]["exact"] == "7");

  r = run({"exponent", "--d", "2", "--delta", "3", "--check-closed-forms", "--format", "json"});
  j = json_of(r);
  CHECK(j["closed_forms"][0]["reference"]["exact"] == "136/5");
  CHECK(j["closed_forms"][0]["corrected"]["exact"] == "34");
  CHECK(j["closed_forms"][0]["matches_reference"] == false);
  CHECK(j["closed_forms"][0]["matches_corrected"] == true);
}

TEST_CASE("bound") {
  Result r = run({"bound", "--alpha", "x^2-2:+re", "--delta", "1", "--H", "100"});
  CHECK(r.code == 0);
  Json j = json_of(r);
  CHECK(j["psi"]["exact"] == "11");
  CHECK(j["p_choice"]["default"] == true);
  CHECK(j["provenance"]["config"]["alpha"] == "x^2-2:+re");

  r = run({"bound", "--alpha", "x^2-2:+re", "--delta", "1", "--H", "100", "--p", "3"});
  j = json_of(r);
  CHECK(j["psi"]["exact"] == "11");
  CHECK(j["p"] == 3);
  CHECK(j["p_choice"]["note"] == "non-default p");

  r = run({"bound", "--alpha", "x-1", "--delta", "1", "--H", "1"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["d"] == 1);
}

TEST_CASE("verify and exit codes") {
  Result r = run({"verify", "--alpha", "x-1", "--delta", "1", "--H", "1..30"});
  CHECK(r.code == cli::kOk);
  CHECK(json_of(r)["sentinel_held"] == true);

  r = run({"verify", "--alpha", "x-1", "--delta", "3", "--H", "1..300"});
  CHECK(r.code == cli::kBudget);
  r = run({"verify", "--alpha", "x-1", "--delta", "1", "--H", "1..5", "--budget", "10"});
  CHECK(r.code == cli::kBudget);

  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"bound", "--alpha", "x^2-4:+re", "--delta", "1", "--H", "1"}).code == cli::kUsage);
  CHECK(run({"exponent", "--d", "x", "--delta", "1"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("approximants and certificate") {
  Result r = run({"approximants", "--alpha", "x-1", "--n", "1", "--p", "1"});
  CHECK(r.code == 0);
  Json j = json_of(r);
  CHECK(j["columns"][0]["P"][0] == Json::array({"1", "1"}));
  CHECK(j["columns"][1]["P"][1] == Json::array({"-2", "1"}));
  CHECK(j["checks"]["det_at_one_nonzero"] == true);

  r = run({"certificate", "--alpha", "x-1", "--P", "-1,1", "--n", "1", "--p", "1"});
  CHECK(r.code == 0);
  j = json_of(r);
  CHECK(j["D"] == "1");
  CHECK(j["chain"]["identity_exact"] == true);
}

TEST_CASE("scans") {
  Result r = run({"scan", "parity", "--d", "2..10", "--delta", "2..10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d,delta,p1,p2,psi_p1,psi_p2,sign,matches_pattern") != std::string::npos);
  CHECK(r.out.find("# rows = 81") != std::string::npos);

  r = run({"scan", "floor", "--d", "2", "--delta", "8", "--format", "json"});
  CHECK(json_of(r)["rows"][0]["holds"] == true);

  r = run({"scan", "asymptotic", "--delta", "3", "--d", "2", "--format", "json"});
  CHECK(json_of(r)["rows"][0]["d_times_difference"]["exact"] == "-2/3");
}

TEST_CASE("config file") {
  std::string path = "cli_test_config.ini";
  {
    std::ofstream f(path);
    f << "# verify settings\nalpha = x-1\ndelta = 1\nH = 1..5\nformat = csv\n";
  }
  Result r = run({"verify", "--config", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("# alpha = x-1") != std::string::npos);
  CHECK(r.out.find("\n5,") != std::string::npos);
  {
    std::ofstream f(path);
    f << "alpha = x-1\nP = -1,1\nn = 1\np = 1\n";
  }
  r = run({"certificate", "--config", path});
  CHECK(r.code == 0);
  CHECK(json_of(r)["D"] == "1");
  std::remove(path.c_str());
}

TEST_CASE("output file") {
  std::string path = "cli_test_output.json";
  Result r = run({"scan", "asymptotic", "--delta", "2", "--d", "2", "--format", "json", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  Json j = Json::parse(in);
  CHECK(j["schema"] == "tmeasure.asymptotic/1");
  std::remove(path.c_str());
}
