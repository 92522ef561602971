// Copyright 2026 The ffhyper Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ffhyper/verify.hpp"

#include <doctest.h>

#include <algorithm>

#include "ffhyper/commands.hpp"

using namespace ffhyper;

namespace {

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

}  // namespace

TEST_CASE("prime power enumeration") {
  CHECK(prime_powers_up_to(10) == std::vector<i64>{2, 3, 4, 5, 7, 8, 9});
  CHECK(prime_powers_up_to(27).back() == 27);
}

TEST_CASE("suites pass at small sizes") {
  CHECK(all_pass(suite_gauss(9)));
  CHECK(all_pass(suite_orthogonality(5, 11)));
  CHECK(all_pass(suite_fourier(5, 11)));
  CHECK(all_pass(suite_theorem13(5, 11)));
  CHECK(all_pass(suite_mccarthy(5, 11)));
  CHECK(all_pass(suite_twist(5, 11)));
}

TEST_CASE("suites are deterministic in names and results") {
  auto a = suite_theorem13(5, 3);
  auto b = suite_theorem13(5, 3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
  }
}

TEST_CASE("eval command reports both sums and their equality") {
  const char* doc = R"({"field":{"p":5,"a":1},"A":[[1]],"beta":[0],"lambda":[1]})";
  auto result = cmd_eval(doc, "both", std::nullopt);
  CHECK(result.status == kOk);
  REQUIRE(result.report.outputs.size() == 2);
  CHECK(result.report.outputs[0].label == "FA");
  CHECK(result.report.outputs[0].value == CycValue::integer(-1));
  CHECK(result.report.outputs[1].value == CycValue::integer(-1));
  REQUIRE(result.report.checks.size() == 1);
  CHECK(result.report.checks[0].pass);

  auto fa_only = cmd_eval(doc, "FA", std::nullopt);
  CHECK(fa_only.status == kOk);
  CHECK(fa_only.report.outputs.size() == 1);
  CHECK(fa_only.report.checks.empty());

  // An explicit twist overrides the file and keeps the identity intact.
  auto twisted = cmd_eval(doc, "both", 3);
  CHECK(twisted.status == kOk);
  CHECK(twisted.report.inputs["twist"] == 3);
  CHECK(twisted.report.checks[0].pass);
  CHECK(cmd_eval(doc, "both", 7).status == kParseError);

  // An empty character lattice evaluates to zero.
  auto empty = cmd_eval(R"({"field":{"p":5,"a":1},"A":[[2]],"beta":[1],"lambda":[1]})", "FA",
                        std::nullopt);
  CHECK(empty.status == kOk);
  REQUIRE(empty.report.outputs.size() == 1);
  CHECK(empty.report.outputs[0].value == CycValue::integer(0));
}

TEST_CASE("eval command distinguishes failure modes") {
  CHECK(cmd_eval("{not json", "both", std::nullopt).status == kParseError);
  CHECK(cmd_eval(R"({"field":{"p":5,"a":1},"A":[[1]],"beta":[0],"lambda":[0]})", "both",
                 std::nullopt)
            .status == kBadArgument);
  CHECK(cmd_eval(R"({"field":{"p":2,"a":25},"A":[[1]],"beta":[0],"lambda":[1]})", "both",
                 std::nullopt)
            .status == kLimitExceeded);
  CHECK(cmd_eval(R"({"field":{"p":5,"a":1},"A":[[1]],"beta":[0],"lambda":[1]})", "XX",
                 std::nullopt)
            .status == kParseError);
}

TEST_CASE("mccarthy command tabulates t with matching checks") {
  auto result = cmd_mccarthy(5, {0, 0, 0}, 0, /*table=*/true);
  CHECK(result.status == kOk);
  CHECK(result.report.outputs.size() == 4);
  CHECK(result.report.checks.size() == 4);
  for (const auto& check : result.report.checks) CHECK(check.pass);

  // Unreduced exponents are accepted and echoed reduced.
  auto reduced = cmd_mccarthy(5, {5, 9, -1}, 1, false);
  CHECK(reduced.status == kOk);
  CHECK(reduced.report.inputs["alphas"] == Json::array({1, 1, 3}));

  CHECK(cmd_mccarthy(5, {0, 0, 0}, 0, false).status == kBadArgument);
  CHECK(cmd_mccarthy(6, {0}, 1, false).status == kParseError);
  CHECK(cmd_mccarthy(5, {0, 0}, 1, false).status == kParseError);
}

TEST_CASE("verify command aggregates suites and respects bounds") {
  auto result = cmd_verify("gauss", 9, 1);
  CHECK(result.status == kOk);
  CHECK_FALSE(result.report.checks.empty());

  CHECK(cmd_verify("bogus", 9, 1).status == kParseError);
  CHECK(cmd_verify("gauss", i64{1} << 22, 1).status == kLimitExceeded);
}

TEST_CASE("csv rendering pairs outputs with checks") {
  auto result = cmd_mccarthy(5, {0, 0, 0}, 0, true);
  std::string csv = report_to_csv(result.report);
  CHECK(csv.rfind("t,re,im,check\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("pass") != std::string::npos);
}
