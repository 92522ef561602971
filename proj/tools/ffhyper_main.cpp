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

// Command-line front end; all work happens behind the C API in ffhyper.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffhyper.h"

namespace {

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ffh_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int emit(ffh_status status, const OwnedString& report, bool csv) {
  if (report.ptr) {
    if (csv) {
      OwnedString table;
      if (ffh_report_to_csv(report.ptr, &table.ptr) == FFH_OK) {
        std::cout << table.str();
      } else {
        std::cerr << "error: " << ffh_last_error() << "\n";
        return FFH_INTERNAL_ERROR;
      }
    } else {
      std::cout << report.str() << "\n";
    }
  }
  if (status != FFH_OK && status != FFH_CHECK_FAILED) {
    std::cerr << "error: " << ffh_last_error() << "\n";
  }
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite field A-hypergeometric functions in exact cyclotomic arithmetic"};
  app.require_subcommand(1);

  // eval
  std::string instance_path;
  std::string which = "both";
  long long eval_twist = 0;  // 0 = use the instance file's twist
  bool eval_csv = false;
  auto* eval = app.add_subcommand("eval", "Evaluate F_A and/or S_A for an instance file");
  eval->add_option("instance", instance_path, "Instance JSON file")->required();
  eval->add_option("--which", which, "FA, SA or both");
  eval->add_option("--twist", eval_twist, "Additive character twist (element encoding)");
  eval->add_flag("--csv", eval_csv, "Emit a CSV table instead of JSON");

  // mccarthy
  long long q = 0;
  std::string alphas_arg;
  long long t = 1;
  bool table = false;
  bool mccarthy_csv = false;
  auto* mccarthy = app.add_subcommand("mccarthy", "Evaluate the kF_{k-1} hypergeometric values");
  mccarthy->add_option("--q", q, "Field size (prime power)")->required();
  mccarthy->add_option("--a", alphas_arg, "Comma-separated 2k-1 character exponents")->required();
  mccarthy->add_option("--t", t, "Argument t (nonzero element encoding)");
  mccarthy->add_flag("--table", table, "Tabulate every t in F_q^x");
  mccarthy->add_flag("--csv", mccarthy_csv, "Emit a CSV table instead of JSON");

  // verify
  std::string suite = "all";
  long long qmax = 9;
  unsigned long long seed = 1;
  bool verify_csv = false;
  auto* verify = app.add_subcommand("verify", "Run a self-verification suite");
  verify->add_option("--suite", suite,
                     "gauss, orthogonality, fourier, theorem13, mccarthy, all");
  verify->add_option("--qmax", qmax, "Largest field size to exercise");
  verify->add_option("--seed", seed, "Seed for the randomized cases");
  verify->add_flag("--csv", verify_csv, "Emit a CSV table instead of JSON");

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) {
    std::ifstream in(instance_path);
    if (!in) {
      std::cerr << "error: cannot open '" << instance_path << "'\n";
      return FFH_PARSE_ERROR;
    }
    std::ostringstream text;
    text << in.rdbuf();
    OwnedString report;
    ffh_status status =
        ffh_cmd_eval(text.str().c_str(), which.c_str(), eval_twist, &report.ptr);
    return emit(status, report, eval_csv);
  }

  if (mccarthy->parsed()) {
    std::vector<ffh_int> alphas;
    std::stringstream ss(alphas_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        alphas.push_back(std::stoll(item));
      } catch (...) {
        std::cerr << "error: bad character exponent '" << item << "'\n";
        return FFH_PARSE_ERROR;
      }
    }
    OwnedString report;
    ffh_status status =
        ffh_cmd_mccarthy(q, alphas.data(), alphas.size(), t, table ? 1 : 0, &report.ptr);
    return emit(status, report, mccarthy_csv);
  }

  OwnedString report;
  ffh_status status = ffh_cmd_verify(suite.c_str(), qmax, seed, &report.ptr);
  return emit(status, report, verify_csv);
}
