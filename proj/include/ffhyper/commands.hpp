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

#ifndef FFHYPER_COMMANDS_HPP_
#define FFHYPER_COMMANDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ffhyper/io.hpp"
#include "ffhyper/verify.hpp"

namespace ffhyper {

// Status values double as process exit codes.
enum StatusCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kBadArgument = 3,
  kLimitExceeded = 4,
  kInternalError = 5,
};

struct OutputEntry {
  std::string label;
  CycValue value;
};

struct RunReport {
  std::string command;
  Json inputs;
  std::vector<OutputEntry> outputs;
  std::vector<Check> checks;
  i64 elapsed_ms = 0;
  std::string error;

  Json to_json() const;
};

struct CommandResult {
  int status = kOk;
  RunReport report;
};

// Bound on q = p^a; FFHYPER_QMAX in the environment overrides the default.
i64 resolve_q_limit();

// Evaluates F_A and/or S_A for an instance document; which is FA, SA or both
// (both also reports their equality as a check).  The twist override, when
// set, replaces the instance file's twist.
CommandResult cmd_eval(const std::string& instance_text, const std::string& which,
                       std::optional<i64> twist_override);

// kF_{k-1} values over F_q with the normalized-F_A comparison check, at one
// t or tabulated over every t in F_q^x.
CommandResult cmd_mccarthy(i64 q, const std::vector<i64>& alpha_exponents, i64 t_encoding,
                           bool table);

// Runs a named verification suite (gauss, orthogonality, fourier, theorem13,
// mccarthy, or all); deterministic for equal seed and flags.
CommandResult cmd_verify(const std::string& suite, i64 qmax, u64 seed);

// Table view of a report: one "t,re,im,check" row per output.
std::string report_to_csv(const RunReport& report);

}  // namespace ffhyper

#endif  // FFHYPER_COMMANDS_HPP_
