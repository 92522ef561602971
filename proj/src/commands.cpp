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

#include "ffhyper/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

namespace ffhyper {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  i64 elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int status_for_exception(const std::exception& e) {
  if (dynamic_cast<const parse_error*>(&e)) return kParseError;
  if (dynamic_cast<const limit_error*>(&e)) return kLimitExceeded;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return kBadArgument;
  return kInternalError;
}

CommandResult failure(RunReport report, const std::exception& e, const Stopwatch& watch) {
  report.error = e.what();
  report.elapsed_ms = watch.elapsed_ms();
  return CommandResult{status_for_exception(e), std::move(report)};
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

// Factors a prime power q = p^a; throws parse_error otherwise.
std::pair<i64, i64> prime_power_split(i64 q) {
  if (q < 2) throw parse_error("q must be a prime power >= 2");
  i64 p = q;
  for (i64 d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  i64 a = 0, v = q;
  while (v % p == 0) {
    v /= p;
    ++a;
  }
  if (v != 1) throw parse_error("q must be a prime power");
  return {p, a};
}

}  // namespace

Json RunReport::to_json() const {
  Json out;
  out["command"] = command;
  out["inputs"] = inputs;
  Json out_list = Json::array();
  for (const auto& entry : outputs) {
    Json item;
    item["label"] = entry.label;
    item["value"] = value_to_json(entry.value);
    item["complex"] = complex_view_json(entry.value);
    out_list.push_back(std::move(item));
  }
  out["outputs"] = std::move(out_list);
  Json check_list = Json::array();
  for (const auto& check : checks) {
    Json item;
    item["name"] = check.name;
    item["pass"] = check.pass;
    check_list.push_back(std::move(item));
  }
  out["checks"] = std::move(check_list);
  if (!error.empty()) out["error"] = error;
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

i64 resolve_q_limit() {
  if (const char* env = std::getenv("FFHYPER_QMAX")) {
    char* end = nullptr;
    i64 v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 1) return v;
  }
  return kDefaultQLimit;
}

CommandResult cmd_eval(const std::string& instance_text, const std::string& which,
                       std::optional<i64> twist_override) {
  Stopwatch watch;
  RunReport report;
  report.command = "eval";
  try {
    if (which != "FA" && which != "SA" && which != "both") {
      throw parse_error("eval: --which must be FA, SA or both");
    }
    ParsedInstance parsed = parse_instance_text(instance_text, resolve_q_limit());
    if (twist_override.has_value()) {
      const i64 t = *twist_override;
      if (t == 0) throw std::invalid_argument("eval: twist must be nonzero");
      if (t < 0 || t >= parsed.instance.field->q()) {
        throw parse_error("eval: twist encoding out of range");
      }
      parsed.twist_encoding = t;
    }
    report.inputs = instance_to_json(parsed);
    report.inputs["which"] = which;

    const auto& field = parsed.instance.field;
    AddCharTwist twist(field, parsed.twist_encoding);
    GaussSumCache cache(field);

    std::optional<CycValue> fa, sa;
    if (which == "FA" || which == "both") {
      fa = hypergeometric_function(parsed.instance, parsed.lambda, twist, &cache);
      report.outputs.push_back({"FA", *fa});
    }
    if (which == "SA" || which == "both") {
      sa = exponential_sum(parsed.instance, parsed.lambda, twist);
      report.outputs.push_back({"SA", *sa});
    }
    if (which == "both") {
      report.checks.push_back({"hypergeometric_equals_exponential", *fa == *sa});
    }
    report.elapsed_ms = watch.elapsed_ms();
    return CommandResult{all_passed(report.checks) ? kOk : kCheckFailed, std::move(report)};
  } catch (const std::exception& e) {
    return failure(std::move(report), e, watch);
  }
}

CommandResult cmd_mccarthy(i64 q, const std::vector<i64>& alpha_exponents, i64 t_encoding,
                           bool table) {
  Stopwatch watch;
  RunReport report;
  report.command = "mccarthy";
  try {
    auto [p, a] = prime_power_split(q);
    auto field = Field::build(p, a, resolve_q_limit());
    if (alpha_exponents.empty() || alpha_exponents.size() % 2 == 0) {
      throw parse_error("mccarthy: need an odd number (2k-1) of characters");
    }
    const i64 unit = field->unit_order();
    std::vector<i64> alphas(alpha_exponents.size());
    for (size_t i = 0; i < alphas.size(); ++i) alphas[i] = mod_reduce(alpha_exponents[i], unit);

    std::vector<i64> ts;
    if (table) {
      for (i64 t = 1; t < q; ++t) ts.push_back(t);
    } else {
      if (t_encoding == 0) throw std::invalid_argument("mccarthy: t must be nonzero");
      if (t_encoding < 0 || t_encoding >= q) throw parse_error("mccarthy: t encoding out of range");
      ts.push_back(t_encoding);
    }

    report.inputs = Json{{"q", q}, {"alphas", alphas}, {"table", table}};
    if (!table) report.inputs["t"] = t_encoding;

    AddCharTwist twist(field, 1);
    GaussSumCache cache(field);
    for (i64 t : ts) {
      CycValue value = mccarthy_hypergeometric(field, alphas, t, twist, &cache);
      report.outputs.push_back({std::to_string(t), value});
      bool ok = mccarthy_normalization_check(field, alphas, t, twist);
      report.checks.push_back({"normalized_fa_match.t=" + std::to_string(t), ok});
    }
    report.elapsed_ms = watch.elapsed_ms();
    return CommandResult{all_passed(report.checks) ? kOk : kCheckFailed, std::move(report)};
  } catch (const std::exception& e) {
    return failure(std::move(report), e, watch);
  }
}

CommandResult cmd_verify(const std::string& suite, i64 qmax, u64 seed) {
  Stopwatch watch;
  RunReport report;
  report.command = "verify";
  report.inputs = Json{{"suite", suite}, {"qmax", qmax}, {"seed", seed}};
  try {
    if (qmax < 2) throw parse_error("verify: qmax must be >= 2");
    if (qmax > resolve_q_limit()) throw limit_error("verify: qmax exceeds the configured bound");

    std::vector<Check> checks;
    auto append = [&checks](std::vector<Check> more) {
      checks.insert(checks.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
    };
    bool known = false;
    if (suite == "gauss" || suite == "all") {
      append(suite_gauss(qmax));
      known = true;
    }
    if (suite == "orthogonality" || suite == "all") {
      append(suite_orthogonality(qmax, seed));
      known = true;
    }
    if (suite == "fourier" || suite == "all") {
      append(suite_fourier(qmax, seed));
      known = true;
    }
    if (suite == "theorem13" || suite == "all") {
      append(suite_theorem13(qmax, seed));
      known = true;
    }
    if (suite == "mccarthy" || suite == "all") {
      append(suite_mccarthy(qmax, seed));
      known = true;
    }
    if (!known) throw parse_error("verify: unknown suite '" + suite + "'");
    if (checks.empty()) {
      // Every case was filtered out by qmax; record that explicitly so the
      // report always carries at least one check.
      checks.push_back({"no_applicable_cases.qmax=" + std::to_string(qmax), true});
    }

    report.checks = std::move(checks);
    report.elapsed_ms = watch.elapsed_ms();
    return CommandResult{all_passed(report.checks) ? kOk : kCheckFailed, std::move(report)};
  } catch (const std::exception& e) {
    return failure(std::move(report), e, watch);
  }
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "t,re,im,check\n";
  for (size_t i = 0; i < report.outputs.size(); ++i) {
    const auto& entry = report.outputs[i];
    auto [re, im] = entry.value.to_complex();
    out << entry.label << ',' << re << ',' << im << ',';
    if (report.checks.size() == report.outputs.size()) {
      out << (report.checks[i].pass ? "pass" : "fail");
    } else if (report.checks.size() == 1) {
      out << (report.checks[0].pass ? "pass" : "fail");
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ffhyper
