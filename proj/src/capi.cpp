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

#include "ffhyper.h"

#include <cstring>
#include <new>
#include <string>

#include "ffhyper/commands.hpp"

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ffh_status status_from_exception(const std::exception& e) {
  g_last_error = e.what();
  if (dynamic_cast<const ffhyper::parse_error*>(&e)) return FFH_PARSE_ERROR;
  if (dynamic_cast<const ffhyper::limit_error*>(&e)) return FFH_LIMIT_EXCEEDED;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return FFH_BAD_ARGUMENT;
  return FFH_INTERNAL_ERROR;
}

template <typename Fn>
ffh_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return status_from_exception(e);
  } catch (...) {
    g_last_error = "unknown error";
    return FFH_INTERNAL_ERROR;
  }
}

bool any_null(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs) {
    if (p == nullptr) {
      g_last_error = "null argument";
      return true;
    }
  }
  return false;
}

}  // namespace

struct ffh_field {
  std::shared_ptr<const ffhyper::Field> field;
};

struct ffh_value {
  ffhyper::CycValue value;
};

struct ffh_instance {
  ffhyper::ParsedInstance parsed;
};

namespace {

ffhyper::AddCharTwist resolve_twist(const ffh_instance* instance, ffh_int twist) {
  const auto& parsed = instance->parsed;
  return ffhyper::AddCharTwist(parsed.instance.field,
                               twist == 0 ? parsed.twist_encoding : twist);
}

ffh_status run_command(ffhyper::CommandResult result, char** report_json) {
  *report_json = copy_string(result.report.to_json().dump(2));
  if (result.status != ffhyper::kOk && !result.report.error.empty()) {
    g_last_error = result.report.error;
  }
  return static_cast<ffh_status>(result.status);
}

}  // namespace

extern "C" {

const char* ffh_last_error(void) { return g_last_error.c_str(); }

void ffh_string_free(char* s) { delete[] s; }

ffh_status ffh_field_create(ffh_int p, ffh_int a, ffh_field** out) {
  if (any_null({out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *out = new ffh_field{ffhyper::Field::build(p, a, ffhyper::resolve_q_limit())};
    return FFH_OK;
  });
}

void ffh_field_free(ffh_field* field) { delete field; }

ffh_int ffh_field_q(const ffh_field* field) { return field ? field->field->q() : -1; }

ffh_int ffh_field_generator(const ffh_field* field) {
  return field ? field->field->generator_encoding() : -1;
}

ffh_status ffh_field_to_json(const ffh_field* field, char** json_out) {
  if (any_null({field, json_out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *json_out = copy_string(ffhyper::field_to_json(*field->field).dump());
    return FFH_OK;
  });
}

ffh_status ffh_field_element_op(const ffh_field* field, const char* kind, ffh_int x, ffh_int y,
                                ffh_int* out) {
  if (any_null({field, kind, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    const auto& f = *field->field;
    auto ex = f.element_from_encoding(x);
    std::string op(kind);
    ffhyper::FieldElement result;
    if (op == "add") {
      result = f.add(ex, f.element_from_encoding(y));
    } else if (op == "mul") {
      result = f.mul(ex, f.element_from_encoding(y));
    } else if (op == "neg") {
      result = f.neg(ex);
    } else if (op == "inv") {
      result = f.inv(ex);
    } else if (op == "pow") {
      result = f.pow(ex, y);
    } else {
      throw ffhyper::parse_error("element_op: unknown kind '" + op + "'");
    }
    *out = f.encoding(result);
    return FFH_OK;
  });
}

ffh_status ffh_field_discrete_log(const ffh_field* field, ffh_int x, ffh_int* out) {
  if (any_null({field, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *out = field->field->log_of(x);
    return FFH_OK;
  });
}

ffh_status ffh_field_trace(const ffh_field* field, ffh_int x, ffh_int* out) {
  if (any_null({field, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    if (x < 0 || x >= field->field->q()) {
      throw std::invalid_argument("trace: element encoding out of range");
    }
    *out = field->field->trace_of(x);
    return FFH_OK;
  });
}

void ffh_value_free(ffh_value* value) { delete value; }

ffh_status ffh_value_root_of_unity(ffh_int m, ffh_int k, ffh_value** out) {
  if (any_null({out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *out = new ffh_value{ffhyper::CycValue::root_of_unity(m, k)};
    return FFH_OK;
  });
}

ffh_status ffh_value_op(const char* kind, const ffh_value* u, const ffh_value* v, ffh_int scalar,
                        ffh_value** out) {
  if (any_null({kind, u, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    std::string op(kind);
    ffhyper::CycValue result;
    if (op == "add") {
      result = v ? u->value + v->value : u->value + ffhyper::CycValue::integer(scalar);
    } else if (op == "mul") {
      result = v ? u->value * v->value : u->value.scalar_mul(scalar);
    } else if (op == "neg") {
      result = -u->value;
    } else if (op == "scalar_div") {
      result = u->value.scalar_div(scalar);
    } else {
      throw ffhyper::parse_error("value_op: unknown kind '" + op + "'");
    }
    *out = new ffh_value{std::move(result)};
    return FFH_OK;
  });
}

ffh_status ffh_value_to_json(const ffh_value* value, char** json_out) {
  if (any_null({value, json_out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *json_out = copy_string(ffhyper::value_to_json(value->value).dump());
    return FFH_OK;
  });
}

ffh_status ffh_value_to_complex(const ffh_value* value, double* re, double* im) {
  if (any_null({value, re, im})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    auto [r, i] = value->value.to_complex();
    *re = r;
    *im = i;
    return FFH_OK;
  });
}

int ffh_value_equal(const ffh_value* u, const ffh_value* v) {
  if (u == nullptr || v == nullptr) return 0;
  try {
    return u->value == v->value ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

ffh_status ffh_mult_char_eval(const ffh_field* field, ffh_int k, ffh_int x, ffh_value** out) {
  if (any_null({field, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    ffhyper::MultChar chi(field->field, k);
    *out = new ffh_value{chi.eval_encoding(x)};
    return FFH_OK;
  });
}

ffh_status ffh_additive_char_eval(const ffh_field* field, ffh_int c, ffh_int x, ffh_value** out) {
  if (any_null({field, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    ffhyper::AddCharTwist twist(field->field, c);
    if (x < 0 || x >= field->field->q()) {
      throw std::invalid_argument("additive character: element encoding out of range");
    }
    *out = new ffh_value{twist.eval_encoding(x)};
    return FFH_OK;
  });
}

ffh_status ffh_gauss_sum(const ffh_field* field, ffh_int k, ffh_int c, ffh_value** out) {
  if (any_null({field, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *out = new ffh_value{ffhyper::gauss_sum(ffhyper::MultChar(field->field, k),
                                            ffhyper::AddCharTwist(field->field, c))};
    return FFH_OK;
  });
}

ffh_status ffh_twist_relation_check(const ffh_field* field, ffh_int k, ffh_int c, int* out) {
  if (any_null({field, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    if (c < 0 || c >= field->field->q()) {
      throw std::invalid_argument("twist relation: c encoding out of range");
    }
    *out = ffhyper::twist_relation_check(ffhyper::MultChar(field->field, k),
                                         field->field->element_from_encoding(c))
               ? 1
               : 0;
    return FFH_OK;
  });
}

ffh_status ffh_instance_parse(const char* json, ffh_instance** out) {
  if (any_null({json, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *out = new ffh_instance{ffhyper::parse_instance_text(json, ffhyper::resolve_q_limit())};
    return FFH_OK;
  });
}

void ffh_instance_free(ffh_instance* instance) { delete instance; }

ffh_status ffh_instance_to_json(const ffh_instance* instance, char** json_out) {
  if (any_null({instance, json_out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *json_out = copy_string(ffhyper::instance_to_json(instance->parsed).dump());
    return FFH_OK;
  });
}

ffh_status ffh_solve_character_lattice(const ffh_instance* instance, char** json_out) {
  if (any_null({instance, json_out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    auto set = ffhyper::solve_character_lattice(instance->parsed.instance);
    *json_out = copy_string(ffhyper::solution_set_to_json(set).dump());
    return FFH_OK;
  });
}

ffh_status ffh_eval_hypergeometric(const ffh_instance* instance, ffh_int twist, ffh_value** out) {
  if (any_null({instance, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *out = new ffh_value{ffhyper::hypergeometric_function(
        instance->parsed.instance, instance->parsed.lambda, resolve_twist(instance, twist))};
    return FFH_OK;
  });
}

ffh_status ffh_eval_exponential_sum(const ffh_instance* instance, ffh_int twist, ffh_value** out) {
  if (any_null({instance, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    *out = new ffh_value{ffhyper::exponential_sum(
        instance->parsed.instance, instance->parsed.lambda, resolve_twist(instance, twist))};
    return FFH_OK;
  });
}

ffh_status ffh_fourier_coefficient(const ffh_instance* instance, const ffh_int* rho, size_t len,
                                   ffh_int twist, ffh_value** out) {
  if (any_null({instance, rho, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    std::vector<ffhyper::i64> exponents(rho, rho + len);
    *out = new ffh_value{ffhyper::fourier_coefficient(instance->parsed.instance, exponents,
                                                      resolve_twist(instance, twist))};
    return FFH_OK;
  });
}

ffh_status ffh_mccarthy(const ffh_field* field, const ffh_int* alphas, size_t len, ffh_int t,
                        ffh_value** out) {
  if (any_null({field, alphas, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    std::vector<ffhyper::i64> exponents(alphas, alphas + len);
    ffhyper::AddCharTwist twist(field->field, 1);
    *out = new ffh_value{ffhyper::mccarthy_hypergeometric(field->field, exponents, t, twist)};
    return FFH_OK;
  });
}

ffh_status ffh_mccarthy_normalization(const ffh_field* field, const ffh_int* alphas, size_t len,
                                      ffh_value** out) {
  if (any_null({field, alphas, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    std::vector<ffhyper::i64> exponents(alphas, alphas + len);
    ffhyper::AddCharTwist twist(field->field, 1);
    *out = new ffh_value{ffhyper::normalization_constant(field->field, exponents, twist)};
    return FFH_OK;
  });
}

ffh_status ffh_mccarthy_instance(const ffh_field* field, const ffh_int* alphas, size_t len,
                                 ffh_int t, char** json_out) {
  if (any_null({field, alphas, json_out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    std::vector<ffhyper::i64> exponents(alphas, alphas + len);
    ffhyper::HypergeometricInstance inst = ffhyper::mccarthy_instance(field->field, exponents);
    const ffhyper::i64 k = (static_cast<ffhyper::i64>(len) + 1) / 2;
    ffhyper::ParsedInstance parsed{inst, ffhyper::mccarthy_lambda(*field->field, k, t), 1};
    *json_out = copy_string(ffhyper::instance_to_json(parsed).dump());
    return FFH_OK;
  });
}

ffh_status ffh_mccarthy_specialization_check(const ffh_field* field, const ffh_int* alphas,
                                             size_t len, ffh_int t, int* out) {
  if (any_null({field, alphas, out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    std::vector<ffhyper::i64> exponents(alphas, alphas + len);
    ffhyper::AddCharTwist twist(field->field, 1);
    *out = ffhyper::mccarthy_specialization_check(field->field, exponents, t, twist) ? 1 : 0;
    return FFH_OK;
  });
}

ffh_status ffh_cmd_eval(const char* instance_json, const char* which, ffh_int twist_or_zero,
                        char** report_json) {
  if (any_null({instance_json, which, report_json})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    std::optional<ffhyper::i64> twist;
    if (twist_or_zero != 0) twist = twist_or_zero;
    return run_command(ffhyper::cmd_eval(instance_json, which, twist), report_json);
  });
}

ffh_status ffh_cmd_mccarthy(ffh_int q, const ffh_int* alphas, size_t len, ffh_int t, int table,
                            char** report_json) {
  if (any_null({alphas, report_json})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    std::vector<ffhyper::i64> exponents(alphas, alphas + len);
    return run_command(ffhyper::cmd_mccarthy(q, exponents, t, table != 0), report_json);
  });
}

ffh_status ffh_cmd_verify(const char* suite, ffh_int qmax, unsigned long long seed,
                          char** report_json) {
  if (any_null({suite, report_json})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    return run_command(ffhyper::cmd_verify(suite, qmax, seed), report_json);
  });
}

ffh_status ffh_report_to_csv(const char* report_json, char** csv_out) {
  if (any_null({report_json, csv_out})) return FFH_BAD_ARGUMENT;
  return guarded([&]() {
    ffhyper::Json doc = ffhyper::Json::parse(report_json, nullptr, false);
    if (doc.is_discarded()) throw ffhyper::parse_error("csv: invalid report JSON");
    ffhyper::RunReport report;
    report.command = doc.value("command", "");
    for (const auto& item : doc.value("outputs", ffhyper::Json::array())) {
      const auto& v = item["value"];
      ffhyper::i64 m = v["m"].get<ffhyper::i64>();
      const auto& coeffs = v["coeffs"];
      std::vector<ffhyper::i64> counts(coeffs.size(), 0);
      for (size_t i = 0; i < coeffs.size(); ++i) counts[i] = coeffs[i].get<ffhyper::i64>();
      ffhyper::CycValue value =
          ffhyper::CycValue::from_exponent_counts(m, counts, v["den"].get<ffhyper::i64>());
      report.outputs.push_back({item["label"].get<std::string>(), std::move(value)});
    }
    for (const auto& item : doc.value("checks", ffhyper::Json::array())) {
      report.checks.push_back({item["name"].get<std::string>(), item["pass"].get<bool>()});
    }
    *csv_out = copy_string(ffhyper::report_to_csv(report));
    return FFH_OK;
  });
}

}  // extern "C"
