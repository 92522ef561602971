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

#include <doctest.h>

#include <cmath>
#include <string>

namespace {

struct Str {
  char* ptr = nullptr;
  ~Str() { ffh_string_free(ptr); }
  std::string get() const { return ptr ? std::string(ptr) : std::string(); }
};

struct Value {
  ffh_value* ptr = nullptr;
  ~Value() { ffh_value_free(ptr); }
};

struct FieldHandle {
  ffh_field* ptr = nullptr;
  ~FieldHandle() { ffh_field_free(ptr); }
};

struct InstanceHandle {
  ffh_instance* ptr = nullptr;
  ~InstanceHandle() { ffh_instance_free(ptr); }
};

// Strips every line containing "elapsed_ms" so deterministic reports compare
// byte-for-byte.
std::string without_elapsed(const std::string& report) {
  std::string out;
  size_t pos = 0;
  while (pos < report.size()) {
    size_t end = report.find('\n', pos);
    if (end == std::string::npos) end = report.size();
    std::string line = report.substr(pos, end - pos);
    if (line.find("elapsed_ms") == std::string::npos) {
      out += line;
      out += '\n';
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("field handles expose the descriptor") {
  FieldHandle f;
  REQUIRE(ffh_field_create(3, 2, &f.ptr) == FFH_OK);
  CHECK(ffh_field_q(f.ptr) == 9);
  CHECK(ffh_field_generator(f.ptr) == 4);

  Str json;
  REQUIRE(ffh_field_to_json(f.ptr, &json.ptr) == FFH_OK);
  CHECK(json.get().find("\"modulus\":[1,0,1]") != std::string::npos);
  CHECK(json.get().find("\"generator\":[1,1]") != std::string::npos);

  ffh_field* bad = nullptr;
  CHECK(ffh_field_create(4, 1, &bad) == FFH_BAD_ARGUMENT);
  CHECK(std::string(ffh_last_error()).find("prime") != std::string::npos);
  CHECK(ffh_field_create(2, 25, &bad) == FFH_LIMIT_EXCEEDED);
}

TEST_CASE("element operations run through the dispatcher") {
  FieldHandle f;
  REQUIRE(ffh_field_create(3, 2, &f.ptr) == FFH_OK);
  ffh_int out = 0;
  CHECK(ffh_field_element_op(f.ptr, "mul", 3, 3, &out) == FFH_OK);
  CHECK(out == 2);  // x * x = -1 = 2
  CHECK(ffh_field_element_op(f.ptr, "add", 3, 3, &out) == FFH_OK);
  CHECK(out == 6);  // x + x = 2x
  CHECK(ffh_field_element_op(f.ptr, "neg", 1, 0, &out) == FFH_OK);
  CHECK(out == 2);
  CHECK(ffh_field_element_op(f.ptr, "inv", 0, 0, &out) == FFH_BAD_ARGUMENT);
  CHECK(ffh_field_element_op(f.ptr, "pow", 4, 8, &out) == FFH_OK);
  CHECK(out == 1);  // generator^(q-1)
  CHECK(ffh_field_element_op(f.ptr, "frobnicate", 1, 1, &out) == FFH_PARSE_ERROR);

  CHECK(ffh_field_discrete_log(f.ptr, 2, &out) == FFH_OK);
  CHECK(out == 4);
  CHECK(ffh_field_discrete_log(f.ptr, 0, &out) == FFH_BAD_ARGUMENT);
  CHECK(ffh_field_trace(f.ptr, 1, &out) == FFH_OK);
  CHECK(out == 2);
}

TEST_CASE("values round-trip through the C surface") {
  Value minus_one, i_unit, product;
  REQUIRE(ffh_value_root_of_unity(4, 2, &minus_one.ptr) == FFH_OK);
  REQUIRE(ffh_value_root_of_unity(4, 1, &i_unit.ptr) == FFH_OK);
  REQUIRE(ffh_value_op("mul", i_unit.ptr, i_unit.ptr, 0, &product.ptr) == FFH_OK);
  CHECK(ffh_value_equal(product.ptr, minus_one.ptr) == 1);

  double re = 0, im = 0;
  REQUIRE(ffh_value_to_complex(i_unit.ptr, &re, &im) == FFH_OK);
  CHECK(std::abs(re) < 1e-12);
  CHECK(std::abs(im - 1.0) < 1e-12);

  Str json;
  REQUIRE(ffh_value_to_json(minus_one.ptr, &json.ptr) == FFH_OK);
  CHECK(json.get() == R"({"m":4,"den":1,"coeffs":[-1,0]})");

  Value bad;
  CHECK(ffh_value_root_of_unity(0, 1, &bad.ptr) == FFH_BAD_ARGUMENT);
  CHECK(ffh_value_op("scalar_div", minus_one.ptr, nullptr, 0, &bad.ptr) == FFH_BAD_ARGUMENT);
}

TEST_CASE("character sums through the C surface") {
  FieldHandle f;
  REQUIRE(ffh_field_create(5, 1, &f.ptr) == FFH_OK);
  Value gauss, expected;
  REQUIRE(ffh_gauss_sum(f.ptr, 0, 1, &gauss.ptr) == FFH_OK);
  Value one;
  REQUIRE(ffh_value_root_of_unity(1, 0, &one.ptr) == FFH_OK);
  REQUIRE(ffh_value_op("neg", one.ptr, nullptr, 0, &expected.ptr) == FFH_OK);
  CHECK(ffh_value_equal(gauss.ptr, expected.ptr) == 1);

  Value chi;
  REQUIRE(ffh_mult_char_eval(f.ptr, 2, 2, &chi.ptr) == FFH_OK);
  CHECK(ffh_value_equal(chi.ptr, expected.ptr) == 1);  // chi_2(2) = -1
  Value bad;
  CHECK(ffh_mult_char_eval(f.ptr, 2, 0, &bad.ptr) == FFH_BAD_ARGUMENT);

  Value psi;
  REQUIRE(ffh_additive_char_eval(f.ptr, 1, 0, &psi.ptr) == FFH_OK);
  CHECK(ffh_value_equal(psi.ptr, one.ptr) == 1);
}

TEST_CASE("instances parse, solve and evaluate") {
  const char* doc =
      R"({"field":{"p":5,"a":1},"A":[[1,0],[0,1],[1,1]],"beta":[2,3],"lambda":[1,2,3]})";
  InstanceHandle inst;
  REQUIRE(ffh_instance_parse(doc, &inst.ptr) == FFH_OK);

  Str echo;
  REQUIRE(ffh_instance_to_json(inst.ptr, &echo.ptr) == FFH_OK);
  CHECK(echo.get().find("\"twist\":1") != std::string::npos);

  Str lattice;
  REQUIRE(ffh_solve_character_lattice(inst.ptr, &lattice.ptr) == FFH_OK);
  CHECK(lattice.get().find("\"count\":4") != std::string::npos);

  Value fa, sa;
  REQUIRE(ffh_eval_hypergeometric(inst.ptr, 0, &fa.ptr) == FFH_OK);
  REQUIRE(ffh_eval_exponential_sum(inst.ptr, 0, &sa.ptr) == FFH_OK);
  CHECK(ffh_value_equal(fa.ptr, sa.ptr) == 1);

  // Same equality under a different twist.
  Value fa2, sa2;
  REQUIRE(ffh_eval_hypergeometric(inst.ptr, 3, &fa2.ptr) == FFH_OK);
  REQUIRE(ffh_eval_exponential_sum(inst.ptr, 3, &sa2.ptr) == FFH_OK);
  CHECK(ffh_value_equal(fa2.ptr, sa2.ptr) == 1);
  CHECK(ffh_value_equal(fa2.ptr, fa.ptr) == 0);

  ffh_int rho[] = {2, 3, 0};
  Value coeff;
  REQUIRE(ffh_fourier_coefficient(inst.ptr, rho, 3, 0, &coeff.ptr) == FFH_OK);

  InstanceHandle bad;
  CHECK(ffh_instance_parse("{oops", &bad.ptr) == FFH_PARSE_ERROR);
  CHECK(ffh_instance_parse(R"({"field":{"p":5,"a":1},"A":[[1]],"beta":[0],"lambda":[0]})",
                           &bad.ptr) == FFH_BAD_ARGUMENT);
}

TEST_CASE("mccarthy values through the C surface") {
  FieldHandle f;
  REQUIRE(ffh_field_create(5, 1, &f.ptr) == FFH_OK);
  ffh_int alphas[] = {0};
  Value value;
  REQUIRE(ffh_mccarthy(f.ptr, alphas, 1, 1, &value.ptr) == FFH_OK);
  double re = 0, im = 0;
  REQUIRE(ffh_value_to_complex(value.ptr, &re, &im) == FFH_OK);
  CHECK(std::abs(re + 4.0) < 1e-9);
  CHECK(std::abs(im) < 1e-9);

  Value c;
  REQUIRE(ffh_mccarthy_normalization(f.ptr, alphas, 1, &c.ptr) == FFH_OK);

  int holds = 0;
  REQUIRE(ffh_mccarthy_specialization_check(f.ptr, alphas, 1, 2, &holds) == FFH_OK);
  CHECK(holds == 1);
  REQUIRE(ffh_twist_relation_check(f.ptr, 2, 3, &holds) == FFH_OK);
  CHECK(holds == 1);
  CHECK(ffh_twist_relation_check(f.ptr, 2, 0, &holds) == FFH_BAD_ARGUMENT);

  // The specialization instance round-trips through parse + eval and agrees
  // with C * kF_{k-1} along the hypergeometric route as well.
  Str inst_json;
  REQUIRE(ffh_mccarthy_instance(f.ptr, alphas, 1, 2, &inst_json.ptr) == FFH_OK);
  InstanceHandle inst;
  REQUIRE(ffh_instance_parse(inst_json.ptr, &inst.ptr) == FFH_OK);
  Value fa, kf, c_times_kf;
  REQUIRE(ffh_eval_hypergeometric(inst.ptr, 0, &fa.ptr) == FFH_OK);
  REQUIRE(ffh_mccarthy(f.ptr, alphas, 1, 2, &kf.ptr) == FFH_OK);
  REQUIRE(ffh_value_op("mul", c.ptr, kf.ptr, 0, &c_times_kf.ptr) == FFH_OK);
  CHECK(ffh_value_equal(fa.ptr, c_times_kf.ptr) == 1);

  Value bad;
  CHECK(ffh_mccarthy(f.ptr, alphas, 1, 0, &bad.ptr) == FFH_BAD_ARGUMENT);
}

TEST_CASE("report commands mirror exit codes") {
  const char* doc = R"({"field":{"p":5,"a":1},"A":[[1]],"beta":[0],"lambda":[1]})";
  Str report;
  CHECK(ffh_cmd_eval(doc, "both", 0, &report.ptr) == FFH_OK);
  CHECK(report.get().find("\"pass\": true") != std::string::npos);

  Str r2;
  CHECK(ffh_cmd_eval("{oops", "both", 0, &r2.ptr) == FFH_PARSE_ERROR);
  Str r3;
  CHECK(ffh_cmd_eval(R"({"field":{"p":5,"a":1},"A":[[1]],"beta":[0],"lambda":[0]})", "both", 0,
                     &r3.ptr) == FFH_BAD_ARGUMENT);
  Str r4;
  CHECK(ffh_cmd_eval(R"({"field":{"p":2,"a":25},"A":[[1]],"beta":[0],"lambda":[1]})", "both", 0,
                     &r4.ptr) == FFH_LIMIT_EXCEEDED);

  ffh_int alphas[] = {0, 0, 0};
  Str mc;
  CHECK(ffh_cmd_mccarthy(5, alphas, 3, 0, 1, &mc.ptr) == FFH_OK);
  Str csv;
  REQUIRE(ffh_report_to_csv(mc.ptr, &csv.ptr) == FFH_OK);
  CHECK(csv.get().rfind("t,re,im,check\n", 0) == 0);
}

TEST_CASE("verify reports are deterministic for a fixed seed") {
  Str first, second;
  CHECK(ffh_cmd_verify("gauss", 9, 7, &first.ptr) == FFH_OK);
  CHECK(ffh_cmd_verify("gauss", 9, 7, &second.ptr) == FFH_OK);
  CHECK(without_elapsed(first.get()) == without_elapsed(second.get()));
  CHECK_FALSE(first.get().empty());

  Str bad;
  CHECK(ffh_cmd_verify("bogus", 9, 7, &bad.ptr) == FFH_PARSE_ERROR);
}
