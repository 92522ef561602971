/* Copyright 2026 The ffhyper Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Plain C consumer: the header must compile as C and the basic flow must
 * work without any C++ at the call site. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "ffhyper.h"

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    fprintf(stderr, "c_smoke: FAILED: %s\n", what);
    ++failures;
  }
}

int main(void) {
  ffh_field* field = NULL;
  expect(ffh_field_create(3, 2, &field) == FFH_OK, "field create");
  expect(ffh_field_q(field) == 9, "field size");

  ffh_int out = 0;
  expect(ffh_field_element_op(field, "mul", 3, 3, &out) == FFH_OK && out == 2, "x*x = 2");
  expect(ffh_field_discrete_log(field, 2, &out) == FFH_OK && out == 4, "log 2 = 4");

  ffh_value* gauss = NULL;
  expect(ffh_gauss_sum(field, 0, 1, &gauss) == FFH_OK, "gauss sum");
  double re = 0.0, im = 0.0;
  expect(ffh_value_to_complex(gauss, &re, &im) == FFH_OK, "complex view");
  expect(fabs(re + 1.0) < 1e-9 && fabs(im) < 1e-9, "g(trivial) = -1");

  char* report = NULL;
  ffh_status status = ffh_cmd_eval(
      "{\"field\":{\"p\":3,\"a\":2},\"A\":[[1,0],[0,1]],\"beta\":[3,5],\"lambda\":[4,7]}",
      "both", 0, &report);
  expect(status == FFH_OK, "cmd_eval status");
  expect(report != NULL && strstr(report, "\"pass\": true") != NULL, "equality check passes");

  expect(ffh_field_create(3, 2, NULL) == FFH_BAD_ARGUMENT, "null out rejected");

  ffh_string_free(report);
  ffh_value_free(gauss);
  ffh_field_free(field);
  return failures == 0 ? 0 : 1;
}
