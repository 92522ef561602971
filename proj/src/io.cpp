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

#include "ffhyper/io.hpp"

namespace ffhyper {
namespace {

i64 require_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw parse_error(std::string("instance: missing or non-integer field '") + key + "'");
  }
  return doc[key].get<i64>();
}

std::vector<i64> require_int_array(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw parse_error(std::string("instance: missing or non-array field '") + key + "'");
  }
  std::vector<i64> out;
  for (const auto& v : doc[key]) {
    if (!v.is_number_integer()) {
      throw parse_error(std::string("instance: non-integer entry in '") + key + "'");
    }
    out.push_back(v.get<i64>());
  }
  return out;
}

}  // namespace

Json field_to_json(const Field& field) {
  Json out;
  out["p"] = field.p();
  out["a"] = field.a();
  out["modulus"] = field.modulus();
  out["generator"] = field.generator().coeffs();
  return out;
}

Json value_to_json(const CycValue& value) {
  Json out;
  out["m"] = value.conductor();
  out["den"] = value.denominator();
  out["coeffs"] = value.coefficients();
  return out;
}

Json complex_view_json(const CycValue& value) {
  auto [re, im] = value.to_complex();
  return Json::array({re, im});
}

Json solution_set_to_json(const CharSolutionSet& set) {
  Json out;
  out["count"] = set.count();
  if (set.particular().has_value()) {
    out["particular"] = *set.particular();
  }
  Json kernel = Json::array();
  for (const auto& [gen, order] : set.generators()) {
    Json entry;
    entry["generator"] = gen;
    entry["order"] = order;
    kernel.push_back(std::move(entry));
  }
  out["kernel"] = std::move(kernel);
  return out;
}

ParsedInstance parse_instance(const Json& doc, i64 q_limit) {
  if (!doc.is_object()) throw parse_error("instance: document must be an object");
  if (!doc.contains("field") || !doc["field"].is_object()) {
    throw parse_error("instance: missing 'field' object");
  }
  const i64 p = require_int(doc["field"], "p");
  const i64 a = require_int(doc["field"], "a");
  auto field = Field::build(p, a, q_limit);

  if (!doc.contains("A") || !doc["A"].is_array() || doc["A"].empty()) {
    throw parse_error("instance: missing or empty 'A' matrix");
  }
  std::vector<std::vector<i64>> rows;
  for (const auto& row : doc["A"]) {
    if (!row.is_array() || row.empty()) throw parse_error("instance: 'A' rows must be nonempty arrays");
    std::vector<i64> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw parse_error("instance: 'A' entries must be integers");
      r.push_back(v.get<i64>());
    }
    if (!rows.empty() && rows.front().size() != r.size()) {
      throw parse_error("instance: 'A' rows must all have the same width");
    }
    rows.push_back(std::move(r));
  }

  std::vector<i64> beta = require_int_array(doc, "beta");
  if (beta.size() != rows.front().size()) {
    throw parse_error("instance: 'beta' length must match the 'A' row width");
  }

  std::vector<i64> lambda = require_int_array(doc, "lambda");
  if (lambda.size() != rows.size()) {
    throw parse_error("instance: 'lambda' length must match the number of 'A' rows");
  }
  for (i64 enc : lambda) {
    if (enc < 0 || enc >= field->q()) throw parse_error("instance: lambda encoding out of range");
    if (enc == 0) throw std::invalid_argument("instance: lambda entries must be nonzero");
  }

  i64 twist = 1;
  if (doc.contains("twist")) {
    if (!doc["twist"].is_number_integer()) throw parse_error("instance: 'twist' must be an integer");
    twist = doc["twist"].get<i64>();
    if (twist < 0 || twist >= field->q()) throw parse_error("instance: twist encoding out of range");
    if (twist == 0) throw std::invalid_argument("instance: twist must be nonzero");
  }

  ParsedInstance parsed{HypergeometricInstance::create(field, rows, beta),
                        Lambda::create(*field, lambda), twist};
  return parsed;
}

ParsedInstance parse_instance_text(const std::string& text, i64 q_limit) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw parse_error("instance: invalid JSON");
  return parse_instance(doc, q_limit);
}

Json instance_to_json(const ParsedInstance& parsed) {
  const auto& inst = parsed.instance;
  Json out;
  out["field"] = {{"p", inst.field->p()}, {"a", inst.field->a()}};
  out["A"] = inst.rows;
  out["beta"] = inst.beta;
  out["lambda"] = parsed.lambda.encodings;
  out["twist"] = parsed.twist_encoding;
  return out;
}

}  // namespace ffhyper
