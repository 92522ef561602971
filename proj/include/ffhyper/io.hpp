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

#ifndef FFHYPER_IO_HPP_
#define FFHYPER_IO_HPP_

#include <string>

#include <json.hpp>

#include "ffhyper/hypergeometric.hpp"

namespace ffhyper {

using Json = nlohmann::ordered_json;

// {p, a, modulus: [c0..ca], generator: [c0..c_{a-1}]}
Json field_to_json(const Field& field);

// {m, den, coeffs: [...]}
Json value_to_json(const CycValue& value);
// [re, im]
Json complex_view_json(const CycValue& value);

// {count, particular: [...]?, kernel: [{generator, order}...]}
Json solution_set_to_json(const CharSolutionSet& set);

// Instance file: {field: {p, a}, A: [[signed ints]], beta: [exponents],
// lambda: [element encodings], twist: element encoding (optional)}.
struct ParsedInstance {
  HypergeometricInstance instance;
  Lambda lambda;
  i64 twist_encoding = 1;
};

// Throws parse_error for structural problems, std::invalid_argument for a
// zero lambda entry or zero twist, limit_error when q exceeds q_limit.
ParsedInstance parse_instance(const Json& doc, i64 q_limit);
ParsedInstance parse_instance_text(const std::string& text, i64 q_limit);

// Echo of the parsed instance with reduced entries and the resolved twist.
Json instance_to_json(const ParsedInstance& parsed);

}  // namespace ffhyper

#endif  // FFHYPER_IO_HPP_
