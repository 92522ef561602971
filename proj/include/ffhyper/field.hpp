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

#ifndef FFHYPER_FIELD_HPP_
#define FFHYPER_FIELD_HPP_

#include <memory>
#include <vector>

#include "ffhyper/common.hpp"

namespace ffhyper {

// Element of F_{p^a} as a coefficient vector of length a over Z/p,
// constant term first.  Arithmetic lives on Field.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<i64>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (i64 c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool operator==(const FieldElement&) const = default;

 private:
  std::vector<i64> coeffs_;
};

// Immutable descriptor of F_q, q = p^a: the minimal monic irreducible modulus,
// the minimal generator of F_q^x, and complete log / power / trace tables.
// Construction is deterministic; two builds with equal (p, a) are identical.
class Field : public std::enable_shared_from_this<Field> {
 public:
  // Builds the field descriptor.  Throws std::invalid_argument for non-prime p
  // or a < 1, limit_error when p^a exceeds q_limit.
  static std::shared_ptr<const Field> build(i64 p, i64 a, i64 q_limit = kDefaultQLimit);

  i64 p() const { return p_; }
  i64 a() const { return a_; }
  i64 q() const { return q_; }
  i64 unit_order() const { return q_ - 1; }
  // Conductor of the value field Q(zeta_m) holding all character sums.
  i64 conductor() const { return p_ * (q_ - 1); }

  // Monic modulus polynomial, length a+1, constant term first.
  const std::vector<i64>& modulus() const { return modulus_; }

  FieldElement zero() const { return element_from_encoding(0); }
  FieldElement one() const { return element_from_encoding(1); }
  FieldElement generator() const { return element_from_encoding(generator_enc_); }
  i64 generator_encoding() const { return generator_enc_; }

  // Integer encoding sum c_i p^i <-> coefficient vector.
  i64 encoding(const FieldElement& x) const;
  FieldElement element_from_encoding(i64 enc) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement inv(const FieldElement& x) const;  // throws on zero
  // x^e with e taken mod (q-1) for x != 0; 0^e = 0 for e > 0, 1 for e = 0,
  // error for e < 0.
  FieldElement pow(const FieldElement& x, i64 e) const;

  // Exponent j with generator^j = x; throws on zero.
  i64 discrete_log(const FieldElement& x) const { return log_of(encoding(x)); }
  // Trace to F_p: sum of x^{p^i} for i < a, as a residue mod p.
  i64 trace(const FieldElement& x) const { return trace_of(encoding(x)); }

  // Encoding-level fast paths for the sum kernels.
  i64 pow_of_generator(i64 j) const { return pow_enc_[mod_reduce(j, q_ - 1)]; }
  i64 log_of(i64 enc) const;
  i64 trace_of(i64 enc) const { return trace_enc_[enc]; }
  i64 add_enc(i64 x, i64 y) const;
  i64 mul_enc(i64 x, i64 y) const;
  i64 neg_enc(i64 x) const;

  bool identical_to(const Field& other) const;

 private:
  Field() = default;

  i64 p_ = 0;
  i64 a_ = 0;
  i64 q_ = 0;
  std::vector<i64> modulus_;
  i64 generator_enc_ = 0;
  std::vector<i64> pow_enc_;    // pow_enc_[j] = encoding of generator^j, j < q-1
  std::vector<i64> log_enc_;    // log_enc_[enc] = j, log_enc_[0] = -1
  std::vector<i64> trace_enc_;  // trace_enc_[enc] in [0, p)
};

}  // namespace ffhyper

#endif  // FFHYPER_FIELD_HPP_
