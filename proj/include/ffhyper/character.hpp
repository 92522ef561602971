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

#ifndef FFHYPER_CHARACTER_HPP_
#define FFHYPER_CHARACTER_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "ffhyper/cyclotomic.hpp"
#include "ffhyper/field.hpp"

namespace ffhyper {

// Multiplicative character chi_k of F_q^x, indexed by its exponent k relative
// to the canonical generator: chi_k(g^j) = zeta_{q-1}^{kj}.  chi_0 is trivial.
// Values are returned at the single conductor m = p(q-1).
class MultChar {
 public:
  MultChar(std::shared_ptr<const Field> field, i64 exponent)
      : field_(std::move(field)), k_(mod_reduce(exponent, field_->unit_order())) {}

  const std::shared_ptr<const Field>& field() const { return field_; }
  i64 exponent() const { return k_; }
  bool is_trivial() const { return k_ == 0; }

  MultChar conjugate() const { return MultChar(field_, -k_); }
  MultChar operator*(const MultChar& other) const { return MultChar(field_, k_ + other.k_); }
  MultChar power(i64 e) const { return MultChar(field_, checked_mul(k_, mod_reduce(e, field_->unit_order()), "character power")); }

  // chi(x); throws on x = 0 (the character is undefined there).
  CycValue operator()(const FieldElement& x) const { return eval_encoding(field_->encoding(x)); }
  CycValue eval_encoding(i64 enc) const;

 private:
  std::shared_ptr<const Field> field_;
  i64 k_;
};

// Additive character Psi_c(x) = zeta_p^{Tr(c x)} selected by c != 0; c = 1 is
// the standard choice.
class AddCharTwist {
 public:
  explicit AddCharTwist(std::shared_ptr<const Field> field, i64 c_encoding = 1)
      : field_(std::move(field)), c_enc_(c_encoding) {
    if (c_enc_ <= 0 || c_enc_ >= field_->q()) {
      throw std::invalid_argument("additive character: twist element must be nonzero");
    }
  }

  const std::shared_ptr<const Field>& field() const { return field_; }
  i64 c_encoding() const { return c_enc_; }
  FieldElement c() const { return field_->element_from_encoding(c_enc_); }

  CycValue operator()(const FieldElement& x) const { return eval_encoding(field_->encoding(x)); }
  CycValue eval_encoding(i64 enc) const;

 private:
  std::shared_ptr<const Field> field_;
  i64 c_enc_;
};

// Gauss sum g(chi) = sum over x != 0 of chi(x) Psi_c(x), exact in Q(zeta_m).
CycValue gauss_sum(const MultChar& chi, const AddCharTwist& twist);

// Whether g'(chi) = conj(chi)(c) g(chi) holds for the twist by c, where g'
// uses Psi_c and g the standard Psi.  Exists as a first-class oracle; the
// change of variable x -> c^{-1} x makes it hold identically.
bool twist_relation_check(const MultChar& chi, const FieldElement& c);

// Memoized Gauss sums keyed by (character exponent, twist encoding).  Fill is
// idempotent; safe for concurrent readers.
class GaussSumCache {
 public:
  explicit GaussSumCache(std::shared_ptr<const Field> field) : field_(std::move(field)) {}

  const std::shared_ptr<const Field>& field() const { return field_; }
  const CycValue& get(i64 chi_exponent, i64 twist_encoding) const;

 private:
  std::shared_ptr<const Field> field_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<i64, i64>, CycValue> cache_;
};

}  // namespace ffhyper

#endif  // FFHYPER_CHARACTER_HPP_
