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

#include "ffhyper/character.hpp"

namespace ffhyper {

CycValue MultChar::eval_encoding(i64 enc) const {
  const i64 j = field_->log_of(enc);  // rejects zero
  const i64 m = field_->conductor();
  // zeta_{q-1}^{kj} = zeta_m^{p k j}
  i64 e = mod_reduce(field_->p() * mod_reduce(k_ * j, field_->unit_order()), m);
  return CycValue::root_of_unity(m, e);
}

CycValue AddCharTwist::eval_encoding(i64 enc) const {
  const i64 m = field_->conductor();
  const i64 tr = field_->trace_of(field_->mul_enc(c_enc_, enc));
  // zeta_p^{tr} = zeta_m^{(q-1) tr}
  return CycValue::root_of_unity(m, mod_reduce(field_->unit_order() * tr, m));
}

CycValue gauss_sum(const MultChar& chi, const AddCharTwist& twist) {
  const auto& field = *chi.field();
  const i64 q = field.q();
  const i64 unit = q - 1;
  const i64 m = field.conductor();
  const i64 k = chi.exponent();
  const i64 log_c = field.log_of(twist.c_encoding());
  CyclotomicBasis::get(m);  // enforce the conductor cap before allocating

  // Walk x = generator^j; chi contributes zeta_m^{pkj}, Psi contributes
  // zeta_m^{(q-1) Tr(c x)}.  Accumulate exponent counts, fold once.
  std::vector<i64> counts(m, 0);
  i64 chi_exp = 0;
  const i64 chi_step = mod_reduce(field.p() * k, m);
  for (i64 j = 0; j < unit; ++j) {
    const i64 tr = field.trace_of(field.pow_of_generator(log_c + j));
    counts[mod_reduce(chi_exp + unit * tr, m)] += 1;
    chi_exp = (chi_exp + chi_step) % m;
  }
  return CycValue::from_exponent_counts(m, counts);
}

bool twist_relation_check(const MultChar& chi, const FieldElement& c) {
  const auto& field = chi.field();
  if (c.is_zero()) throw std::invalid_argument("twist relation: c must be nonzero");
  AddCharTwist twisted(field, field->encoding(c));
  AddCharTwist standard(field, 1);
  CycValue lhs = gauss_sum(chi, twisted);
  CycValue rhs = chi.conjugate().eval_encoding(field->encoding(c)) * gauss_sum(chi, standard);
  return lhs == rhs;
}

const CycValue& GaussSumCache::get(i64 chi_exponent, i64 twist_encoding) const {
  const i64 k = mod_reduce(chi_exponent, field_->unit_order());
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(k, twist_encoding);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    it = cache_.emplace(key, gauss_sum(MultChar(field_, k), AddCharTwist(field_, twist_encoding))).first;
  }
  return it->second;
}

}  // namespace ffhyper
