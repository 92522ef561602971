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

#ifndef FFHYPER_CYCLOTOMIC_HPP_
#define FFHYPER_CYCLOTOMIC_HPP_

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ffhyper/common.hpp"

namespace ffhyper {

// Reduction data for Q(zeta_m): the m-th cyclotomic polynomial, computed by
// iterated exact division of x^m - 1 by the Phi_d of proper divisors d.
// Instances are cached per conductor and immutable.
class CyclotomicBasis {
 public:
  static std::shared_ptr<const CyclotomicBasis> get(i64 m);

  i64 conductor() const { return m_; }
  i64 degree() const { return phi_; }
  // Phi_m, monic, length degree()+1, constant term first.
  const std::vector<i64>& polynomial() const { return poly_; }

  // Folds counts-by-zeta-exponent (indices taken mod m) into the reduced
  // power basis; the length-phi(m) result is the canonical coefficient vector.
  std::vector<i64> reduce(const std::vector<i128>& counts) const;

 private:
  CyclotomicBasis(i64 m, std::vector<i64> poly);

  i64 m_;
  i64 phi_;
  std::vector<i64> poly_;
};

// Exact element of Q(zeta_m): integer coefficients in the power basis reduced
// mod Phi_m over a single positive denominator, always stored normalized
// (content coprime to denominator), so equality is coefficient-wise.
// Operands at different conductors are lifted to the lcm.
class CycValue {
 public:
  CycValue() : CycValue(integer(0)) {}

  static CycValue integer(i64 v);
  static CycValue rational(i64 num, i64 den);
  static CycValue zero(i64 m);
  // zeta_m^k; k may be any integer (taken mod m).  Throws on m < 1.
  static CycValue root_of_unity(i64 m, i64 k);
  // Sum of counts[e] * zeta_m^e over e, divided by den.
  static CycValue from_exponent_counts(i64 m, const std::vector<i64>& counts, i64 den = 1);

  i64 conductor() const { return m_; }
  i64 denominator() const { return den_; }
  const std::vector<i64>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  // The value as num/den when it is rational (constant in the power basis).
  std::optional<std::pair<i64, i64>> as_rational() const;

  CycValue lifted_to(i64 conductor) const;  // requires m | conductor
  CycValue conjugate() const;               // zeta_m -> zeta_m^{-1}
  // Multiplication by zeta_m^e (cheaper than a full product).
  CycValue times_root(i64 e) const;

  CycValue operator-() const;
  CycValue operator+(const CycValue& other) const;
  CycValue operator-(const CycValue& other) const;
  CycValue operator*(const CycValue& other) const;
  CycValue& operator+=(const CycValue& other);
  CycValue& operator*=(const CycValue& other);

  CycValue scalar_mul(i64 s) const;
  CycValue scalar_div(i64 s) const;  // throws on s = 0

  // Equality lifts both sides to the common conductor first.
  bool operator==(const CycValue& other) const;
  bool operator!=(const CycValue& other) const { return !(*this == other); }

  // Floating-point view sum (n_i/den) e^{2 pi i k/m}, as (re, im).
  std::pair<double, double> to_complex() const;

 private:
  CycValue(i64 m, std::vector<i64> coeffs, i64 den);
  void normalize();

  i64 m_ = 1;
  std::vector<i64> coeffs_;
  i64 den_ = 1;
};

}  // namespace ffhyper

#endif  // FFHYPER_CYCLOTOMIC_HPP_
