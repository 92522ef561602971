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

#include "ffhyper/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ffhyper {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Guard against runaway growth inside the 128-bit reduction accumulators.
const i128 kAccumulatorBound = i128(1) << 100;

// Exact division of integer polynomials (constant term first); divisor monic.
std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& div) {
  const i64 dn = static_cast<i64>(num.size()) - 1;
  const i64 dd = static_cast<i64>(div.size()) - 1;
  std::vector<i64> quot(dn - dd + 1, 0);
  for (i64 i = dn; i >= dd; --i) {
    i64 c = num[i];
    if (c != 0) {
      quot[i - dd] = c;
      for (i64 j = 0; j <= dd; ++j) {
        num[i - dd + j] -= checked_mul(c, div[j], "cyclotomic division");
      }
    }
  }
  for (i64 c : num) {
    if (c != 0) throw std::logic_error("cyclotomic: division was not exact");
  }
  return quot;
}

std::vector<i64> cyclotomic_polynomial(i64 m) {
  std::map<i64, std::vector<i64>> table;
  for (i64 d : divisors(m)) {
    std::vector<i64> poly(d + 1, 0);  // x^d - 1
    poly[0] = -1;
    poly[d] = 1;
    for (i64 e : divisors(d)) {
      if (e != d) poly = poly_div_exact(std::move(poly), table[e]);
    }
    table[d] = std::move(poly);
  }
  return table[m];
}

}  // namespace

CyclotomicBasis::CyclotomicBasis(i64 m, std::vector<i64> poly)
    : m_(m), phi_(static_cast<i64>(poly.size()) - 1), poly_(std::move(poly)) {}

std::shared_ptr<const CyclotomicBasis> CyclotomicBasis::get(i64 m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: conductor must be >= 1");
  if (m > kMaxConductor) {
    throw limit_error("cyclotomic: conductor exceeds the configured bound");
  }
  static std::mutex mutex;
  static std::map<i64, std::shared_ptr<const CyclotomicBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto basis = std::shared_ptr<const CyclotomicBasis>(
      new CyclotomicBasis(m, cyclotomic_polynomial(m)));
  cache.emplace(m, basis);
  return basis;
}

std::vector<i64> CyclotomicBasis::reduce(const std::vector<i128>& counts) const {
  // Wrap exponents mod m (zeta_m^m = 1), then take the remainder mod Phi_m.
  std::vector<i128> rem(m_, 0);
  for (size_t e = 0; e < counts.size(); ++e) {
    rem[e % m_] += counts[e];
  }
  for (i64 j = m_ - 1; j >= phi_; --j) {
    i128 c = rem[j];
    if (c == 0) continue;
    rem[j] = 0;
    for (i64 i = 0; i < phi_; ++i) {
      rem[j - phi_ + i] -= c * i128(poly_[i]);
      if (rem[j - phi_ + i] > kAccumulatorBound || rem[j - phi_ + i] < -kAccumulatorBound) {
        throw std::overflow_error("cyclotomic: reduction accumulator overflow");
      }
    }
  }
  std::vector<i64> out(phi_);
  for (i64 i = 0; i < phi_; ++i) {
    out[i] = checked_narrow(rem[i], "cyclotomic coefficient");
  }
  return out;
}

CycValue::CycValue(i64 m, std::vector<i64> coeffs, i64 den)
    : m_(m), coeffs_(std::move(coeffs)), den_(den) {
  normalize();
}

void CycValue::normalize() {
  if (den_ == 0) throw std::invalid_argument("cyclotomic: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (i64& c : coeffs_) c = -c;
  }
  i64 content = 0;
  for (i64 c : coeffs_) content = std::gcd(content, c);
  if (content == 0) {
    den_ = 1;  // canonical zero
    return;
  }
  i64 g = std::gcd(content, den_);
  if (g > 1) {
    den_ /= g;
    for (i64& c : coeffs_) c /= g;
  }
}

CycValue CycValue::integer(i64 v) { return CycValue(1, {v}, 1); }

CycValue CycValue::rational(i64 num, i64 den) { return CycValue(1, {num}, den); }

CycValue CycValue::zero(i64 m) {
  auto basis = CyclotomicBasis::get(m);
  return CycValue(m, std::vector<i64>(basis->degree(), 0), 1);
}

CycValue CycValue::root_of_unity(i64 m, i64 k) {
  if (m < 1) throw std::invalid_argument("cyclotomic: conductor must be >= 1");
  auto basis = CyclotomicBasis::get(m);
  std::vector<i128> counts(m, 0);
  counts[mod_reduce(k, m)] = 1;
  return CycValue(m, basis->reduce(counts), 1);
}

CycValue CycValue::from_exponent_counts(i64 m, const std::vector<i64>& counts, i64 den) {
  auto basis = CyclotomicBasis::get(m);
  std::vector<i128> wide(counts.begin(), counts.end());
  return CycValue(m, basis->reduce(wide), den);
}

bool CycValue::is_zero() const {
  for (i64 c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<std::pair<i64, i64>> CycValue::as_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return std::make_pair(coeffs_.empty() ? 0 : coeffs_[0], den_);
}

CycValue CycValue::lifted_to(i64 conductor) const {
  if (conductor == m_) return *this;
  if (conductor % m_ != 0) {
    throw std::invalid_argument("cyclotomic: lift target must be a multiple of the conductor");
  }
  auto basis = CyclotomicBasis::get(conductor);
  const i64 stride = conductor / m_;
  std::vector<i128> counts(conductor, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    counts[i * stride] += coeffs_[i];
  }
  return CycValue(conductor, basis->reduce(counts), den_);
}

CycValue CycValue::conjugate() const {
  auto basis = CyclotomicBasis::get(m_);
  std::vector<i128> counts(m_, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    counts[(m_ - static_cast<i64>(i)) % m_] += coeffs_[i];
  }
  return CycValue(m_, basis->reduce(counts), den_);
}

CycValue CycValue::times_root(i64 e) const {
  auto basis = CyclotomicBasis::get(m_);
  const i64 shift = mod_reduce(e, m_);
  std::vector<i128> counts(m_, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    counts[(i + shift) % m_] += coeffs_[i];
  }
  return CycValue(m_, basis->reduce(counts), den_);
}

CycValue CycValue::operator-() const {
  CycValue out = *this;
  for (i64& c : out.coeffs_) c = -c;
  return out;
}

CycValue CycValue::operator+(const CycValue& other) const {
  if (m_ != other.m_) {
    i64 l = std::lcm(m_, other.m_);
    return lifted_to(l) + other.lifted_to(l);
  }
  i64 g = std::gcd(den_, other.den_);
  i64 den = checked_mul(den_ / g, other.den_, "cyclotomic denominator");
  i64 ls = den / den_, rs = den / other.den_;
  std::vector<i64> coeffs(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs[i] = checked_narrow(i128(coeffs_[i]) * ls + i128(other.coeffs_[i]) * rs,
                               "cyclotomic addition");
  }
  return CycValue(m_, std::move(coeffs), den);
}

CycValue CycValue::operator-(const CycValue& other) const { return *this + (-other); }

CycValue CycValue::operator*(const CycValue& other) const {
  if (m_ != other.m_) {
    i64 l = std::lcm(m_, other.m_);
    return lifted_to(l) * other.lifted_to(l);
  }
  auto basis = CyclotomicBasis::get(m_);
  std::vector<i128> conv(2 * coeffs_.size(), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      conv[i + j] += i128(coeffs_[i]) * i128(other.coeffs_[j]);
    }
  }
  return CycValue(m_, basis->reduce(conv), checked_mul(den_, other.den_, "cyclotomic product"));
}

CycValue& CycValue::operator+=(const CycValue& other) { return *this = *this + other; }

CycValue& CycValue::operator*=(const CycValue& other) { return *this = *this * other; }

CycValue CycValue::scalar_mul(i64 s) const {
  std::vector<i64> coeffs(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs[i] = checked_mul(coeffs_[i], s, "cyclotomic scalar");
  }
  return CycValue(m_, std::move(coeffs), den_);
}

CycValue CycValue::scalar_div(i64 s) const {
  if (s == 0) throw std::invalid_argument("cyclotomic: division by zero");
  return CycValue(m_, coeffs_, checked_mul(den_, s, "cyclotomic scalar divisor"));
}

bool CycValue::operator==(const CycValue& other) const {
  if (m_ != other.m_) {
    i64 l = std::lcm(m_, other.m_);
    return lifted_to(l) == other.lifted_to(l);
  }
  return den_ == other.den_ && coeffs_ == other.coeffs_;
}

std::pair<double, double> CycValue::to_complex() const {
  double re = 0.0, im = 0.0;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    double w = static_cast<double>(coeffs_[i]) / static_cast<double>(den_);
    double angle = kTwoPi * static_cast<double>(i) / static_cast<double>(m_);
    re += w * std::cos(angle);
    im += w * std::sin(angle);
  }
  return {re, im};
}

}  // namespace ffhyper
