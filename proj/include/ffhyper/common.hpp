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

#ifndef FFHYPER_COMMON_HPP_
#define FFHYPER_COMMON_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffhyper {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128;

// Largest q = p^a a field descriptor will accept unless the caller raises the
// bound explicitly (log/trace tables are q entries each).
inline constexpr i64 kDefaultQLimit = i64{1} << 20;

// Largest conductor for which a cyclotomic basis is constructed.
inline constexpr i64 kMaxConductor = i64{1} << 20;

// Structurally invalid input (bad JSON, wrong shapes, unknown keys).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input exceeds a configured size bound (q or conductor too large).
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline i64 checked_narrow(i128 v, const char* what) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
  }
  return static_cast<i64>(v);
}

inline i64 checked_mul(i64 a, i64 b, const char* what) {
  return checked_narrow(i128(a) * i128(b), what);
}

// Reduce v into [0, m).
inline i64 mod_reduce(i64 v, i64 m) {
  i64 r = v % m;
  return r < 0 ? r + m : r;
}

struct ExtendedGcd {
  i64 g;  // gcd(a, b) >= 0
  i64 x;  // a*x + b*y = g
  i64 y;
};

inline ExtendedGcd extended_gcd(i64 a, i64 b) {
  if (b == 0) {
    return a < 0 ? ExtendedGcd{-a, -1, 0} : ExtendedGcd{a, 1, 0};
  }
  ExtendedGcd sub = extended_gcd(b, a % b);
  return ExtendedGcd{sub.g, sub.y, sub.x - (a / b) * sub.y};
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
inline i64 mod_inverse(i64 a, i64 m) {
  if (m == 1) return 0;
  ExtendedGcd e = extended_gcd(mod_reduce(a, m), m);
  if (e.g != 1) {
    throw std::invalid_argument("mod_inverse: arguments are not coprime");
  }
  return mod_reduce(e.x, m);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Distinct prime divisors of n >= 1, ascending.
inline std::vector<i64> distinct_prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// All positive divisors of n, ascending.
inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline i64 euler_phi(i64 n) {
  i64 result = n;
  for (i64 p : distinct_prime_factors(n)) {
    result -= result / p;
  }
  return result;
}

// Deterministic cross-platform generator (splitmix64); std distributions are
// not portable across standard libraries, so seeded suites use this directly.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound); bound >= 1.
  i64 below(i64 bound) { return static_cast<i64>(next() % static_cast<u64>(bound)); }

  // Uniform value in [lo, hi] inclusive.
  i64 between(i64 lo, i64 hi) { return lo + below(hi - lo + 1); }

 private:
  u64 state_;
};

}  // namespace ffhyper

#endif  // FFHYPER_COMMON_HPP_
