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

#include "ffhyper/linalg.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace ffhyper;

namespace {

// Triple product U*M*V computed in 128-bit arithmetic (the verification can
// need more headroom than the results themselves).
bool transforms_reproduce_diagonal(const SmithDecomposition& snf, const IntMatrix& m) {
  const size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<i128>> um(rows, std::vector<i128>(cols, 0));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < rows; ++k) {
      if (snf.u[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) um[i][j] += i128(snf.u[i][k]) * i128(m[k][j]);
    }
  }
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      i128 acc = 0;
      for (size_t k = 0; k < cols; ++k) acc += um[i][k] * i128(snf.v[k][j]);
      if (acc != i128(snf.d[i][j])) return false;
    }
  }
  return true;
}

// Determinant mod a prime via Gaussian elimination.
i64 det_mod(const IntMatrix& m, i64 p) {
  const i64 n = static_cast<i64>(m.size());
  std::vector<std::vector<i64>> a(n, std::vector<i64>(n, 0));
  for (i64 i = 0; i < n; ++i) {
    for (i64 j = 0; j < n; ++j) a[i][j] = mod_reduce(m[i][j], p);
  }
  i64 det = 1;
  for (i64 c = 0; c < n; ++c) {
    i64 pivot = -1;
    for (i64 r = c; r < n; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = mod_reduce(-det, p);
    }
    det = static_cast<i64>(i128(det) * a[c][c] % p);
    i64 inv = mod_inverse(a[c][c], p);
    for (i64 r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      i64 f = static_cast<i64>(i128(a[r][c]) * inv % p);
      for (i64 k = c; k < n; ++k) {
        a[r][k] = static_cast<i64>(((i128(a[r][k]) - i128(f) * a[c][k]) % p + p) % p);
      }
    }
  }
  return det;
}

// Unimodularity oracle: det = +-1 exactly, certified by enough 31-bit primes
// to exceed twice the Hadamard bound of the matrix.
bool is_unimodular(const IntMatrix& m) {
  const i64 primes[] = {2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
                        2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
                        2147483423, 2147483399};
  long double hadamard = 1.0L;
  for (const auto& row : m) {
    long double norm = 0.0L;
    for (i64 v : row) norm += static_cast<long double>(v) * static_cast<long double>(v);
    hadamard *= std::sqrt(norm) + 1.0L;
  }
  long double coverage = 1.0L;
  for (i64 p : primes) {
    i64 d = det_mod(m, p);
    if (d != 1 && d != p - 1) return false;
    coverage *= static_cast<long double>(p);
    if (coverage > 2.0L * hadamard) return true;
  }
  return false;  // bound not covered; treat as failure
}

// Brute-force solver over (Z/Q)^cols.
std::set<std::vector<i64>> brute_solutions(const IntMatrix& m, const std::vector<i64>& b, i64 q) {
  const i64 rows = static_cast<i64>(m.size());
  const i64 cols = static_cast<i64>(m[0].size());
  i64 total = 1;
  for (i64 i = 0; i < cols; ++i) total *= q;
  std::set<std::vector<i64>> out;
  for (i64 idx = 0; idx < total; ++idx) {
    std::vector<i64> c(cols);
    i64 rem = idx;
    for (i64 i = 0; i < cols; ++i) {
      c[i] = rem % q;
      rem /= q;
    }
    bool ok = true;
    for (i64 r = 0; r < rows && ok; ++r) {
      i64 acc = 0;
      for (i64 i = 0; i < cols; ++i) acc = mod_reduce(acc + m[r][i] * c[i], q);
      ok = acc == mod_reduce(b[r], q);
    }
    if (ok) out.insert(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("smith normal form of simple matrices") {
  auto id = smith_normal_form(identity_matrix(3));
  CHECK(id.d == identity_matrix(3));

  auto snf = smith_normal_form({{2, 4}, {6, 8}});
  CHECK(snf.d[0][0] == 2);
  CHECK(snf.d[1][1] == 4);
  CHECK(snf.d[0][1] == 0);
  CHECK(snf.d[1][0] == 0);

  auto zero = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(zero.d == IntMatrix{{0, 0}, {0, 0}});
}

TEST_CASE("smith normal form properties on random matrices") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const i64 rows = rng.between(1, 5);
    const i64 cols = rng.between(1, 5);
    const i64 magnitude = trial < 60 ? 9 : 50;
    IntMatrix m(rows, std::vector<i64>(cols, 0));
    for (auto& row : m) {
      for (i64& v : row) v = rng.between(-magnitude, magnitude);
    }
    auto snf = smith_normal_form(m);

    CHECK(transforms_reproduce_diagonal(snf, m));
    CHECK(is_unimodular(snf.u));
    CHECK(is_unimodular(snf.v));

    const i64 nmin = std::min(rows, cols);
    for (i64 i = 0; i < rows; ++i) {
      for (i64 j = 0; j < cols; ++j) {
        if (i != j) CHECK(snf.d[i][j] == 0);
      }
    }
    for (i64 i = 0; i < nmin; ++i) CHECK(snf.d[i][i] >= 0);
    for (i64 i = 0; i + 1 < nmin; ++i) {
      if (snf.d[i + 1][i + 1] != 0) {
        REQUIRE(snf.d[i][i] != 0);
        CHECK(snf.d[i + 1][i + 1] % snf.d[i][i] == 0);
      }
    }
  }
}

TEST_CASE("modular solver matches exhaustive enumeration") {
  SplitMix64 rng(515);
  for (i64 q : {2, 4, 6, 12}) {
    for (int trial = 0; trial < 40; ++trial) {
      const i64 rows = rng.between(1, 3);
      const i64 cols = rng.between(1, 3);
      IntMatrix m(rows, std::vector<i64>(cols, 0));
      for (auto& row : m) {
        for (i64& v : row) v = rng.below(q);
      }
      std::vector<i64> b(rows);
      for (i64& v : b) v = rng.below(q);

      auto expected = brute_solutions(m, b, q);
      auto solved = solve_modular_system(m, b, q);
      CHECK(solved.count() == static_cast<i64>(expected.size()));
      if (!solved.empty()) {
        std::set<std::vector<i64>> got;
        solved.for_each([&got](const std::vector<i64>& c) { got.insert(c); });
        CHECK(got == expected);
        CHECK(static_cast<i64>(got.size()) == solved.count());  // no repeats
      }
    }
  }
}

TEST_CASE("parity obstruction yields the empty set") {
  auto solved = solve_modular_system({{2}}, {1}, 4);
  CHECK(solved.empty());
  CHECK(solved.count() == 0);
  CHECK_FALSE(solved.particular().has_value());
}

TEST_CASE("member_at follows the streaming order") {
  auto solved = solve_modular_system({{2, 0}}, {0}, 8);
  REQUIRE_FALSE(solved.empty());
  std::vector<std::vector<i64>> streamed;
  solved.for_each([&streamed](const std::vector<i64>& c) { streamed.push_back(c); });
  REQUIRE(static_cast<i64>(streamed.size()) == solved.count());
  for (i64 i = 0; i < solved.count(); ++i) {
    CHECK(solved.member_at(i) == streamed[i]);
  }
  CHECK_THROWS_AS(solved.member_at(solved.count()), std::out_of_range);
  CHECK_THROWS_AS(solve_modular_system({{0}}, {0}, 4).materialize(2), limit_error);
}
