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

#include <algorithm>
#include <stdexcept>

namespace ffhyper {
namespace {

// The reduction runs in 128-bit arithmetic: the transform matrices can grow
// well past the inputs, and exactness must never silently degrade.
using WideMatrix = std::vector<std::vector<i128>>;

const i128 kWideBound = i128(1) << 100;

i128 wide_abs(i128 v) { return v < 0 ? -v : v; }

// Quotient rounded to nearest, so remainders satisfy |r| <= |den|/2; symmetric
// remainders keep the transform entries small.
i128 rounded_quotient(i128 num, i128 den) {
  i128 q = num / den;
  i128 r = num - q * den;
  if (2 * wide_abs(r) > wide_abs(den)) {
    q += (num < 0) == (den < 0) ? 1 : -1;
  }
  return q;
}

void check_entry(i128 v, const char* what) {
  if (v > kWideBound || v < -kWideBound) {
    throw std::overflow_error(std::string(what) + ": entries grew beyond the supported range");
  }
}

WideMatrix widen(const IntMatrix& m) {
  WideMatrix out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

WideMatrix wide_identity(i64 n) {
  WideMatrix m(n, std::vector<i128>(n, 0));
  for (i64 i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix narrow(const WideMatrix& m, const char* what) {
  IntMatrix out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    out[i].resize(m[i].size());
    for (size_t j = 0; j < m[i].size(); ++j) out[i][j] = checked_narrow(m[i][j], what);
  }
  return out;
}

void swap_rows(WideMatrix& m, i64 i, i64 j) { std::swap(m[i], m[j]); }

void swap_cols(WideMatrix& m, i64 i, i64 j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// row[i] += factor * row[j]
void add_row(WideMatrix& m, i64 i, i64 j, i128 factor, const char* what) {
  for (size_t c = 0; c < m[i].size(); ++c) {
    m[i][c] += factor * m[j][c];
    check_entry(m[i][c], what);
  }
}

// col[i] += factor * col[j]
void add_col(WideMatrix& m, i64 i, i64 j, i128 factor, const char* what) {
  for (auto& row : m) {
    row[i] += factor * row[j];
    check_entry(row[i], what);
  }
}

void negate_row(WideMatrix& m, i64 i) {
  for (i128& v : m[i]) v = -v;
}

// Smallest nonzero |entry| in the submatrix at (s, s); ties to lowest (i, j).
bool find_pivot(const WideMatrix& d, i64 s, i64& pi, i64& pj) {
  const i64 rows = static_cast<i64>(d.size());
  const i64 cols = static_cast<i64>(d[0].size());
  i128 best = 0;
  bool found = false;
  for (i64 i = s; i < rows; ++i) {
    for (i64 j = s; j < cols; ++j) {
      i128 v = wide_abs(d[i][j]);
      if (v != 0 && (!found || v < best)) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

bool cleared_around_pivot(const WideMatrix& d, i64 s) {
  const i64 rows = static_cast<i64>(d.size());
  const i64 cols = static_cast<i64>(d[0].size());
  for (i64 i = s + 1; i < rows; ++i) {
    if (d[i][s] != 0) return false;
  }
  for (i64 j = s + 1; j < cols; ++j) {
    if (d[s][j] != 0) return false;
  }
  return true;
}

// Repeated quotient reduction with min-pivot swaps until d[s][s] is the only
// nonzero entry of its row and column (or the whole block is zero).
void clear_pivot(WideMatrix& d, WideMatrix& u, WideMatrix& v, i64 s) {
  const i64 rows = static_cast<i64>(d.size());
  const i64 cols = static_cast<i64>(d[0].size());
  while (true) {
    i64 pi = s, pj = s;
    if (!find_pivot(d, s, pi, pj)) return;
    if (d[s][s] != 0 && cleared_around_pivot(d, s)) return;
    swap_rows(d, s, pi);
    swap_rows(u, s, pi);
    swap_cols(d, s, pj);
    swap_cols(v, s, pj);
    for (i64 i = s + 1; i < rows; ++i) {
      if (d[i][s] != 0) {
        i128 f = -rounded_quotient(d[i][s], d[s][s]);
        add_row(d, i, s, f, "smith reduction");
        add_row(u, i, s, f, "smith transform");
      }
    }
    for (i64 j = s + 1; j < cols; ++j) {
      if (d[s][j] != 0) {
        i128 f = -rounded_quotient(d[s][j], d[s][s]);
        add_col(d, j, s, f, "smith reduction");
        add_col(v, j, s, f, "smith transform");
      }
    }
  }
}

// Restores divisibility for adjacent diagonal entries (a, b) with b % a != 0,
// touching only rows and columns i and i+1: mixing column i+1 into column i
// and running Euclid on the pair leaves (gcd, +-ab/gcd) on the diagonal.
void fix_diagonal_pair(WideMatrix& d, WideMatrix& u, WideMatrix& v, i64 i) {
  add_col(d, i, i + 1, 1, "smith reduction");
  add_col(v, i, i + 1, 1, "smith transform");
  while (d[i + 1][i] != 0) {
    i128 f = -rounded_quotient(d[i + 1][i], d[i][i]);
    if (f != 0) {
      add_row(d, i + 1, i, f, "smith reduction");
      add_row(u, i + 1, i, f, "smith transform");
    }
    if (d[i + 1][i] != 0) {
      swap_rows(d, i, i + 1);
      swap_rows(u, i, i + 1);
    }
  }
  if (d[i][i + 1] != 0) {
    // The pivot is now the gcd of the pair, so this division is exact.
    i128 f = -(d[i][i + 1] / d[i][i]);
    add_col(d, i + 1, i, f, "smith reduction");
    add_col(v, i + 1, i, f, "smith transform");
  }
  if (d[i][i] < 0) {
    negate_row(d, i);
    negate_row(u, i);
  }
  if (d[i + 1][i + 1] < 0) {
    negate_row(d, i + 1);
    negate_row(u, i + 1);
  }
}

}  // namespace

IntMatrix identity_matrix(i64 n) {
  IntMatrix m(n, std::vector<i64>(n, 0));
  for (i64 i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<i64> matrix_vector_product(const IntMatrix& m, const std::vector<i64>& v) {
  std::vector<i64> out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    i128 acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc += i128(m[i][j]) * i128(v[j]);
    out[i] = checked_narrow(acc, "matrix-vector product");
  }
  return out;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), std::vector<i64>(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) {
        out[i][j] = checked_narrow(i128(out[i][j]) + i128(a[i][k]) * i128(b[k][j]),
                                   "matrix product");
      }
    }
  }
  return out;
}

SmithDecomposition smith_normal_form(IntMatrix m) {
  if (m.empty() || m[0].empty()) {
    throw std::invalid_argument("smith: matrix must be nonempty");
  }
  const i64 rows = static_cast<i64>(m.size());
  const i64 cols = static_cast<i64>(m[0].size());
  const i64 nmin = std::min(rows, cols);

  WideMatrix d = widen(m);
  WideMatrix u = wide_identity(rows);
  WideMatrix v = wide_identity(cols);

  // Diagonalize, then fix signs.
  for (i64 s = 0; s < nmin; ++s) clear_pivot(d, u, v, s);
  for (i64 s = 0; s < nmin; ++s) {
    if (d[s][s] < 0) {
      negate_row(d, s);
      negate_row(u, s);
    }
  }

  // Enforce the divisibility chain by bubbling: zeros sink to the end and
  // non-dividing adjacent pairs become (gcd, lcm).
  bool changed = true;
  while (changed) {
    changed = false;
    for (i64 i = 0; i + 1 < nmin; ++i) {
      const i128 a = d[i][i], b = d[i + 1][i + 1];
      if (b == 0) continue;
      if (a == 0) {
        swap_rows(d, i, i + 1);
        swap_rows(u, i, i + 1);
        swap_cols(d, i, i + 1);
        swap_cols(v, i, i + 1);
        changed = true;
        continue;
      }
      if (b % a == 0) continue;
      fix_diagonal_pair(d, u, v, i);
      changed = true;
    }
  }

  SmithDecomposition out;
  out.d = narrow(d, "smith diagonal");
  out.u = narrow(u, "smith transform");
  out.v = narrow(v, "smith transform");
  return out;
}

ModularSolutionSet::ModularSolutionSet(i64 modulus, std::optional<std::vector<i64>> particular,
                                       std::vector<std::pair<std::vector<i64>, i64>> generators)
    : modulus_(modulus), particular_(std::move(particular)), generators_(std::move(generators)) {
  if (!particular_.has_value()) {
    count_ = 0;
    generators_.clear();
    return;
  }
  count_ = 1;
  for (const auto& [gen, order] : generators_) {
    (void)gen;
    count_ = checked_mul(count_, order, "solution count");
  }
}

std::vector<i64> ModularSolutionSet::member_at(i64 flat_index) const {
  if (empty() || flat_index < 0 || flat_index >= count_) {
    throw std::out_of_range("solution set: index out of range");
  }
  std::vector<i64> c = *particular_;
  for (i64 g = static_cast<i64>(generators_.size()) - 1; g >= 0; --g) {
    const auto& [gen, order] = generators_[g];
    i64 t = flat_index % order;
    flat_index /= order;
    if (t != 0) {
      for (size_t i = 0; i < c.size(); ++i) {
        c[i] = mod_reduce(c[i] + t * gen[i], modulus_);
      }
    }
  }
  return c;
}

void ModularSolutionSet::for_each(const std::function<void(const std::vector<i64>&)>& fn) const {
  if (empty()) return;
  std::vector<i64> odometer(generators_.size(), 0);
  std::vector<i64> c = *particular_;
  while (true) {
    fn(c);
    // Advance with the last generator fastest.
    i64 g = static_cast<i64>(generators_.size()) - 1;
    for (; g >= 0; --g) {
      const auto& [gen, order] = generators_[g];
      if (++odometer[g] < order) {
        for (size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(c[i] + gen[i], modulus_);
        break;
      }
      odometer[g] = 0;
      for (size_t i = 0; i < c.size(); ++i) {
        c[i] = mod_reduce(c[i] - (order - 1) * gen[i], modulus_);
      }
    }
    if (g < 0) break;
  }
}

std::vector<std::vector<i64>> ModularSolutionSet::materialize(i64 limit) const {
  if (count_ > limit) {
    throw limit_error("solution set: too many members to materialize");
  }
  std::vector<std::vector<i64>> out;
  out.reserve(count_);
  for_each([&out](const std::vector<i64>& c) { out.push_back(c); });
  return out;
}

ModularSolutionSet solve_modular_system(const IntMatrix& m, const std::vector<i64>& b,
                                        i64 modulus) {
  if (modulus < 1) throw std::invalid_argument("modular system: modulus must be >= 1");
  const i64 rows = static_cast<i64>(m.size());
  const i64 cols = rows > 0 ? static_cast<i64>(m[0].size()) : 0;
  if (rows == 0 || cols == 0) throw std::invalid_argument("modular system: empty matrix");
  if (static_cast<i64>(b.size()) != rows) {
    throw std::invalid_argument("modular system: rhs size mismatch");
  }

  SmithDecomposition snf = smith_normal_form(m);
  const i64 nmin = std::min(rows, cols);
  std::vector<i64> ub = matrix_vector_product(snf.u, b);

  // Zero rows beyond the diagonal block are pure consistency constraints.
  for (i64 i = nmin; i < rows; ++i) {
    if (mod_reduce(ub[i], modulus) != 0) {
      return ModularSolutionSet(modulus, std::nullopt, {});
    }
  }

  std::vector<i64> y0(cols, 0);
  std::vector<std::pair<i64, i64>> coordinate_span(cols);  // (step, order) per y
  for (i64 i = 0; i < cols; ++i) {
    const i64 d = i < nmin ? snf.d[i][i] : 0;
    const i64 dm = mod_reduce(d, modulus);
    const i64 u = i < rows ? mod_reduce(ub[i], modulus) : 0;
    const i64 g = dm == 0 ? modulus : std::gcd(dm, modulus);
    if (i < nmin) {
      if (u % g != 0) {
        return ModularSolutionSet(modulus, std::nullopt, {});
      }
      if (dm != 0) {
        const i64 sub = modulus / g;
        y0[i] = mod_reduce((u / g) * mod_inverse(dm / g, sub), sub);
      }
      // dm == 0 with u divisible by g = modulus forces u = 0: any y works.
    }
    coordinate_span[i] = {modulus / g, g};
  }

  std::optional<std::vector<i64>> particular = std::vector<i64>(cols, 0);
  for (i64 i = 0; i < cols; ++i) {
    i128 acc = 0;
    for (i64 j = 0; j < cols; ++j) acc += i128(snf.v[i][j]) * i128(y0[j]);
    (*particular)[i] = mod_reduce(checked_narrow(acc, "particular solution"), modulus);
  }

  std::vector<std::pair<std::vector<i64>, i64>> generators;
  for (i64 j = 0; j < cols; ++j) {
    const auto [step, order] = coordinate_span[j];
    if (order <= 1) continue;
    std::vector<i64> gen(cols, 0);
    for (i64 i = 0; i < cols; ++i) {
      gen[i] = mod_reduce(checked_narrow(i128(snf.v[i][j]) * i128(step), "kernel generator"),
                          modulus);
    }
    generators.emplace_back(std::move(gen), order);
  }
  return ModularSolutionSet(modulus, std::move(particular), std::move(generators));
}

}  // namespace ffhyper
