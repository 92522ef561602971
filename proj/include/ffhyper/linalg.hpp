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

#ifndef FFHYPER_LINALG_HPP_
#define FFHYPER_LINALG_HPP_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ffhyper/common.hpp"

namespace ffhyper {

using IntMatrix = std::vector<std::vector<i64>>;

IntMatrix identity_matrix(i64 n);
std::vector<i64> matrix_vector_product(const IntMatrix& m, const std::vector<i64>& v);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);

// D = U * M * V with U, V unimodular, D diagonal with nonnegative entries in
// a divisibility chain.  Deterministic for equal inputs.
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

SmithDecomposition smith_normal_form(IntMatrix m);

// Solution set of M c = b (mod modulus) over (Z/modulus)^cols, parametrized
// as particular + span of independent generators with known orders, so the
// member count is the product of the orders and enumeration can stream.
class ModularSolutionSet {
 public:
  ModularSolutionSet() = default;
  ModularSolutionSet(i64 modulus, std::optional<std::vector<i64>> particular,
                     std::vector<std::pair<std::vector<i64>, i64>> generators);

  i64 modulus() const { return modulus_; }
  bool empty() const { return !particular_.has_value(); }
  i64 count() const { return count_; }
  const std::optional<std::vector<i64>>& particular() const { return particular_; }
  const std::vector<std::pair<std::vector<i64>, i64>>& generators() const { return generators_; }

  // Member at a flat index < count(), in lexicographic order of the kernel
  // coordinates (last generator varying fastest).
  std::vector<i64> member_at(i64 flat_index) const;

  // Streams all members in enumeration order.
  void for_each(const std::function<void(const std::vector<i64>&)>& fn) const;

  // Collects members; refuses when count exceeds limit.
  std::vector<std::vector<i64>> materialize(i64 limit = 1 << 20) const;

 private:
  i64 modulus_ = 1;
  std::optional<std::vector<i64>> particular_;
  std::vector<std::pair<std::vector<i64>, i64>> generators_;
  i64 count_ = 0;
};

// Solves M c = b (mod modulus) for the full solution set; M is rows x cols,
// b has size rows.  Smith normal form over Z diagonalizes the system into
// independent congruences d_i y_i = (U b)_i whose solution counts are
// gcd(d_i, modulus); mapping back through V yields the generators.
ModularSolutionSet solve_modular_system(const IntMatrix& m, const std::vector<i64>& b,
                                        i64 modulus);

}  // namespace ffhyper

#endif  // FFHYPER_LINALG_HPP_
