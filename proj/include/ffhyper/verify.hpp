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

#ifndef FFHYPER_VERIFY_HPP_
#define FFHYPER_VERIFY_HPP_

#include <string>
#include <vector>

#include "ffhyper/hypergeometric.hpp"

namespace ffhyper {

struct Check {
  std::string name;
  bool pass = false;
};

// Self-verification suites.  All are deterministic for equal (qmax, seed) and
// exact: a check passes only on coefficient-wise equality in Q(zeta_m).

// g(trivial) = -1 and g(chi) conj(g(chi)) = q for every nontrivial chi, for
// every prime power q <= qmax.
std::vector<Check> suite_gauss(i64 qmax);

// Character-sum orthogonality over (F_q^x)^N and its torus analogue, brute
// sums against the predicted 0 / (q-1)^N values; q in {3,5,7} capped by qmax.
std::vector<Check> suite_orthogonality(i64 qmax, u64 seed);

// Brute-force Fourier coefficients of S_A against the closed form, and the
// series reconstruction of S_A, at q = 5, n = 1, N = 2.
std::vector<Check> suite_fourier(i64 qmax, u64 seed);

// S_A = F_A on seeded random instances (25 per q, 10 sampled lambda each,
// random twists) for q in {3,4,5,7,8,9} capped by qmax.
std::vector<Check> suite_theorem13(i64 qmax, u64 seed);

// kF_{k-1} against the normalized specialized F_A and against the direct
// exponential sum, k in {1,2}, q in {5,7} capped by qmax, every t.
std::vector<Check> suite_mccarthy(i64 qmax, u64 seed);

// Twisted Gauss sums g'(chi) = conj(chi)(c) g(chi) and the matching
// F_A twist covariance F'_A(beta; lambda) = F_A(beta; c lambda); q in {5,7}.
std::vector<Check> suite_twist(i64 qmax, u64 seed);

// Prime powers 2 <= q <= qmax, ascending.
std::vector<i64> prime_powers_up_to(i64 qmax);

// Seeded instance/argument generators shared by the suites.
HypergeometricInstance random_instance(SplitMix64& rng, std::shared_ptr<const Field> field,
                                       i64 max_n, i64 max_monomials);
Lambda random_lambda(SplitMix64& rng, const Field& field, i64 count);
i64 random_unit_encoding(SplitMix64& rng, const Field& field);

}  // namespace ffhyper

#endif  // FFHYPER_VERIFY_HPP_
