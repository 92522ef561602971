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

#ifndef FFHYPER_HYPERGEOMETRIC_HPP_
#define FFHYPER_HYPERGEOMETRIC_HPP_

#include <memory>
#include <vector>

#include "ffhyper/character.hpp"
#include "ffhyper/cyclotomic.hpp"
#include "ffhyper/field.hpp"
#include "ffhyper/linalg.hpp"

namespace ffhyper {

// The data (A, beta): N exponent vectors a_1..a_N in (Z/(q-1))^n and a
// parameter character vector beta of length n (stored as exponents).
struct HypergeometricInstance {
  std::shared_ptr<const Field> field;
  i64 n = 0;                            // torus dimension
  i64 big_n = 0;                        // number of monomials N
  std::vector<std::vector<i64>> rows;   // N rows of length n, entries in [0, q-1)
  std::vector<i64> beta;                // length n, entries in [0, q-1)

  // Entries of signed_rows and beta_exponents may be any integers; they are
  // reduced mod q-1 on ingest.
  static HypergeometricInstance create(std::shared_ptr<const Field> field,
                                       const std::vector<std::vector<i64>>& signed_rows,
                                       const std::vector<i64>& beta_exponents);
};

// Argument vector lambda in (F_q^x)^N, stored as element encodings.
struct Lambda {
  std::vector<i64> encodings;

  static Lambda create(const Field& field, const std::vector<i64>& encodings);
};

// The solution set L_beta = {chi in (char group)^N : prod chi_i^{a_i} = beta},
// parametrized by exponent vectors: a particular solution plus kernel
// generators with orders.  count() = 0 exactly when the set is empty.
using CharSolutionSet = ModularSolutionSet;

CharSolutionSet solve_character_lattice(const HypergeometricInstance& inst);

// F_A(beta; lambda) = (q-1)^{n-N} sum over chi in L_beta of
// g(conj chi_1) ... g(conj chi_N) chi_1(lambda_1) ... chi_N(lambda_N).
// Exact in Q(zeta_{p(q-1)}); zero when L_beta is empty.  The prefactor with
// n < N stays exact through the rational denominator.
CycValue hypergeometric_function(const HypergeometricInstance& inst, const Lambda& lambda,
                                 const AddCharTwist& twist, GaussSumCache* cache = nullptr);

// S_A(beta, lambda) = sum over x in (F_q^x)^n of
// conj(beta_1)(x_1) ... conj(beta_n)(x_n) Psi(sum_i lambda_i x^{a_i}).
// Monomials x^{a} are evaluated through discrete-log exponent arithmetic.
CycValue exponential_sum(const HypergeometricInstance& inst, const Lambda& lambda,
                         const AddCharTwist& twist);

// Fourier coefficient of S_A at the character tuple rho (closed form):
// (q-1)^{n-N} g(conj rho_1) ... g(conj rho_N) when prod rho_i^{a_i} = beta,
// else zero.
CycValue fourier_coefficient(const HypergeometricInstance& inst,
                             const std::vector<i64>& rho_exponents, const AddCharTwist& twist,
                             GaussSumCache* cache = nullptr);

// u / g for a nonzero Gauss sum g, computed as u * conj(g) / (g * conj(g));
// the norm g * conj(g) is a nonzero rational integer.
CycValue divide_by_gauss_sum(const CycValue& u, const CycValue& g);

// McCarthy's kF_{k-1} at argument t != 0, from 2k-1 numerator/denominator
// characters alpha:  (1/(q-1)) sum over chi of
//   prod_{i<=k} g(alpha_i chi)/g(alpha_i)
//   prod_{j>k}  g(conj alpha_j conj chi)/g(conj alpha_j)
//   g(conj chi) chi((-1)^k t).
// The Gauss-sum ratios make the value independent of the twist.
CycValue mccarthy_hypergeometric(const std::shared_ptr<const Field>& field,
                                 const std::vector<i64>& alpha_exponents, i64 t_encoding,
                                 const AddCharTwist& twist, GaussSumCache* cache = nullptr);

// C = prod_{i<=k} g(alpha_i) * prod_{j>k} g(conj alpha_j), the normalization
// relating kF_{k-1} to the specialized F_A.
CycValue normalization_constant(const std::shared_ptr<const Field>& field,
                                const std::vector<i64>& alpha_exponents,
                                const AddCharTwist& twist, GaussSumCache* cache = nullptr);

// The instance whose F_A specializes to kF_{k-1}: n = 2k-1, N = 2k, rows are
// the standard unit vectors plus (1,..,1,-1,..,-1) (k ones, k-1 minus ones),
// beta = (conj alpha_1,..,conj alpha_k, alpha_{k+1},..,alpha_{2k-1}).
HypergeometricInstance mccarthy_instance(const std::shared_ptr<const Field>& field,
                                         const std::vector<i64>& alpha_exponents);

// The specialized argument (1,...,1, (-1)^k t) for the instance above.
Lambda mccarthy_lambda(const Field& field, i64 k, i64 t_encoding);

// Checks C * kF_{k-1}(alpha; t) = S_A(beta, (1,..,1,(-1)^k t)) exactly, the
// two sides computed through independent summation paths.
bool mccarthy_specialization_check(const std::shared_ptr<const Field>& field,
                                   const std::vector<i64>& alpha_exponents, i64 t_encoding,
                                   const AddCharTwist& twist);

// Checks (1/C) F_A(beta; 1,..,1,(-1)^k t) = kF_{k-1}(alpha; t) exactly; the
// left side divides F_A by each Gauss-sum factor of C in turn.
bool mccarthy_normalization_check(const std::shared_ptr<const Field>& field,
                                  const std::vector<i64>& alpha_exponents, i64 t_encoding,
                                  const AddCharTwist& twist);

}  // namespace ffhyper

#endif  // FFHYPER_HYPERGEOMETRIC_HPP_
