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

#include "ffhyper/hypergeometric.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace ffhyper {
namespace {

// Work is split into independently computed partial sums and merged; exact
// arithmetic makes the merge order-insensitive.
constexpr i64 kParallelThreshold = i64{1} << 15;

i64 worker_count(i64 total) {
  if (total < kParallelThreshold) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw < 2) return 1;
  return std::min<i64>(hw, (total + kParallelThreshold - 1) / kParallelThreshold);
}

// Applies the prefactor (q-1)^{n-N} exactly: an integer power when n >= N,
// a rational denominator when n < N.
CycValue apply_unit_group_prefactor(CycValue value, i64 unit, i64 n, i64 big_n) {
  i64 scale = 1;
  for (i64 i = 0; i < std::llabs(n - big_n); ++i) {
    scale = checked_mul(scale, unit, "prefactor");
  }
  return n >= big_n ? value.scalar_mul(scale) : value.scalar_div(scale);
}

}  // namespace

HypergeometricInstance HypergeometricInstance::create(
    std::shared_ptr<const Field> field, const std::vector<std::vector<i64>>& signed_rows,
    const std::vector<i64>& beta_exponents) {
  if (signed_rows.empty() || beta_exponents.empty()) {
    throw std::invalid_argument("instance: need at least one monomial and one torus dimension");
  }
  HypergeometricInstance inst;
  inst.field = std::move(field);
  inst.n = static_cast<i64>(beta_exponents.size());
  inst.big_n = static_cast<i64>(signed_rows.size());
  const i64 unit = inst.field->unit_order();
  inst.rows.reserve(signed_rows.size());
  for (const auto& row : signed_rows) {
    if (static_cast<i64>(row.size()) != inst.n) {
      throw std::invalid_argument("instance: exponent row width does not match beta length");
    }
    std::vector<i64> reduced(row.size());
    std::transform(row.begin(), row.end(), reduced.begin(),
                   [unit](i64 v) { return mod_reduce(v, unit); });
    inst.rows.push_back(std::move(reduced));
  }
  inst.beta.resize(beta_exponents.size());
  std::transform(beta_exponents.begin(), beta_exponents.end(), inst.beta.begin(),
                 [unit](i64 v) { return mod_reduce(v, unit); });
  return inst;
}

Lambda Lambda::create(const Field& field, const std::vector<i64>& encodings) {
  for (i64 enc : encodings) {
    if (enc == 0) throw std::invalid_argument("lambda: entries must be nonzero");
    if (enc < 0 || enc >= field.q()) {
      throw parse_error("lambda: element encoding out of range");
    }
  }
  return Lambda{encodings};
}

CharSolutionSet solve_character_lattice(const HypergeometricInstance& inst) {
  // Component j of prod chi_i^{a_i} = beta reads sum_i c_i a_{ij} = b_j
  // (mod q-1): the matrix of the system is the transpose of A.
  const i64 unit = inst.field->unit_order();
  IntMatrix system(inst.n, std::vector<i64>(inst.big_n, 0));
  for (i64 i = 0; i < inst.big_n; ++i) {
    for (i64 j = 0; j < inst.n; ++j) {
      system[j][i] = inst.rows[i][j];
    }
  }
  return solve_modular_system(system, inst.beta, unit);
}

CycValue hypergeometric_function(const HypergeometricInstance& inst, const Lambda& lambda,
                                 const AddCharTwist& twist, GaussSumCache* cache) {
  const auto& field = inst.field;
  if (static_cast<i64>(lambda.encodings.size()) != inst.big_n) {
    throw std::invalid_argument("lambda length does not match the monomial count");
  }
  const i64 m = field->conductor();
  const i64 unit = field->unit_order();

  CharSolutionSet lattice = solve_character_lattice(inst);
  if (lattice.empty()) return CycValue::zero(m);

  GaussSumCache local(field);
  GaussSumCache& gauss = cache ? *cache : local;
  const i64 twist_enc = twist.c_encoding();

  std::vector<i64> lambda_logs(inst.big_n);
  for (i64 i = 0; i < inst.big_n; ++i) lambda_logs[i] = field->log_of(lambda.encodings[i]);

  auto term_for = [&](const std::vector<i64>& chi) {
    CycValue term = gauss.get(-chi[0], twist_enc);
    for (i64 i = 1; i < inst.big_n; ++i) {
      term *= gauss.get(-chi[i], twist_enc);
    }
    i64 rot = 0;
    for (i64 i = 0; i < inst.big_n; ++i) {
      rot = mod_reduce(rot + chi[i] * lambda_logs[i], unit);
    }
    return term.times_root(field->p() * rot);
  };

  const i64 total = lattice.count();
  const i64 workers = worker_count(total);
  CycValue sum = CycValue::zero(m);
  if (workers == 1) {
    lattice.for_each([&](const std::vector<i64>& chi) { sum += term_for(chi); });
  } else {
    std::vector<CycValue> partial(workers, CycValue::zero(m));
    std::vector<std::thread> threads;
    const i64 chunk = (total + workers - 1) / workers;
    for (i64 w = 0; w < workers; ++w) {
      threads.emplace_back([&, w]() {
        const i64 lo = w * chunk, hi = std::min(total, lo + chunk);
        CycValue acc = CycValue::zero(m);
        for (i64 idx = lo; idx < hi; ++idx) {
          acc += term_for(lattice.member_at(idx));
        }
        partial[w] = std::move(acc);
      });
    }
    for (auto& t : threads) t.join();
    for (auto& p : partial) sum += p;
  }
  return apply_unit_group_prefactor(std::move(sum), unit, inst.n, inst.big_n);
}

CycValue exponential_sum(const HypergeometricInstance& inst, const Lambda& lambda,
                         const AddCharTwist& twist) {
  const auto& field = inst.field;
  if (static_cast<i64>(lambda.encodings.size()) != inst.big_n) {
    throw std::invalid_argument("lambda length does not match the monomial count");
  }
  const i64 unit = field->unit_order();
  const i64 m = field->conductor();
  const i64 p = field->p();
  CyclotomicBasis::get(m);  // enforce the conductor cap before allocating

  // Psi_c(y) = Psi(c y), so the twist folds into lambda.
  const i64 log_c = field->log_of(twist.c_encoding());
  std::vector<i64> scaled_logs(inst.big_n);
  for (i64 i = 0; i < inst.big_n; ++i) {
    scaled_logs[i] = mod_reduce(field->log_of(lambda.encodings[i]) + log_c, unit);
  }

  i64 total = 1;
  for (i64 t = 0; t < inst.n; ++t) total = checked_mul(total, unit, "torus size");

  // One torus point is x_t = generator^{j_t}; monomial exponents and the
  // beta rotation update incrementally as the digit odometer advances.
  auto accumulate_range = [&](i64 lo, i64 hi, std::vector<i64>& counts) {
    std::vector<i64> digits(inst.n, 0);
    {
      i64 rem = lo;
      for (i64 t = inst.n - 1; t >= 0; --t) {
        digits[t] = rem % unit;
        rem /= unit;
      }
    }
    std::vector<i64> mono(inst.big_n);  // log of x^{a_i} plus scaled lambda log
    for (i64 i = 0; i < inst.big_n; ++i) {
      i64 e = scaled_logs[i];
      for (i64 t = 0; t < inst.n; ++t) e = mod_reduce(e + inst.rows[i][t] * digits[t], unit);
      mono[i] = e;
    }
    i64 beta_rot = 0;  // exponent of conj(beta)(x) as a power of zeta_{q-1}
    for (i64 t = 0; t < inst.n; ++t) {
      beta_rot = mod_reduce(beta_rot - inst.beta[t] * digits[t], unit);
    }

    for (i64 idx = lo; idx < hi; ++idx) {
      i64 point_sum = 0;
      for (i64 i = 0; i < inst.big_n; ++i) {
        point_sum = field->add_enc(point_sum, field->pow_of_generator(mono[i]));
      }
      const i64 tr = field->trace_of(point_sum);
      counts[mod_reduce(p * beta_rot + unit * tr, m)] += 1;

      // Advance the odometer (last digit fastest).
      for (i64 t = inst.n - 1; t >= 0; --t) {
        if (++digits[t] < unit) {
          for (i64 i = 0; i < inst.big_n; ++i) mono[i] = mod_reduce(mono[i] + inst.rows[i][t], unit);
          beta_rot = mod_reduce(beta_rot - inst.beta[t], unit);
          break;
        }
        digits[t] = 0;
        for (i64 i = 0; i < inst.big_n; ++i) {
          mono[i] = mod_reduce(mono[i] - (unit - 1) * inst.rows[i][t], unit);
        }
        beta_rot = mod_reduce(beta_rot + (unit - 1) * inst.beta[t], unit);
      }
    }
  };

  const i64 workers = worker_count(total);
  std::vector<i64> counts(m, 0);
  if (workers == 1) {
    accumulate_range(0, total, counts);
  } else {
    std::vector<std::vector<i64>> partial(workers, std::vector<i64>(m, 0));
    std::vector<std::thread> threads;
    const i64 chunk = (total + workers - 1) / workers;
    for (i64 w = 0; w < workers; ++w) {
      threads.emplace_back([&, w]() {
        const i64 lo = w * chunk, hi = std::min(total, lo + chunk);
        if (lo < hi) accumulate_range(lo, hi, partial[w]);
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& part : partial) {
      for (i64 e = 0; e < m; ++e) counts[e] += part[e];
    }
  }
  return CycValue::from_exponent_counts(m, counts);
}

CycValue fourier_coefficient(const HypergeometricInstance& inst,
                             const std::vector<i64>& rho_exponents, const AddCharTwist& twist,
                             GaussSumCache* cache) {
  const auto& field = inst.field;
  if (static_cast<i64>(rho_exponents.size()) != inst.big_n) {
    throw std::invalid_argument("rho length does not match the monomial count");
  }
  const i64 unit = field->unit_order();
  const i64 m = field->conductor();

  for (i64 j = 0; j < inst.n; ++j) {
    i64 acc = 0;
    for (i64 i = 0; i < inst.big_n; ++i) {
      acc = mod_reduce(acc + mod_reduce(rho_exponents[i], unit) * inst.rows[i][j], unit);
    }
    if (acc != inst.beta[j]) return CycValue::zero(m);
  }

  GaussSumCache local(field);
  GaussSumCache& gauss = cache ? *cache : local;
  CycValue product = CycValue::integer(1).lifted_to(m);
  for (i64 i = 0; i < inst.big_n; ++i) {
    product *= gauss.get(-rho_exponents[i], twist.c_encoding());
  }
  return apply_unit_group_prefactor(std::move(product), unit, inst.n, inst.big_n);
}

CycValue divide_by_gauss_sum(const CycValue& u, const CycValue& g) {
  CycValue conj = g.conjugate();
  auto norm = (g * conj).as_rational();
  if (!norm.has_value() || norm->first == 0) {
    throw std::invalid_argument("division: divisor norm is not a nonzero rational");
  }
  return (u * conj).scalar_mul(norm->second).scalar_div(norm->first);
}

CycValue mccarthy_hypergeometric(const std::shared_ptr<const Field>& field,
                                 const std::vector<i64>& alpha_exponents, i64 t_encoding,
                                 const AddCharTwist& twist, GaussSumCache* cache) {
  if (alpha_exponents.empty() || alpha_exponents.size() % 2 == 0) {
    throw std::invalid_argument("mccarthy: need 2k-1 characters");
  }
  if (t_encoding <= 0 || t_encoding >= field->q()) {
    throw std::invalid_argument("mccarthy: t must be a nonzero element");
  }
  const i64 k = (static_cast<i64>(alpha_exponents.size()) + 1) / 2;
  const i64 unit = field->unit_order();
  const i64 m = field->conductor();
  const i64 twist_enc = twist.c_encoding();

  GaussSumCache local(field);
  GaussSumCache& gauss = cache ? *cache : local;

  std::vector<i64> alpha(alpha_exponents.size());
  std::transform(alpha_exponents.begin(), alpha_exponents.end(), alpha.begin(),
                 [unit](i64 v) { return mod_reduce(v, unit); });

  // Denominators g(alpha_i) and g(conj alpha_j) are chi-independent: divide
  // by each via its conjugate, accumulating the rational norms for one exact
  // division at the end.
  std::vector<CycValue> denom_conj;
  i64 norm_product = 1;
  for (i64 i = 0; i < 2 * k - 1; ++i) {
    const i64 exponent = i < k ? alpha[i] : mod_reduce(-alpha[i], unit);
    const CycValue& g = gauss.get(exponent, twist_enc);
    CycValue conj = g.conjugate();
    auto norm = (g * conj).as_rational();
    if (!norm.has_value() || norm->second != 1 || norm->first == 0) {
      throw std::logic_error("mccarthy: Gauss-sum norm is not a nonzero integer");
    }
    norm_product = checked_mul(norm_product, norm->first, "mccarthy norms");
    denom_conj.push_back(std::move(conj));
  }

  // Argument (-1)^k t.
  i64 arg_enc = t_encoding;
  if (k % 2 == 1) arg_enc = field->neg_enc(arg_enc);
  const i64 arg_log = field->log_of(arg_enc);

  CycValue sum = CycValue::zero(m);
  for (i64 c = 0; c < unit; ++c) {
    CycValue term = gauss.get(-c, twist_enc);  // g(conj chi)
    for (i64 i = 0; i < k; ++i) {
      term *= gauss.get(alpha[i] + c, twist_enc);
      term *= denom_conj[i];
    }
    for (i64 j = k; j < 2 * k - 1; ++j) {
      term *= gauss.get(-alpha[j] - c, twist_enc);
      term *= denom_conj[j];
    }
    sum += term.times_root(field->p() * mod_reduce(c * arg_log, unit));
  }
  return sum.scalar_div(checked_mul(norm_product, unit, "mccarthy prefactor"));
}

CycValue normalization_constant(const std::shared_ptr<const Field>& field,
                                const std::vector<i64>& alpha_exponents,
                                const AddCharTwist& twist, GaussSumCache* cache) {
  if (alpha_exponents.empty() || alpha_exponents.size() % 2 == 0) {
    throw std::invalid_argument("normalization: need 2k-1 characters");
  }
  const i64 k = (static_cast<i64>(alpha_exponents.size()) + 1) / 2;
  GaussSumCache local(field);
  GaussSumCache& gauss = cache ? *cache : local;
  CycValue product = CycValue::integer(1).lifted_to(field->conductor());
  for (i64 i = 0; i < 2 * k - 1; ++i) {
    const i64 exponent = i < k ? alpha_exponents[i] : -alpha_exponents[i];
    product *= gauss.get(exponent, twist.c_encoding());
  }
  return product;
}

HypergeometricInstance mccarthy_instance(const std::shared_ptr<const Field>& field,
                                         const std::vector<i64>& alpha_exponents) {
  if (alpha_exponents.empty() || alpha_exponents.size() % 2 == 0) {
    throw std::invalid_argument("mccarthy instance: need 2k-1 characters");
  }
  const i64 k = (static_cast<i64>(alpha_exponents.size()) + 1) / 2;
  const i64 n = 2 * k - 1;
  std::vector<std::vector<i64>> rows;
  for (i64 i = 0; i < n; ++i) {
    std::vector<i64> row(n, 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<i64> last(n, 0);
  for (i64 i = 0; i < k; ++i) last[i] = 1;
  for (i64 i = k; i < n; ++i) last[i] = -1;
  rows.push_back(std::move(last));

  std::vector<i64> beta(n, 0);
  for (i64 i = 0; i < k; ++i) beta[i] = -alpha_exponents[i];
  for (i64 i = k; i < n; ++i) beta[i] = alpha_exponents[i];
  return HypergeometricInstance::create(field, rows, beta);
}

Lambda mccarthy_lambda(const Field& field, i64 k, i64 t_encoding) {
  if (t_encoding <= 0 || t_encoding >= field.q()) {
    throw std::invalid_argument("mccarthy lambda: t must be a nonzero element");
  }
  std::vector<i64> encodings(2 * k, 1);
  encodings.back() = k % 2 == 1 ? field.neg_enc(t_encoding) : t_encoding;
  return Lambda::create(field, encodings);
}

bool mccarthy_specialization_check(const std::shared_ptr<const Field>& field,
                                   const std::vector<i64>& alpha_exponents, i64 t_encoding,
                                   const AddCharTwist& twist) {
  const i64 k = (static_cast<i64>(alpha_exponents.size()) + 1) / 2;
  GaussSumCache cache(field);
  CycValue lhs = normalization_constant(field, alpha_exponents, twist, &cache) *
                 mccarthy_hypergeometric(field, alpha_exponents, t_encoding, twist, &cache);
  HypergeometricInstance inst = mccarthy_instance(field, alpha_exponents);
  CycValue rhs = exponential_sum(inst, mccarthy_lambda(*field, k, t_encoding), twist);
  return lhs == rhs;
}

bool mccarthy_normalization_check(const std::shared_ptr<const Field>& field,
                                  const std::vector<i64>& alpha_exponents, i64 t_encoding,
                                  const AddCharTwist& twist) {
  const i64 k = (static_cast<i64>(alpha_exponents.size()) + 1) / 2;
  const i64 unit = field->unit_order();
  GaussSumCache cache(field);
  HypergeometricInstance inst = mccarthy_instance(field, alpha_exponents);
  CycValue lhs =
      hypergeometric_function(inst, mccarthy_lambda(*field, k, t_encoding), twist, &cache);
  for (i64 i = 0; i < 2 * k - 1; ++i) {
    const i64 exponent =
        i < k ? mod_reduce(alpha_exponents[i], unit) : mod_reduce(-alpha_exponents[i], unit);
    lhs = divide_by_gauss_sum(lhs, cache.get(exponent, twist.c_encoding()));
  }
  return lhs == mccarthy_hypergeometric(field, alpha_exponents, t_encoding, twist, &cache);
}

}  // namespace ffhyper
