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

#include "ffhyper/verify.hpp"

#include <algorithm>

namespace ffhyper {
namespace {

constexpr i64 kExhaustiveCharacterCap = 10000;

std::string check_name(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += '.';
    out += part;
  }
  return out;
}

std::vector<i64> filter_up_to(std::initializer_list<i64> qs, i64 qmax) {
  std::vector<i64> out;
  for (i64 q : qs) {
    if (q <= qmax) out.push_back(q);
  }
  return out;
}

// Direct sum of prod_i chi_{k_i}(lambda_i) over lambda in (F_q^x)^N, by
// enumerating generator exponents.  Returns the value at conductor q-1.
CycValue character_product_sum(const Field& field, const std::vector<i64>& exponents) {
  const i64 unit = field.unit_order();
  const i64 n = static_cast<i64>(exponents.size());
  std::vector<i64> counts(unit, 0);
  std::vector<i64> digits(n, 0);
  i64 total = 1;
  for (i64 i = 0; i < n; ++i) total = checked_mul(total, unit, "orthogonality points");
  i64 e = 0;
  for (i64 idx = 0; idx < total; ++idx) {
    counts[e] += 1;
    for (i64 t = n - 1; t >= 0; --t) {
      if (++digits[t] < unit) {
        e = mod_reduce(e + exponents[t], unit);
        break;
      }
      digits[t] = 0;
      e = mod_reduce(e - (unit - 1) * exponents[t], unit);
    }
  }
  return CycValue::from_exponent_counts(unit, counts);
}

}  // namespace

std::vector<i64> prime_powers_up_to(i64 qmax) {
  std::vector<i64> out;
  for (i64 q = 2; q <= qmax; ++q) {
    i64 base = q;
    for (i64 p = 2; p * p <= base; ++p) {
      while (base % p == 0 && base > p) base /= p;
    }
    // base is now the largest prime factor of q; q is a prime power iff q is
    // a power of base.
    i64 v = q;
    while (v % base == 0) v /= base;
    if (v == 1) out.push_back(q);
  }
  return out;
}

HypergeometricInstance random_instance(SplitMix64& rng, std::shared_ptr<const Field> field,
                                       i64 max_n, i64 max_monomials) {
  const i64 unit = field->unit_order();
  const i64 n = rng.between(1, max_n);
  const i64 monomials = rng.between(1, max_monomials);
  std::vector<std::vector<i64>> rows(monomials, std::vector<i64>(n, 0));
  for (auto& row : rows) {
    for (i64& v : row) v = rng.below(unit);
  }
  std::vector<i64> beta(n, 0);
  for (i64& v : beta) v = rng.below(unit);
  return HypergeometricInstance::create(std::move(field), rows, beta);
}

i64 random_unit_encoding(SplitMix64& rng, const Field& field) {
  return field.pow_of_generator(rng.below(field.unit_order()));
}

Lambda random_lambda(SplitMix64& rng, const Field& field, i64 count) {
  std::vector<i64> encodings(count);
  for (i64& enc : encodings) enc = random_unit_encoding(rng, field);
  return Lambda::create(field, encodings);
}

std::vector<Check> suite_gauss(i64 qmax) {
  std::vector<Check> checks;
  for (i64 q : prime_powers_up_to(qmax)) {
    auto factors = distinct_prime_factors(q);
    const i64 p = factors.front();
    i64 a = 0;
    for (i64 v = q; v > 1; v /= p) ++a;
    auto field = Field::build(p, a);
    AddCharTwist twist(field, 1);

    bool trivial_ok = gauss_sum(MultChar(field, 0), twist) == CycValue::integer(-1);
    checks.push_back({check_name({"gauss", "q=" + std::to_string(q), "trivial"}), trivial_ok});

    bool norm_ok = true;
    const CycValue expected = CycValue::integer(q);
    for (i64 k = 1; k < q - 1; ++k) {
      CycValue g = gauss_sum(MultChar(field, k), twist);
      if (g * g.conjugate() != expected) {
        norm_ok = false;
        break;
      }
    }
    checks.push_back({check_name({"gauss", "q=" + std::to_string(q), "norm"}), norm_ok});
  }
  return checks;
}

std::vector<Check> suite_orthogonality(i64 qmax, u64 seed) {
  std::vector<Check> checks;
  SplitMix64 rng(seed ^ 0x6f727468ULL);
  for (i64 q : filter_up_to({3, 5, 7}, qmax)) {
    auto field = Field::build(q, 1);
    const i64 unit = q - 1;

    // Sum over (F_q^x)^N of a character tuple: zero unless every component
    // is trivial, in which case it counts the points.
    for (i64 n = 1; n <= 3; ++n) {
      i64 tuples = 1;
      for (i64 i = 0; i < n; ++i) tuples *= unit;
      bool ok = true;
      std::vector<i64> exponents(n, 0);
      auto run_case = [&](const std::vector<i64>& exps) {
        bool all_trivial = std::all_of(exps.begin(), exps.end(), [](i64 k) { return k == 0; });
        CycValue expected =
            all_trivial ? CycValue::integer(tuples) : CycValue::integer(0);
        return character_product_sum(*field, exps) == expected;
      };
      if (tuples <= kExhaustiveCharacterCap) {
        for (i64 idx = 0; idx < tuples && ok; ++idx) {
          i64 rem = idx;
          for (i64 i = 0; i < n; ++i) {
            exponents[i] = rem % unit;
            rem /= unit;
          }
          ok = run_case(exponents);
        }
      } else {
        for (i64 s = 0; s < 100 && ok; ++s) {
          for (i64& k : exponents) k = rng.below(unit);
          ok = run_case(exponents);
        }
      }
      checks.push_back({check_name({"orthogonality", "characters", "q=" + std::to_string(q),
                                    "N=" + std::to_string(n)}),
                        ok});
    }

    // Torus analogue: sum over (F_q^x)^n of (prod rho_i^{a_i})(x) conj(beta)(x)
    // is (q-1)^n when prod rho_i^{a_i} = beta and zero otherwise.
    for (i64 n = 1; n <= 3; ++n) {
      const i64 monomials = rng.between(1, 3);
      std::vector<std::vector<i64>> rows(monomials, std::vector<i64>(n, 0));
      for (auto& row : rows) {
        for (i64& v : row) v = rng.below(unit);
      }
      std::vector<i64> beta(n, 0);
      for (i64& v : beta) v = rng.below(unit);
      auto inst = HypergeometricInstance::create(field, rows, beta);
      i64 points = 1;
      for (i64 i = 0; i < n; ++i) points *= unit;
      i64 tuples = 1;
      for (i64 i = 0; i < inst.big_n; ++i) tuples *= unit;

      auto run_case = [&](const std::vector<i64>& rho) {
        std::vector<i64> combined(n, 0);
        bool in_lattice = true;
        for (i64 j = 0; j < n; ++j) {
          i64 acc = 0;
          for (i64 i = 0; i < inst.big_n; ++i) {
            acc = mod_reduce(acc + rho[i] * inst.rows[i][j], unit);
          }
          combined[j] = mod_reduce(acc - inst.beta[j], unit);
          if (combined[j] != 0) in_lattice = false;
        }
        CycValue expected = in_lattice ? CycValue::integer(points) : CycValue::integer(0);
        return character_product_sum(*field, combined) == expected;
      };

      bool ok = true;
      std::vector<i64> rho(inst.big_n, 0);
      if (tuples <= kExhaustiveCharacterCap) {
        for (i64 idx = 0; idx < tuples && ok; ++idx) {
          i64 rem = idx;
          for (i64 i = 0; i < inst.big_n; ++i) {
            rho[i] = rem % unit;
            rem /= unit;
          }
          ok = run_case(rho);
        }
      } else {
        for (i64 s = 0; s < 100 && ok; ++s) {
          for (i64& k : rho) k = rng.below(unit);
          ok = run_case(rho);
        }
      }
      checks.push_back({check_name({"orthogonality", "torus", "q=" + std::to_string(q),
                                    "n=" + std::to_string(n)}),
                        ok});
    }
  }
  return checks;
}

std::vector<Check> suite_fourier(i64 qmax, u64 seed) {
  std::vector<Check> checks;
  if (qmax < 5) return checks;
  SplitMix64 rng(seed ^ 0x666f7572ULL);
  auto field = Field::build(5, 1);
  const i64 unit = field->unit_order();
  AddCharTwist twist(field, 1);
  GaussSumCache cache(field);

  for (i64 draw = 0; draw < 2; ++draw) {
    // n = 1, N = 2.
    std::vector<std::vector<i64>> rows = {{rng.below(unit)}, {rng.below(unit)}};
    std::vector<i64> beta = {rng.below(unit)};
    auto inst = HypergeometricInstance::create(field, rows, beta);

    // All 16 lambda values and their exponential sums.
    std::vector<std::vector<i64>> lambdas;
    std::vector<CycValue> sums;
    for (i64 j1 = 0; j1 < unit; ++j1) {
      for (i64 j2 = 0; j2 < unit; ++j2) {
        std::vector<i64> enc = {field->pow_of_generator(j1), field->pow_of_generator(j2)};
        sums.push_back(exponential_sum(inst, Lambda::create(*field, enc), twist));
        lambdas.push_back({j1, j2});
      }
    }

    // Brute-force coefficient (q-1)^{-N} sum_lambda S(lambda) conj(rho)(lambda)
    // against the closed form, for every character pair rho.
    bool coeffs_ok = true;
    std::vector<CycValue> coefficients;
    for (i64 r1 = 0; r1 < unit && coeffs_ok; ++r1) {
      for (i64 r2 = 0; r2 < unit; ++r2) {
        CycValue acc = CycValue::zero(field->conductor());
        for (size_t li = 0; li < lambdas.size(); ++li) {
          i64 rot = mod_reduce(-(r1 * lambdas[li][0] + r2 * lambdas[li][1]), unit);
          acc += sums[li].times_root(field->p() * rot);
        }
        CycValue brute = acc.scalar_div(unit * unit);
        CycValue closed = fourier_coefficient(inst, {r1, r2}, twist, &cache);
        coefficients.push_back(closed);
        if (brute != closed) {
          coeffs_ok = false;
          break;
        }
      }
    }
    checks.push_back({check_name({"fourier", "q=5", "coefficients",
                                  "draw=" + std::to_string(draw)}),
                      coeffs_ok});

    // Reconstruction: sum_rho c_rho rho(lambda) recovers S at every lambda.
    bool recon_ok = coeffs_ok;
    if (recon_ok) {
      for (size_t li = 0; li < lambdas.size() && recon_ok; ++li) {
        CycValue acc = CycValue::zero(field->conductor());
        for (i64 r1 = 0; r1 < unit; ++r1) {
          for (i64 r2 = 0; r2 < unit; ++r2) {
            i64 rot = mod_reduce(r1 * lambdas[li][0] + r2 * lambdas[li][1], unit);
            acc += coefficients[r1 * unit + r2].times_root(field->p() * rot);
          }
        }
        recon_ok = acc == sums[li];
      }
    }
    checks.push_back({check_name({"fourier", "q=5", "reconstruction",
                                  "draw=" + std::to_string(draw)}),
                      recon_ok});
  }
  return checks;
}

std::vector<Check> suite_theorem13(i64 qmax, u64 seed) {
  std::vector<Check> checks;
  SplitMix64 rng(seed ^ 0x74313300ULL);
  struct FieldParams {
    i64 q, p, a;
  };
  const FieldParams cases[] = {{3, 3, 1}, {4, 2, 2}, {5, 5, 1}, {7, 7, 1}, {8, 2, 3}, {9, 3, 2}};
  for (const auto& params : cases) {
    if (params.q > qmax) continue;
    auto field = Field::build(params.p, params.a);
    GaussSumCache cache(field);
    for (i64 i = 0; i < 25; ++i) {
      auto inst = random_instance(rng, field, 3, 4);
      bool ok = true;
      for (i64 s = 0; s < 10; ++s) {
        Lambda lambda = random_lambda(rng, *field, inst.big_n);
        AddCharTwist twist(field, random_unit_encoding(rng, *field));
        CycValue fa = hypergeometric_function(inst, lambda, twist, &cache);
        CycValue sa = exponential_sum(inst, lambda, twist);
        if (fa != sa) {
          ok = false;
          break;
        }
      }
      checks.push_back({check_name({"theorem13", "q=" + std::to_string(params.q),
                                    "instance=" + std::to_string(i)}),
                        ok});
    }
  }
  return checks;
}

std::vector<Check> suite_mccarthy(i64 qmax, u64 seed) {
  std::vector<Check> checks;
  SplitMix64 rng(seed ^ 0x6d636361ULL);
  for (i64 q : filter_up_to({5, 7}, qmax)) {
    auto field = Field::build(q, 1);
    const i64 unit = q - 1;
    for (i64 k = 1; k <= 2; ++k) {
      for (i64 draw = 0; draw < 2; ++draw) {
        std::vector<i64> alphas(2 * k - 1);
        for (i64& v : alphas) v = rng.below(unit);
        AddCharTwist twist(field, 1);
        bool normalized_ok = true;
        bool sum_ok = true;
        for (i64 t = 1; t < q; ++t) {
          if (!mccarthy_normalization_check(field, alphas, t, twist)) normalized_ok = false;
          if (!mccarthy_specialization_check(field, alphas, t, twist)) sum_ok = false;
        }
        const std::string tag = "q=" + std::to_string(q) + ".k=" + std::to_string(k) +
                                ".draw=" + std::to_string(draw);
        checks.push_back({"mccarthy.normalized_fa." + tag, normalized_ok});
        checks.push_back({"mccarthy.exponential_sum." + tag, sum_ok});
      }
    }
  }
  return checks;
}

std::vector<Check> suite_twist(i64 qmax, u64 seed) {
  std::vector<Check> checks;
  SplitMix64 rng(seed ^ 0x74776973ULL);
  for (i64 q : filter_up_to({5, 7}, qmax)) {
    auto field = Field::build(q, 1);
    const i64 unit = q - 1;

    bool gauss_ok = true;
    for (i64 k = 0; k < unit && gauss_ok; ++k) {
      MultChar chi(field, k);
      for (i64 c = 1; c < q && gauss_ok; ++c) {
        gauss_ok = twist_relation_check(chi, field->element_from_encoding(c));
      }
    }
    checks.push_back({check_name({"twist", "gauss_sum", "q=" + std::to_string(q)}), gauss_ok});

    for (i64 i = 0; i < 5; ++i) {
      auto inst = random_instance(rng, field, 3, 4);
      GaussSumCache cache(field);
      Lambda lambda = random_lambda(rng, *field, inst.big_n);
      bool ok = true;
      for (i64 c = 1; c < q && ok; ++c) {
        std::vector<i64> scaled(inst.big_n);
        for (i64 j = 0; j < inst.big_n; ++j) {
          scaled[j] = field->mul_enc(c, lambda.encodings[j]);
        }
        CycValue twisted =
            hypergeometric_function(inst, lambda, AddCharTwist(field, c), &cache);
        CycValue standard = hypergeometric_function(inst, Lambda::create(*field, scaled),
                                                    AddCharTwist(field, 1), &cache);
        ok = twisted == standard;
      }
      checks.push_back({check_name({"twist", "hypergeometric", "q=" + std::to_string(q),
                                    "instance=" + std::to_string(i)}),
                        ok});
    }
  }
  return checks;
}

}  // namespace ffhyper
