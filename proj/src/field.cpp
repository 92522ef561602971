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

#include "ffhyper/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffhyper {
namespace {

// Dense polynomials over Z/p, coefficient vectors with constant term first.
// Trailing zeros are allowed; degree is determined by the last nonzero entry.
using Poly = std::vector<i64>;

i64 poly_degree(const Poly& f) {
  for (i64 i = static_cast<i64>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g.
Poly poly_mod(Poly f, const Poly& g, i64 p) {
  const i64 dg = poly_degree(g);
  for (i64 i = poly_degree(f); i >= dg; --i) {
    i64 c = f[i];
    if (c == 0) continue;
    for (i64 j = 0; j <= dg; ++j) {
      f[i - dg + j] = mod_reduce(f[i - dg + j] - c * g[j], p);
    }
  }
  f.resize(dg);
  return f;
}

Poly poly_mul_mod(const Poly& f, const Poly& g, const Poly& modulus, i64 p) {
  if (f.empty() || g.empty()) return {};
  Poly prod(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (size_t j = 0; j < g.size(); ++j) {
      prod[i + j] = mod_reduce(prod[i + j] + f[i] * g[j], p);
    }
  }
  return poly_mod(std::move(prod), modulus, p);
}

Poly poly_pow_mod(Poly base, i64 e, const Poly& modulus, i64 p) {
  Poly result{1};
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, modulus, p);
    base = poly_mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly f, Poly g, i64 p) {
  poly_trim(f);
  poly_trim(g);
  while (!g.empty()) {
    // Make g monic before reducing.
    i64 lead_inv = mod_inverse(g.back(), p);
    for (i64& c : g) c = mod_reduce(c * lead_inv, p);
    Poly r = poly_mod(f, g, p);
    poly_trim(r);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

// Degree-a monic f is irreducible over Z/p iff it shares no factor with
// x^{p^i} - x for any i <= a/2 (a factorization of f would contain an
// irreducible factor of degree at most a/2, and those divide x^{p^i} - x).
bool is_irreducible(const Poly& f, i64 p, i64 a) {
  if (a == 1) return true;
  Poly frob{0, 1};  // x
  for (i64 i = 1; 2 * i <= a; ++i) {
    frob = poly_pow_mod(frob, p, f, p);  // x^{p^i} mod f
    Poly diff = frob;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = mod_reduce(diff[1] - 1, p);
    Poly g = poly_gcd(f, diff, p);
    if (poly_degree(g) != 0) return false;
  }
  return true;
}

Poly decode_poly(i64 enc, i64 p, i64 a) {
  Poly c(a, 0);
  for (i64 i = 0; i < a; ++i) {
    c[i] = enc % p;
    enc /= p;
  }
  return c;
}

i64 encode_poly(const Poly& c, i64 p) {
  i64 enc = 0;
  for (i64 i = static_cast<i64>(c.size()) - 1; i >= 0; --i) {
    enc = enc * p + c[i];
  }
  return enc;
}

}  // namespace

std::shared_ptr<const Field> Field::build(i64 p, i64 a, i64 q_limit) {
  if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
  if (a < 1) throw std::invalid_argument("field: extension degree must be >= 1");

  i64 q = 1;
  for (i64 i = 0; i < a; ++i) {
    q = checked_mul(q, p, "field order");
    if (q > q_limit) {
      throw limit_error("field: q = p^a exceeds the configured bound");
    }
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->a_ = a;
  field->q_ = q;

  // Modulus: the monic irreducible of degree a minimal by integer encoding
  // sum c_i p^i.  Candidates are ordered by their lower-coefficient counter.
  for (i64 low = 0;; ++low) {
    Poly f = decode_poly(low, p, a);
    f.push_back(1);  // monic
    if (is_irreducible(f, p, a)) {
      field->modulus_ = std::move(f);
      break;
    }
  }
  const Poly& modulus = field->modulus_;

  // Generator: the element of F_q^x minimal by encoding whose order is q-1.
  const std::vector<i64> unit_primes = distinct_prime_factors(q - 1);
  for (i64 enc = 1; enc < q; ++enc) {
    Poly x = decode_poly(enc, p, a);
    bool generates = true;
    for (i64 ell : unit_primes) {
      Poly power = poly_pow_mod(x, (q - 1) / ell, modulus, p);
      poly_trim(power);
      if (power == Poly{1}) {
        generates = false;
        break;
      }
    }
    if (generates) {
      field->generator_enc_ = enc;
      break;
    }
  }

  // Power and log tables.
  field->pow_enc_.assign(q - 1, 0);
  field->log_enc_.assign(q, -1);
  Poly gen = decode_poly(field->generator_enc_, p, a);
  Poly cur{1};
  for (i64 j = 0; j < q - 1; ++j) {
    Poly padded = cur;
    padded.resize(a, 0);
    i64 enc = encode_poly(padded, p);
    field->pow_enc_[j] = enc;
    field->log_enc_[enc] = j;
    cur = poly_mul_mod(cur, gen, modulus, p);
  }

  // Trace table via linearity from the traces of the basis monomials x^i.
  std::vector<i64> basis_trace(a, 0);
  {
    // frobs[j] = x^{p^j} mod modulus.
    std::vector<Poly> frobs(a);
    frobs[0] = poly_mod(Poly{0, 1}, modulus, p);
    for (i64 j = 1; j < a; ++j) {
      frobs[j] = poly_pow_mod(frobs[j - 1], p, modulus, p);
    }
    std::vector<Poly> powers(a, Poly{1});  // powers[j] = frobs[j]^i
    for (i64 i = 0; i < a; ++i) {
      Poly sum(a, 0);
      for (i64 j = 0; j < a; ++j) {
        const Poly& term = powers[j];
        for (size_t t = 0; t < term.size(); ++t) {
          sum[t] = mod_reduce(sum[t] + term[t], p);
        }
        powers[j] = poly_mul_mod(powers[j], frobs[j], modulus, p);
      }
      for (i64 t = 1; t < a; ++t) {
        if (sum[t] != 0) throw std::logic_error("field: trace left the prime field");
      }
      basis_trace[i] = sum[0];
    }
  }
  field->trace_enc_.assign(q, 0);
  for (i64 enc = 0; enc < q; ++enc) {
    i64 rem = enc, tr = 0;
    for (i64 i = 0; i < a; ++i) {
      tr = mod_reduce(tr + (rem % p) * basis_trace[i], p);
      rem /= p;
    }
    field->trace_enc_[enc] = tr;
  }

  return field;
}

i64 Field::encoding(const FieldElement& x) const {
  const auto& c = x.coeffs();
  if (static_cast<i64>(c.size()) != a_) {
    throw std::invalid_argument("field: element has wrong coefficient count");
  }
  i64 enc = 0;
  for (i64 i = a_ - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= p_) {
      throw std::invalid_argument("field: element coefficient out of range");
    }
    enc = enc * p_ + c[i];
  }
  return enc;
}

FieldElement Field::element_from_encoding(i64 enc) const {
  if (enc < 0 || enc >= q_) {
    throw std::invalid_argument("field: element encoding out of range");
  }
  return FieldElement(decode_poly(enc, p_, a_));
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
  return element_from_encoding(add_enc(encoding(x), encoding(y)));
}

FieldElement Field::neg(const FieldElement& x) const {
  return element_from_encoding(neg_enc(encoding(x)));
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
  return element_from_encoding(mul_enc(encoding(x), encoding(y)));
}

FieldElement Field::inv(const FieldElement& x) const {
  i64 enc = encoding(x);
  if (enc == 0) throw std::invalid_argument("field: inversion of zero");
  return element_from_encoding(pow_enc_[mod_reduce(-log_enc_[enc], q_ - 1)]);
}

FieldElement Field::pow(const FieldElement& x, i64 e) const {
  i64 enc = encoding(x);
  if (enc == 0) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw std::invalid_argument("field: inversion of zero");
  }
  i64 j = mod_reduce(log_enc_[enc] * mod_reduce(e, q_ - 1), q_ - 1);
  return element_from_encoding(pow_enc_[j]);
}

i64 Field::log_of(i64 enc) const {
  if (enc <= 0 || enc >= q_) {
    throw std::invalid_argument("field: discrete log of zero or out-of-range element");
  }
  return log_enc_[enc];
}

i64 Field::add_enc(i64 x, i64 y) const {
  i64 enc = 0, scale = 1;
  for (i64 i = 0; i < a_; ++i) {
    enc += mod_reduce(x % p_ + y % p_, p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return enc;
}

i64 Field::mul_enc(i64 x, i64 y) const {
  if (x == 0 || y == 0) return 0;
  return pow_enc_[mod_reduce(log_enc_[x] + log_enc_[y], q_ - 1)];
}

i64 Field::neg_enc(i64 x) const {
  i64 enc = 0, scale = 1;
  for (i64 i = 0; i < a_; ++i) {
    enc += mod_reduce(-(x % p_), p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return enc;
}

bool Field::identical_to(const Field& other) const {
  return p_ == other.p_ && a_ == other.a_ && q_ == other.q_ &&
         modulus_ == other.modulus_ && generator_enc_ == other.generator_enc_ &&
         pow_enc_ == other.pow_enc_ && log_enc_ == other.log_enc_ &&
         trace_enc_ == other.trace_enc_;
}

}  // namespace ffhyper
