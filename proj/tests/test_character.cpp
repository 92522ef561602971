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

#include "ffhyper/character.hpp"

#include <doctest.h>

#include <cmath>

using namespace ffhyper;

namespace {

// Direct Gauss-sum oracle: evaluate chi and Psi element by element and
// multiply as cyclotomic values, independent of the kernel's exponent walk.
CycValue gauss_sum_oracle(const MultChar& chi, const AddCharTwist& twist) {
  const auto& f = *chi.field();
  CycValue acc = CycValue::zero(f.conductor());
  for (i64 enc = 1; enc < f.q(); ++enc) {
    acc += chi.eval_encoding(enc) * twist.eval_encoding(enc);
  }
  return acc;
}

}  // namespace

TEST_CASE("trivial character is constantly one") {
  auto f = Field::build(5, 1);
  MultChar trivial(f, 0);
  for (i64 enc = 1; enc < 5; ++enc) {
    CHECK(trivial.eval_encoding(enc) == CycValue::integer(1));
  }
  CHECK_THROWS_AS(trivial.eval_encoding(0), std::invalid_argument);
}

TEST_CASE("quadratic character of F_5 sorts squares from non-squares") {
  auto f = Field::build(5, 1);
  MultChar quadratic(f, 2);
  CHECK(quadratic.eval_encoding(4) == CycValue::integer(1));    // 4 = 2^2
  CHECK(quadratic.eval_encoding(2) == CycValue::integer(-1));   // 2 = g^1
  CHECK(quadratic.eval_encoding(1) == CycValue::integer(1));
}

TEST_CASE("characters multiply by exponent addition") {
  auto f = Field::build(7, 1);
  for (i64 k = 0; k < 6; ++k) {
    for (i64 l = 0; l < 6; ++l) {
      MultChar combined = MultChar(f, k) * MultChar(f, l);
      CHECK(combined.exponent() == mod_reduce(k + l, 6));
      for (i64 enc = 1; enc < 7; ++enc) {
        CHECK(combined.eval_encoding(enc) ==
              MultChar(f, k).eval_encoding(enc) * MultChar(f, l).eval_encoding(enc));
      }
    }
  }
  CHECK(MultChar(f, 2).conjugate().exponent() == 4);
}

TEST_CASE("additive characters evaluate through the trace") {
  auto f5 = Field::build(5, 1);
  AddCharTwist psi5(f5, 1);
  CHECK(psi5.eval_encoding(0) == CycValue::integer(1));
  CHECK(psi5.eval_encoding(2) == CycValue::root_of_unity(5, 2));

  auto f9 = Field::build(3, 2);
  AddCharTwist psi9(f9, 1);
  CHECK(psi9.eval_encoding(3) == CycValue::integer(1));  // Tr(x) = 0

  // Homomorphism Psi(x+y) = Psi(x) Psi(y), exhaustively over F_9.
  for (i64 x = 0; x < 9; ++x) {
    for (i64 y = 0; y < 9; ++y) {
      CHECK(psi9.eval_encoding(f9->add_enc(x, y)) ==
            psi9.eval_encoding(x) * psi9.eval_encoding(y));
    }
  }

  CHECK_THROWS_AS(AddCharTwist(f9, 0), std::invalid_argument);
}

TEST_CASE("Gauss sum of the trivial character is -1") {
  for (auto [p, a] : {std::pair<i64, i64>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto f = Field::build(p, a);
    CHECK(gauss_sum(MultChar(f, 0), AddCharTwist(f, 1)) == CycValue::integer(-1));
  }
}

TEST_CASE("small Gauss sums match explicit expansions") {
  auto f3 = Field::build(3, 1);
  CHECK(gauss_sum(MultChar(f3, 1), AddCharTwist(f3, 1)) ==
        CycValue::root_of_unity(3, 1) - CycValue::root_of_unity(3, 2));

  auto f5 = Field::build(5, 1);
  CycValue expected = CycValue::root_of_unity(5, 1) - CycValue::root_of_unity(5, 2) -
                      CycValue::root_of_unity(5, 3) + CycValue::root_of_unity(5, 4);
  CHECK(gauss_sum(MultChar(f5, 2), AddCharTwist(f5, 1)) == expected);
}

TEST_CASE("Gauss sums agree with the per-element oracle") {
  for (auto [p, a] : {std::pair<i64, i64>{5, 1}, {3, 2}, {2, 3}}) {
    auto f = Field::build(p, a);
    for (i64 k = 0; k < f->unit_order(); ++k) {
      for (i64 c = 1; c < std::min<i64>(f->q(), 4); ++c) {
        MultChar chi(f, k);
        AddCharTwist twist(f, c);
        CHECK(gauss_sum(chi, twist) == gauss_sum_oracle(chi, twist));
      }
    }
  }
}

TEST_CASE("quadratic Gauss sums carry the classical values") {
  // Sign of the classical quadratic sum: sqrt(p) for p = 1 mod 4 and
  // i sqrt(p) for p = 3 mod 4 (the canonical generator is a non-residue, so
  // the character with exponent (q-1)/2 is the Legendre symbol).
  for (i64 p : {5, 13, 17}) {
    auto f = Field::build(p, 1);
    auto [re, im] = gauss_sum(MultChar(f, (p - 1) / 2), AddCharTwist(f, 1)).to_complex();
    CHECK(std::abs(re - std::sqrt(static_cast<double>(p))) < 1e-9);
    CHECK(std::abs(im) < 1e-9);
  }
  for (i64 p : {3, 7, 11, 19, 23}) {
    auto f = Field::build(p, 1);
    auto [re, im] = gauss_sum(MultChar(f, (p - 1) / 2), AddCharTwist(f, 1)).to_complex();
    CHECK(std::abs(re) < 1e-9);
    CHECK(std::abs(im - std::sqrt(static_cast<double>(p))) < 1e-9);
  }

  // Lifting to the quadratic extension squares and negates the sum, so the
  // quadratic sums over F_9 and F_25 are exact rational integers.
  auto f9 = Field::build(3, 2);
  CHECK(gauss_sum(MultChar(f9, 4), AddCharTwist(f9, 1)) == CycValue::integer(3));
  auto f25 = Field::build(5, 2);
  CHECK(gauss_sum(MultChar(f25, 12), AddCharTwist(f25, 1)) == CycValue::integer(-5));
}

TEST_CASE("nontrivial Gauss sums have norm q") {
  for (auto [p, a] : {std::pair<i64, i64>{3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    auto f = Field::build(p, a);
    for (i64 k = 1; k < f->unit_order(); ++k) {
      CycValue g = gauss_sum(MultChar(f, k), AddCharTwist(f, 1));
      CHECK(g * g.conjugate() == CycValue::integer(f->q()));
    }
  }
}

TEST_CASE("twisting scales Gauss sums by a conjugate character value") {
  auto f5 = Field::build(5, 1);
  MultChar quadratic(f5, 2);
  CHECK(twist_relation_check(quadratic, f5->one()));
  CHECK(twist_relation_check(quadratic, f5->element_from_encoding(2)));
  CHECK(quadratic.conjugate().eval_encoding(2) == CycValue::integer(-1));

  auto f7 = Field::build(7, 1);
  for (i64 c = 1; c < 7; ++c) {
    CHECK(twist_relation_check(MultChar(f7, 1), f7->element_from_encoding(c)));
  }
  CHECK_THROWS_AS(twist_relation_check(quadratic, f5->zero()), std::invalid_argument);
}

TEST_CASE("the Gauss-sum cache returns the computed values") {
  auto f = Field::build(5, 1);
  GaussSumCache cache(f);
  for (i64 k = 0; k < 4; ++k) {
    CycValue direct = gauss_sum(MultChar(f, k), AddCharTwist(f, 1));
    CHECK(cache.get(k, 1) == direct);
    CHECK(cache.get(k, 1) == direct);  // second hit served from the table
    CHECK(cache.get(k - 4, 1) == direct);  // exponent reduced mod q-1
  }
}
