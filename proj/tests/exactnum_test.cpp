/* Copyright 2026 The iet-words Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <random>

#include <gtest/gtest.h>

#include "ietwords/exactnum.hpp"
#include "ietwords/scalar_text.hpp"
#include "oracles.hpp"

namespace ietwords {
namespace {

const ExactScalar kAlpha = make_scalar(-1, 2, 1, 2, 5);

ExactScalar q(std::int64_t n, std::int64_t d = 1, std::int64_t field = 5) {
  return ExactScalar::rational(n, d, field);
}

ExactScalar random_scalar(std::mt19937_64& rng, std::int64_t field = 5) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  return make_scalar(pick(-40, 40), pick(1, 30), pick(-40, 40), pick(1, 30), field);
}

TEST(MakeScalar, RationalConstruction) {
  const auto half = make_scalar(1, 2, 0, 1, 0);
  EXPECT_EQ(half.a_num(), 1);
  EXPECT_EQ(half.a_den(), 2);
  EXPECT_EQ(half.b_num(), 0);
  EXPECT_EQ(half.b_den(), 1);
  EXPECT_EQ(half.radicand(), 0);
}

TEST(MakeScalar, GoldenConjugate) {
  EXPECT_EQ(kAlpha.a_num(), -1);
  EXPECT_EQ(kAlpha.a_den(), 2);
  EXPECT_EQ(kAlpha.b_num(), 1);
  EXPECT_EQ(kAlpha.b_den(), 2);
  EXPECT_EQ(kAlpha.to_string(), "-1/2+1/2*sqrt(5)");
}

TEST(MakeScalar, Errors) {
  EXPECT_THROW(make_scalar(1, 0, 0, 1, 0), ZeroDenominator);
  EXPECT_THROW(make_scalar(1, 1, 0, 0, 0), ZeroDenominator);
  EXPECT_THROW(make_scalar(1, 1, 1, 1, 8), NonSquarefreeRadicand);
  EXPECT_THROW(make_scalar(1, 1, 1, 1, 4), NonSquarefreeRadicand);
  EXPECT_NO_THROW(make_scalar(1, 1, 1, 1, 30));
}

TEST(MakeScalar, SignsMoveIntoNumerators) {
  const auto x = make_scalar(1, -2, 3, -4, 5);
  EXPECT_EQ(x.a_num(), -1);
  EXPECT_EQ(x.a_den(), 2);
  EXPECT_EQ(x.b_num(), -3);
  EXPECT_EQ(x.b_den(), 4);
}

TEST(MakeScalar, RationalFieldsFoldTheRadical) {
  // sqrt(1) = 1, and in d = 0 the radical part vanishes.
  EXPECT_EQ(make_scalar(1, 2, 1, 2, 1), make_scalar(1, 1, 0, 1, 1));
  EXPECT_EQ(make_scalar(1, 2, 7, 3, 0), make_scalar(1, 2, 0, 1, 0));
}

TEST(MakeScalar, ZeroKeepsItsField) {
  const auto z = make_scalar(0, 1, 0, 1, 5);
  EXPECT_EQ(z.radicand(), 5);
  EXPECT_EQ(kAlpha - kAlpha, z);
}

TEST(MakeScalar, CanonicalFormIsUnique) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_scalar(rng);
    const auto k = static_cast<std::int64_t>(rng() % 9) + 2;
    const auto scaled = make_scalar(x.a_num() * k, x.a_den() * k, x.b_num() * -k, x.b_den() * -k, 5);
    EXPECT_EQ(scaled, x);
    EXPECT_EQ(scaled.a_num(), x.a_num());
    EXPECT_EQ(scaled.b_den(), x.b_den());
  }
}

TEST(Cmp, Examples) {
  EXPECT_EQ(cmp(q(1, 2), q(1, 3)), std::strong_ordering::greater);
  // 3(sqrt5 - 1) < 4  <=>  45 < 49
  EXPECT_EQ(cmp(kAlpha, q(2, 3)), std::strong_ordering::less);
  EXPECT_EQ(oracle::decimal_cmp(kAlpha, q(2, 3)), -1);
  EXPECT_EQ(cmp(kAlpha, kAlpha), std::strong_ordering::equal);
}

TEST(Cmp, FieldMismatch) {
  EXPECT_THROW(cmp(q(1, 2, 2), q(1, 2, 5)), FieldMismatch);
  EXPECT_THROW(q(1, 2, 2) + q(1, 2, 5), FieldMismatch);
  EXPECT_THROW(q(1, 2, 2) * q(1, 2, 5), FieldMismatch);
  EXPECT_FALSE(q(1, 2, 2) == q(1, 2, 5));
}

TEST(Cmp, AgreesWithDecimalOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto x = random_scalar(rng);
    const auto y = (i % 10 == 0) ? x + q(0) : random_scalar(rng);
    const auto c = cmp(x, y);
    const int expected = oracle::decimal_cmp(x, y);
    ASSERT_EQ(c < 0 ? -1 : (c > 0 ? 1 : 0), expected) << x << " vs " << y;
  }
}

TEST(Cmp, TranslationInvariant) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    EXPECT_EQ(cmp(x, y), cmp(x + z, y + z));
  }
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_EQ(kAlpha * kAlpha, make_scalar(3, 2, -1, 2, 5));
  EXPECT_EQ(q(1) - kAlpha, make_scalar(3, 2, -1, 2, 5));
  EXPECT_EQ(make_scalar(1, 2, 1, 2, 5) * make_scalar(-1, 2, 1, 2, 5), q(1));
  EXPECT_EQ(-kAlpha, make_scalar(1, 2, -1, 2, 5));
}

TEST(Arithmetic, RingAxioms) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x - x, q(0));
  }
}

TEST(Mod1, Examples) {
  EXPECT_EQ(mod1(q(3, 2)), q(1, 2));
  // 2 alpha = sqrt5 - 1 lies in (1, 2).
  EXPECT_EQ(oracle::decimal_cmp(kAlpha + kAlpha, q(1)), 1);
  EXPECT_EQ(oracle::decimal_cmp(kAlpha + kAlpha, q(2)), -1);
  EXPECT_EQ(mod1(kAlpha + kAlpha), kAlpha + kAlpha - q(1));
  EXPECT_EQ(mod1(q(0)), q(0));
  EXPECT_EQ(mod1(q(-1, 3)), q(2, 3));
  EXPECT_EQ(mod1(q(-1)), q(0));
}

TEST(Mod1, RejectsWideInputs) {
  EXPECT_THROW(mod1(q(2)), OutOfExpectedRange);
  EXPECT_THROW(mod1(q(-3, 2)), OutOfExpectedRange);
}

TEST(Floor, MatchesDecimalOracle) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_scalar(rng);
    const BigInt f = x.floor();
    EXPECT_LE(oracle::decimal_cmp(ExactScalar::rational(f, 1, 5), x), 0);
    EXPECT_EQ(oracle::decimal_cmp(ExactScalar::rational(f + 1, 1, 5), x), 1);
  }
}

TEST(ScalarText, ParseExamples) {
  EXPECT_EQ(parse_scalar("1/2"), make_scalar(1, 2, 0, 1, 0));
  EXPECT_EQ(parse_scalar("-1/2+1/2*sqrt(5)"), kAlpha);
  EXPECT_EQ(parse_scalar("1/2-1/2*sqrt(5)"), make_scalar(1, 2, -1, 2, 5));
  EXPECT_EQ(parse_scalar("3", 5), q(3));
  EXPECT_EQ(parse_scalar("0+1*sqrt(2)").to_string(), "0+1*sqrt(2)");
  EXPECT_THROW(parse_scalar("1/0"), ZeroDenominator);
}

TEST(ScalarText, SyntaxErrorsCarryPositions) {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_scalar(text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("1/"), 2u);
  EXPECT_EQ(position_of("1+2"), 3u);
  EXPECT_EQ(position_of("1+2*sqrt(5"), 10u);
  EXPECT_EQ(position_of("1/2 "), 3u);
  EXPECT_EQ(position_of("1+1*sqrt(5))"), 11u);
}

TEST(ScalarText, FieldChecks) {
  EXPECT_THROW(parse_scalar("1+1*sqrt(2)", 5), FieldMismatch);
  EXPECT_THROW(parse_scalar("1+1*sqrt(12)"), NonSquarefreeRadicand);
  EXPECT_EQ(parse_scalar("1/3", 5).radicand(), 5);
}

TEST(ScalarText, RoundTrips) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_scalar(rng);
    EXPECT_EQ(parse_scalar(x.to_string(), 5), x) << x;
  }
  EXPECT_EQ(parse_scalar(q(0).to_string(), 5), q(0));
}

}  // namespace
}  // namespace ietwords
