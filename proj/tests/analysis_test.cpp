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

#include "fixtures.hpp"
#include "oracles.hpp"

namespace ietwords {
namespace {

using fixtures::alpha;
using fixtures::q;

SymbolicWord word_of(const std::string& s) { return SymbolicWord::from_letters(oracle::letters_of(s)); }

std::string repeat(const std::string& s, std::size_t times) {
  std::string out;
  for (std::size_t i = 0; i < times; ++i) out += s;
  return out;
}

TEST(Complexity, Examples) {
  const auto constant = word_of(std::string(50, 'A'));
  for (const auto& [n, p] : complexity(constant, 10).values) EXPECT_EQ(p, 1u) << n;
  EXPECT_EQ(complexity(word_of(repeat("AAB", 10)), 3).at(3), 3u);
  const auto fib = oracle::letters_of(oracle::fibonacci(1000));
  const auto profile = complexity(SymbolicWord::from_letters(fib), 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(profile.at(n), oracle::factor_count(fib, n));
    EXPECT_EQ(profile.at(n), n + 1);
  }
}

TEST(Complexity, Errors) {
  EXPECT_THROW(complexity(word_of("AB"), 3), PrefixTooShort);
  EXPECT_THROW(complexity(word_of("AB"), 0), InvalidLength);
}

TEST(Recurrence, Examples) {
  EXPECT_EQ(recurrence_window(word_of(std::string(40, 'A')), 3), 3u);
  EXPECT_FALSE(recurrence_window(word_of("A" + std::string(39, 'B')), 1).has_value());
  EXPECT_THROW(recurrence_window(word_of("ABAB"), 2), PrefixTooShort);
}

TEST(Recurrence, FibonacciAgainstQuadraticScan) {
  const auto fib = oracle::letters_of(oracle::fibonacci(10000));
  EXPECT_EQ(recurrence_window(SymbolicWord::from_letters(fib), 1), oracle::recurrence_window(fib, 1));
  const auto shorter = oracle::letters_of(oracle::fibonacci(1500));
  for (std::size_t n = 2; n <= 8; ++n) {
    EXPECT_EQ(recurrence_window(SymbolicWord::from_letters(shorter), n), oracle::recurrence_window(shorter, n)) << n;
  }
}

TEST(DetectPeriod, Examples) {
  EXPECT_EQ(detect_period(word_of(repeat("AAB", 10))), (Periodicity{0, 3}));
  EXPECT_EQ(detect_period(word_of(std::string(30, 'A'))), (Periodicity{0, 1}));
  EXPECT_FALSE(detect_period(word_of(oracle::fibonacci(1000))).has_value());
  EXPECT_EQ(detect_period(word_of("BA" + repeat("AAB", 10))), (Periodicity{2, 3}));
  EXPECT_THROW(detect_period(SymbolicWord::from_letters({})), InvalidLength);
}

TEST(DetectPeriod, FibonacciPrefixesAgainstDirectSearch) {
  for (std::size_t n : {40u, 100u, 233u, 300u, 500u, 985u, 1000u}) {
    const auto fib = oracle::letters_of(oracle::fibonacci(n));
    const auto got = detect_period(SymbolicWord::from_letters(fib));
    const auto want = oracle::period(fib);
    ASSERT_EQ(got.has_value(), want.has_value()) << n;
    if (got) {
      EXPECT_EQ(got->preperiod, want->first) << n;
      EXPECT_EQ(got->period, want->second) << n;
    }
  }
}

// Random small words: every analytic agrees with its brute-force oracle.
TEST(Oracles, RandomWords) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t length = 16 + rng() % 100;
    const std::size_t letters = 1 + rng() % 3;
    std::string s;
    if (trial % 3 == 0) {
      // Eventually periodic: random head, repeated block.
      const std::size_t head = rng() % 8, block = 1 + rng() % 6;
      std::string b;
      for (std::size_t i = 0; i < block; ++i) b += static_cast<char>('a' + rng() % letters);
      for (std::size_t i = 0; i < head; ++i) s += static_cast<char>('a' + rng() % letters);
      while (s.size() < length) s += b;
      s.resize(length);
    } else {
      for (std::size_t i = 0; i < length; ++i) s += static_cast<char>('a' + rng() % letters);
    }
    const auto v = oracle::letters_of(s);
    const auto w = SymbolicWord::from_letters(v);
    const std::size_t depth = std::min<std::size_t>(6, length);
    const auto profile = complexity(w, depth);
    for (std::size_t n = 1; n <= depth; ++n) ASSERT_EQ(profile.at(n), oracle::factor_count(v, n)) << s;
    for (std::size_t n = 1; 4 * n <= length && n <= 4; ++n) {
      ASSERT_EQ(recurrence_window(w, n), oracle::recurrence_window(v, n)) << s << " n=" << n;
    }
    const auto got = detect_period(w);
    const auto want = oracle::period(v);
    ASSERT_EQ(got.has_value(), want.has_value()) << s;
    if (got) {
      ASSERT_EQ(std::make_pair(got->preperiod, got->period), *want) << s;
    }
  }
}

TEST(Sturmian, GoldenWordHasMinimalComplexity) {
  const auto word = code(fixtures::golden_rotation(), fibonacci_partition(), alpha(), 100000);
  const auto profile = complexity(word, 100);
  for (const auto& [n, p] : profile.values) ASSERT_EQ(p, n + 1) << n;
}

TEST(IetComplexity, LinearBound) {
  InstanceGenerator gen(32, 5);
  for (int trial = 0; trial < 3; ++trial) {
    const auto k = static_cast<std::size_t>(gen.draw(3, 4));
    // Irrational cuts, so the exchange is not a rational rotation in disguise.
    std::vector<ExactScalar> cuts;
    while (cuts.size() + 1 < k) {
      auto c = gen.point();
      if (c.is_rational() || std::find(cuts.begin(), cuts.end(), c) != cuts.end()) continue;
      cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    const auto map = gen.translation_bijection(cuts);
    RawClasses raw;
    for (std::size_t i = 0; i < map.size(); ++i) {
      raw.push_back({std::string(1, static_cast<char>('a' + i)), {map.pieces()[i].domain.as_component()}});
    }
    const auto word = code(map, canonicalize(raw, 5), gen.point(), 100000);
    const auto profile = complexity(word, 50);
    for (const auto& [n, p] : profile.values) ASSERT_LE(p, (k - 1) * n + 1) << "k=" << k << " n=" << n;
  }
}

TEST(Gluing, DoesNotIncreaseComplexity) {
  InstanceGenerator gen(33, 5);
  for (int i = 0; i < 30; ++i) {
    const auto inst = gen.instance();
    const auto refined = refine_to_good(inst.subdivision, inst.map);
    const auto word = code(inst.map, refined.subdivision, inst.x0, 2000);
    const auto glued = glue_word(word, refined.gluing);
    const auto p = complexity(word, 20), g = complexity(glued, 20);
    for (std::size_t n = 1; n <= 20; ++n) ASSERT_LE(g.at(n), p.at(n));
  }
}

TEST(RecurrenceProfile, StopsWhereWindowsNeedMoreLetters) {
  const auto profile = recurrence_profile(word_of(repeat("AB", 10)), 50);
  EXPECT_EQ(profile.values.size(), 5u);
  EXPECT_EQ(profile.values[0].second, 2u);
}

}  // namespace
}  // namespace ietwords
