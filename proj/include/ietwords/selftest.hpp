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
 // Golden suites embedded in the CLI (`iet-words selftest`).

#ifndef IETWORDS_SELFTEST_HPP
#define IETWORDS_SELFTEST_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ietwords/analysis.hpp"
#include "ietwords/coding.hpp"
#include "ietwords/instances.hpp"
#include "ietwords/interval_map.hpp"
#include "ietwords/subdivision.hpp"

namespace ietwords {

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// alpha = (sqrt 5 - 1) / 2.
inline ExactScalar golden_conjugate() { return make_scalar(-1, 2, 1, 2, 5); }

/// The two continuity intervals of the rotation by alpha, labeled so that
/// the coding of alpha's orbit is the Fibonacci word: "1" on [0, 1 - alpha),
/// "0" on [1 - alpha, 1).
inline Subdivision fibonacci_partition() {
  const auto alpha = golden_conjugate();
  const auto zero = ExactScalar::integer(0, 5);
  const auto one = ExactScalar::integer(1, 5);
  return canonicalize({{"0", {Component::half_open(one - alpha, one)}},
                       {"1", {Component::half_open(zero, one - alpha)}}});
}

/// Fixed point of 0 -> 01, 1 -> 0, truncated to `length` letters.
inline std::vector<Letter> fibonacci_by_substitution(std::size_t length) {
  std::string w = "0";
  while (w.size() < length) {
    std::string next;
    for (char c : w) next += (c == '0') ? "01" : "0";
    w = std::move(next);
  }
  std::vector<Letter> out;
  for (std::size_t i = 0; i < length; ++i) out.emplace_back(1, w[i]);
  return out;
}

inline std::vector<SelftestCase> run_selftest(std::uint64_t seed, std::size_t length, std::size_t n_max) {
  std::vector<SelftestCase> results;
  auto record = [&](std::string name, bool ok, std::string detail) {
    results.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    const auto alpha = golden_conjugate();
    const auto word = code(rotation(alpha), fibonacci_partition(), alpha, length);
    const auto expected = SymbolicWord::from_letters(fibonacci_by_substitution(length));
    const auto mismatch = word.first_mismatch(expected);
    record("fibonacci prefix", !mismatch,
           mismatch ? "first mismatch at " + std::to_string(*mismatch) : std::to_string(length) + " letters");

    const std::size_t depth = std::min(n_max, length);
    const auto profile = complexity(word, depth);
    std::size_t bad = 0;
    for (const auto& [n, p] : profile.values) bad += (p != n + 1);
    record("sturmian complexity", bad == 0, "p(n) = n + 1 for n <= " + std::to_string(depth));
  }

  {
    InstanceGenerator gen(seed, 0);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 11 && ok; ++i) {
      std::int64_t p = 1, q = 3;
      if (i > 0) {
        q = static_cast<std::int64_t>(gen.draw(2, 40));
        do {
          p = static_cast<std::int64_t>(gen.draw(1, static_cast<std::uint64_t>(q - 1)));
        } while (std::gcd(p, q) != 1);
      }
      const auto zero = ExactScalar::integer(0, 0);
      const auto cut = ExactScalar::rational(static_cast<std::int64_t>(gen.draw(1, 9)), 10);
      const auto sub = canonicalize({{"a", {Component::half_open(zero, cut)}},
                                     {"b", {Component::half_open(cut, ExactScalar::integer(1))}}});
      const std::size_t n = std::max<std::size_t>(100, 3 * static_cast<std::size_t>(q));
      const auto period = detect_period(code(rotation(ExactScalar::rational(p, q)), sub, gen.point(), n));
      ok = period && period->preperiod == 0 && q % static_cast<std::int64_t>(period->period) == 0;
      detail = "rotation by " + std::to_string(p) + "/" + std::to_string(q);
    }
    record("rational rotation periods", ok, detail);
  }

  {
    InstanceGenerator gen(seed, 5);
    std::size_t failures = 0;
    const int instances = 20;
    for (int i = 0; i < instances; ++i) {
      const auto inst = gen.instance();
      const auto refined = refine_to_good(inst.subdivision, inst.map);
      const bool good = std::holds_alternative<GoodnessCertificate>(is_good(refined.subdivision, inst.map));
      const bool roundtrip = roundtrip_check(inst.map, inst.subdivision, inst.x0, length).ok();
      failures += !(good && roundtrip);
    }
    record("refinement round-trips", failures == 0,
           std::to_string(instances - failures) + "/" + std::to_string(instances) + " instances");
  }

  {
    InstanceGenerator gen(seed, 5);
    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
      const auto map = gen.translation_bijection(static_cast<std::size_t>(gen.draw(1, 6)));
      ok = iet_to_map(to_iet(map)) == map;
    }
    record("iet conversion", ok, "10 translation bijections");
  }
  return results;
}

}  // namespace ietwords

#endif  // IETWORDS_SELFTEST_HPP
