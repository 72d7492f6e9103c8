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
 // Shared fixtures: the golden rotation and its natural partition.

#ifndef IETWORDS_TESTS_FIXTURES_HPP
#define IETWORDS_TESTS_FIXTURES_HPP

#include "ietwords/ietwords.hpp"
#include "ietwords/selftest.hpp"

namespace fixtures {

using ietwords::AffinePiece;
using ietwords::Component;
using ietwords::ExactScalar;
using ietwords::HalfOpenInterval;
using ietwords::PiecewiseMap;
using ietwords::Slope;

inline ExactScalar q(std::int64_t n, std::int64_t d = 1, std::int64_t field = 5) {
  return ExactScalar::rational(n, d, field);
}

inline ExactScalar alpha() { return ietwords::make_scalar(-1, 2, 1, 2, 5); }

/// Rotation by alpha: [0, 1 - alpha) -> x + alpha, [1 - alpha, 1) -> x + alpha - 1.
inline PiecewiseMap golden_rotation() {
  const auto a = alpha();
  return PiecewiseMap::checked({{HalfOpenInterval(q(0), q(1) - a), Slope::plus, a},
                                {HalfOpenInterval(q(1) - a, q(1)), Slope::plus, a - q(1)}});
}

/// {"0": [0, 1 - alpha), "1": [1 - alpha, 1)}.
inline ietwords::Subdivision natural_partition() {
  const auto a = alpha();
  return ietwords::canonicalize({{"0", {Component::half_open(q(0), q(1) - a)}},
                                 {"1", {Component::half_open(q(1) - a, q(1))}}});
}

inline PiecewiseMap identity(std::int64_t field = 5) { return ietwords::identity_map(field); }

inline ietwords::Subdivision halves(std::int64_t field = 5) {
  return ietwords::canonicalize({{"A", {Component::half_open(q(0, 1, field), q(1, 2, field))}},
                                 {"B", {Component::half_open(q(1, 2, field), q(1, 1, field))}}});
}

}  // namespace fixtures

#endif  // IETWORDS_TESTS_FIXTURES_HPP
