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

namespace ietwords {
namespace {

using fixtures::q;

TEST(Component, EmptinessAndPoints) {
  EXPECT_FALSE(Component::half_open(q(0), q(1, 2)).empty());
  EXPECT_TRUE((Component{q(1, 2), true, q(1, 2), false}).empty());
  EXPECT_TRUE((Component{q(1, 2), false, q(1, 2), true}).empty());
  EXPECT_FALSE(Component::point(q(1, 2)).empty());
  EXPECT_TRUE(Component::point(q(1, 2)).contains(q(1, 2)));
  EXPECT_FALSE(Component::half_open(q(0), q(1, 2)).contains(q(1, 2)));
  EXPECT_TRUE((Component{q(0), false, q(1, 2), true}).contains(q(1, 2)));
  EXPECT_FALSE((Component{q(0), false, q(1, 2), true}).contains(q(0)));
}

TEST(Component, Representative) {
  EXPECT_EQ(Component::half_open(q(1, 4), q(1, 2)).representative(), q(1, 4));
  EXPECT_EQ((Component{q(1, 4), false, q(1, 2), true}).representative(), q(1, 2));
  EXPECT_EQ((Component{q(1, 4), false, q(1, 2), false}).representative(), q(3, 8));
}

TEST(BoundarySet, MergesAdjacentHalfOpenPieces) {
  const auto s = BoundarySet::from_components({Component::half_open(q(1, 2), q(1)), Component::half_open(q(0), q(1, 2))});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.components()[0], Component::half_open(q(0), q(1)));
}

TEST(BoundarySet, OpenGapPointKeepsComponentsApart) {
  // [0, 1/2) and (1/2, 1) miss the point 1/2.
  const auto s = BoundarySet::from_components(
      {Component::half_open(q(0), q(1, 2)), Component{q(1, 2), false, q(1), false}});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_FALSE(s.contains(q(1, 2)));
  // Filling the point joins them.
  EXPECT_EQ(s.unite(BoundarySet::of(Component::point(q(1, 2)))).size(), 1u);
}

TEST(BoundarySet, IntersectionKeepsFlags) {
  const auto a = BoundarySet::of(Component{q(0), true, q(1, 2), true});
  const auto b = BoundarySet::of(Component{q(1, 2), true, q(1), false});
  const auto c = a.intersect(b);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.components()[0].is_point());
  EXPECT_FALSE(a.intersects(BoundarySet::of(Component{q(1, 2), false, q(1), false})));
}

// Membership of the union/intersection agrees with pointwise logic on a
// fine rational grid.
TEST(BoundarySet, AlgebraMatchesPointwiseMembership) {
  std::mt19937_64 rng(3);
  auto random_set = [&] {
    std::vector<Component> parts;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      auto a = static_cast<std::int64_t>(rng() % 12), b = static_cast<std::int64_t>(rng() % 12);
      if (a > b) std::swap(a, b);
      parts.push_back({q(a, 12), rng() % 2 == 0, q(b, 12), rng() % 2 == 0});
    }
    return BoundarySet::from_components(parts);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_set(), b = random_set();
    const auto u = a.unite(b), x = a.intersect(b);
    for (std::int64_t k = 0; k <= 24; ++k) {
      const auto p = q(k, 24);
      ASSERT_EQ(u.contains(p), a.contains(p) || b.contains(p));
      ASSERT_EQ(x.contains(p), a.contains(p) && b.contains(p));
    }
    // Canonical: no two components could merge.
    for (std::size_t i = 1; i < u.size(); ++i) {
      ASSERT_LT(u.components()[i - 1].high(), u.components()[i].low());
    }
  }
}

}  // namespace
}  // namespace ietwords
