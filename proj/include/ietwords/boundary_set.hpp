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
 // Finite unions of intervals with explicit endpoint inclusion flags.

#ifndef IETWORDS_BOUNDARY_SET_HPP
#define IETWORDS_BOUNDARY_SET_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ietwords/errors.hpp"
#include "ietwords/exactnum.hpp"

namespace ietwords {

/// A position on the real line refined by one infinitesimal: `at` itself,
/// or the position just after `at`. Flagged intervals become half-open
/// ranges [low, high) of such positions, which makes union, intersection
/// and adjacency tests uniform regardless of endpoint flags.
struct Bound {
  ExactScalar at;
  bool after = false;

  friend bool operator==(const Bound&, const Bound&) = default;
  friend std::strong_ordering operator<=>(const Bound& x, const Bound& y) {
    if (auto c = x.at <=> y.at; c != 0) return c;
    return x.after <=> y.after;
  }
};

/// One interval with inclusion flags. Nonempty iff lo < hi, or lo == hi
/// with both flags set (a single point).
struct Component {
  ExactScalar lo;
  bool lo_in = true;
  ExactScalar hi;
  bool hi_in = false;

  static Component half_open(ExactScalar lo, ExactScalar hi) {
    return {std::move(lo), true, std::move(hi), false};
  }
  static Component point(const ExactScalar& x) { return {x, true, x, true}; }
  static Component from_bounds(const Bound& low, const Bound& high) {
    return {low.at, !low.after, high.at, high.after};
  }

  Bound low() const { return {lo, !lo_in}; }
  Bound high() const { return {hi, hi_in}; }

  bool empty() const { return low() >= high(); }
  bool is_point() const { return lo_in && hi_in && lo == hi; }

  bool contains(const ExactScalar& x) const {
    const Bound key{x, false};
    return low() <= key && key < high();
  }

  /// Some point of a nonempty component.
  ExactScalar representative() const {
    if (lo_in) return lo;
    if (hi_in) return hi;
    return halve(lo + hi);
  }

  std::string to_string() const {
    return std::string(lo_in ? "[" : "(") + lo.to_string() + ", " + hi.to_string() +
           (hi_in ? "]" : ")");
  }

  friend bool operator==(const Component&, const Component&) = default;
};

inline std::optional<Component> intersect(const Component& a, const Component& b) {
  const Bound low = std::max(a.low(), b.low());
  const Bound high = std::min(a.high(), b.high());
  if (low >= high) return std::nullopt;
  return Component::from_bounds(low, high);
}

/// Canonical finite union: components sorted, pairwise disjoint and
/// non-adjacent, so the component count is the number of maximal convex
/// pieces.
class BoundarySet {
 public:
  BoundarySet() = default;

  /// Union of arbitrary (possibly overlapping, unsorted) components.
  /// Empty components are dropped.
  static BoundarySet from_components(std::vector<Component> parts) {
    std::erase_if(parts, [](const Component& c) { return c.empty(); });
    std::sort(parts.begin(), parts.end(),
              [](const Component& x, const Component& y) { return x.low() < y.low(); });
    BoundarySet out;
    for (auto& c : parts) {
      if (!out.components_.empty() && c.low() <= out.components_.back().high()) {
        auto& last = out.components_.back();
        if (c.high() > last.high()) last = Component::from_bounds(last.low(), c.high());
      } else {
        out.components_.push_back(std::move(c));
      }
    }
    return out;
  }

  static BoundarySet of(Component c) { return from_components({std::move(c)}); }

  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  bool empty() const noexcept { return components_.empty(); }
  bool is_convex() const noexcept { return components_.size() == 1; }

  bool contains(const ExactScalar& x) const {
    const Bound key{x, false};
    auto it = std::upper_bound(components_.begin(), components_.end(), key,
                               [](const Bound& k, const Component& c) { return k < c.low(); });
    if (it == components_.begin()) return false;
    return key < std::prev(it)->high();
  }

  BoundarySet unite(const BoundarySet& other) const {
    std::vector<Component> parts = components_;
    parts.insert(parts.end(), other.components_.begin(), other.components_.end());
    return from_components(std::move(parts));
  }

  BoundarySet intersect(const BoundarySet& other) const {
    BoundarySet out;
    std::size_t i = 0, j = 0;
    while (i < components_.size() && j < other.components_.size()) {
      const auto& a = components_[i];
      const auto& b = other.components_[j];
      if (auto c = ietwords::intersect(a, b)) out.components_.push_back(*c);
      if (a.high() < b.high()) {
        ++i;
      } else {
        ++j;
      }
    }
    return out;
  }

  bool intersects(const BoundarySet& other) const { return !intersect(other).empty(); }

  std::string to_string() const {
    if (components_.empty()) return "{}";
    std::string out;
    for (const auto& c : components_) {
      if (!out.empty()) out += " u ";
      out += c.to_string();
    }
    return out;
  }

  friend bool operator==(const BoundarySet&, const BoundarySet&) = default;

 private:
  std::vector<Component> components_;
};

}  // namespace ietwords

#endif  // IETWORDS_BOUNDARY_SET_HPP
