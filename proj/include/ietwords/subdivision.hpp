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
 // Colorings of [0, 1), the goodness predicate relative to a map, and
 // refinement into a good coloring together with the gluing back.

#ifndef IETWORDS_SUBDIVISION_HPP
#define IETWORDS_SUBDIVISION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ietwords/boundary_set.hpp"
#include "ietwords/errors.hpp"
#include "ietwords/exactnum.hpp"
#include "ietwords/interval_map.hpp"

namespace ietwords {

using Letter = std::string;

class OverlapError : public InvalidSubdivision {
 public:
  explicit OverlapError(ExactScalar witness)
      : InvalidSubdivision("color classes overlap at " + witness.to_string()),
        witness_(std::move(witness)) {}
  const ExactScalar& witness() const noexcept { return witness_; }

 private:
  ExactScalar witness_;
};

class CoverageGapError : public InvalidSubdivision {
 public:
  explicit CoverageGapError(ExactScalar witness)
      : InvalidSubdivision("no color class covers " + witness.to_string()),
        witness_(std::move(witness)) {}
  const ExactScalar& witness() const noexcept { return witness_; }

 private:
  ExactScalar witness_;
};

/// Raw, unchecked class description: letter -> list of intervals.
using RawClasses = std::vector<std::pair<Letter, std::vector<Component>>>;

/// A partition of [0, 1) into finitely many letter classes, each a finite
/// union of flagged intervals.
class Subdivision {
 public:
  const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
  const std::vector<BoundarySet>& classes() const noexcept { return classes_; }
  std::int64_t radicand() const noexcept { return d_; }

  std::size_t index_of(const Letter& letter) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), letter);
    if (it == alphabet_.end()) throw UnknownLetter("letter '" + letter + "' is not in the alphabet");
    return static_cast<std::size_t>(it - alphabet_.begin());
  }

  const BoundarySet& class_of(const Letter& letter) const { return classes_[index_of(letter)]; }

  std::size_t component_count() const {
    std::size_t n = 0;
    for (const auto& c : classes_) n += c.size();
    return n;
  }

  /// Index into alphabet() of the class holding x.
  std::size_t color_index(const ExactScalar& x) const {
    const auto zero = ExactScalar::integer(0, d_);
    const auto one = ExactScalar::integer(1, d_);
    if (x < zero || x >= one) throw PointOutsideDomain("point " + x.to_string() + " outside [0, 1)");
    const Bound key{x, false};
    auto it = std::upper_bound(index_.begin(), index_.end(), key,
                               [](const Bound& k, const Slot& s) { return k < s.low; });
    // Classes tile [0, 1), so the slot starting at or before x covers it.
    return std::prev(it)->letter;
  }

  const Letter& color_of(const ExactScalar& x) const { return alphabet_[color_index(x)]; }

  /// Canonical text form; also the subdivision identity.
  std::string fingerprint() const {
    std::string out;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      out += alphabet_[i] + ":" + classes_[i].to_string() + ";";
    }
    return out;
  }

  friend bool operator==(const Subdivision& a, const Subdivision& b) {
    return a.d_ == b.d_ && a.alphabet_ == b.alphabet_ && a.classes_ == b.classes_;
  }

  friend Subdivision canonicalize(const RawClasses& raw, std::optional<std::int64_t> field);

 private:
  struct Slot {
    Bound low;
    std::size_t letter;
  };

  std::vector<Letter> alphabet_;
  std::vector<BoundarySet> classes_;
  std::vector<Slot> index_;
  std::int64_t d_ = 0;
};

/// Merges each letter's intervals, checks that the classes partition
/// [0, 1) and builds the lookup index. Letters keep first-seen order.
inline Subdivision canonicalize(const RawClasses& raw, std::optional<std::int64_t> field = {}) {
  Subdivision sub;
  if (raw.empty()) throw InvalidSubdivision("a subdivision needs at least one letter");

  std::optional<std::int64_t> d = field;
  std::map<Letter, std::vector<Component>> merged;
  for (const auto& [letter, parts] : raw) {
    if (letter.empty()) throw InvalidSubdivision("letters must be nonempty strings");
    if (!merged.contains(letter)) sub.alphabet_.push_back(letter);
    auto& bucket = merged[letter];
    for (const auto& c : parts) {
      if (!d) d = c.lo.radicand();
      if (c.lo.radicand() != *d || c.hi.radicand() != *d) {
        throw FieldMismatch("class '" + letter + "' mixes fields");
      }
      if (c.empty()) throw InvalidInterval("class '" + letter + "' has empty interval " + c.to_string());
      bucket.push_back(c);
    }
  }
  sub.d_ = d.value_or(0);
  const Bound floor_bound{ExactScalar::integer(0, sub.d_), false};
  const Bound ceiling_bound{ExactScalar::integer(1, sub.d_), false};

  struct Tagged {
    Component part;
    std::size_t letter;
  };
  std::vector<Tagged> all;
  for (std::size_t i = 0; i < sub.alphabet_.size(); ++i) {
    auto set = BoundarySet::from_components(merged[sub.alphabet_[i]]);
    if (set.empty()) throw InvalidSubdivision("class '" + sub.alphabet_[i] + "' is empty");
    for (const auto& c : set.components()) {
      if (c.low() < floor_bound || c.high() > ceiling_bound) {
        throw InvalidInterval("class '" + sub.alphabet_[i] + "' leaves [0, 1): " + c.to_string());
      }
      all.push_back({c, i});
    }
    sub.classes_.push_back(std::move(set));
  }

  std::sort(all.begin(), all.end(),
            [](const Tagged& a, const Tagged& b) { return a.part.low() < b.part.low(); });
  Bound cursor = floor_bound;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& t = all[i];
    if (t.part.low() < cursor) {
      auto common = intersect(all[i - 1].part, t.part);
      throw OverlapError(common ? common->representative() : t.part.lo);
    }
    if (t.part.low() > cursor) {
      throw CoverageGapError(Component::from_bounds(cursor, t.part.low()).representative());
    }
    sub.index_.push_back({t.part.low(), t.letter});
    cursor = t.part.high();
  }
  if (cursor < ceiling_bound) {
    throw CoverageGapError(Component::from_bounds(cursor, ceiling_bound).representative());
  }
  return sub;
}

/// Total letter-to-letter projection from a refined alphabet onto an
/// original alphabet, surjective onto it.
class GluingMap {
 public:
  GluingMap(std::vector<std::pair<Letter, Letter>> mapping, std::vector<Letter> target_alphabet)
      : mapping_(std::move(mapping)), target_(std::move(target_alphabet)) {
    std::set<Letter> domain;
    std::set<Letter> image;
    const std::set<Letter> target(target_.begin(), target_.end());
    for (const auto& [from, to] : mapping_) {
      if (!domain.insert(from).second) throw InvalidGluing("letter '" + from + "' glued twice");
      if (!target.contains(to)) throw InvalidGluing("letter '" + to + "' is not in the target alphabet");
      image.insert(to);
      lookup_.emplace(from, to);
    }
    if (image != target) throw InvalidGluing("gluing is not onto the target alphabet");
  }

  static GluingMap identity(const std::vector<Letter>& alphabet) {
    std::vector<std::pair<Letter, Letter>> m;
    for (const auto& l : alphabet) m.emplace_back(l, l);
    return GluingMap(std::move(m), alphabet);
  }

  const Letter& operator()(const Letter& from) const {
    auto it = lookup_.find(from);
    if (it == lookup_.end()) throw UnknownLetter("letter '" + from + "' is not in the gluing domain");
    return it->second;
  }

  bool contains(const Letter& from) const { return lookup_.contains(from); }
  const std::vector<std::pair<Letter, Letter>>& mapping() const noexcept { return mapping_; }
  const std::vector<Letter>& target_alphabet() const noexcept { return target_; }
  bool is_bijective() const noexcept { return mapping_.size() == target_.size(); }

  friend bool operator==(const GluingMap& a, const GluingMap& b) {
    return a.mapping_ == b.mapping_ && a.target_ == b.target_;
  }

 private:
  std::vector<std::pair<Letter, Letter>> mapping_;
  std::vector<Letter> target_;
  std::map<Letter, Letter> lookup_;
};

struct GoodnessViolation {
  /// 1: the class is not convex. 2: same-colored points across a
  /// discontinuity have images of a common color.
  int condition = 0;
  Letter letter;
  std::size_t components = 0;
  std::optional<ExactScalar> discontinuity;
  /// (A, B) with A < discontinuity < B, same color, f(A) and f(B) sharing `shared_color`.
  std::optional<std::pair<ExactScalar, ExactScalar>> witness;
  Letter shared_color;

  std::string describe() const {
    if (condition == 1) {
      return "condition 1: class '" + letter + "' has " + std::to_string(components) +
             " components";
    }
    return "condition 2: class '" + letter + "' straddles discontinuity " +
           discontinuity->to_string() + "; A = " + witness->first.to_string() +
           ", B = " + witness->second.to_string() + ", f(A) and f(B) both colored '" +
           shared_color + "'";
  }
};

/// Proof object that `subdivision` is good for the map with id `map_id`.
class GoodnessCertificate {
 public:
  const Subdivision& subdivision() const noexcept { return subdivision_; }
  const std::string& map_id() const noexcept { return map_id_; }
  bool valid_for(const PiecewiseMap& map) const { return map.fingerprint() == map_id_; }

 private:
  GoodnessCertificate(Subdivision sub, std::string map_id)
      : subdivision_(std::move(sub)), map_id_(std::move(map_id)) {}
  friend std::variant<GoodnessCertificate, std::vector<GoodnessViolation>> is_good(
      const Subdivision&, const PiecewiseMap&);

  Subdivision subdivision_;
  std::string map_id_;
};

using GoodnessResult = std::variant<GoodnessCertificate, std::vector<GoodnessViolation>>;

namespace detail {

struct ImagePart {
  Component image;
  std::size_t piece;
};

// f(part), split per piece so a preimage can be recovered.
inline std::vector<ImagePart> image_parts(const Component& part, const PiecewiseMap& map) {
  std::vector<ImagePart> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto& piece = map.pieces()[i];
    if (auto sub = intersect(part, piece.domain.as_component())) {
      out.push_back({piece.image_of(*sub), i});
    }
  }
  return out;
}

inline ExactScalar preimage(const AffinePiece& piece, const ExactScalar& y) {
  return piece.slope == Slope::plus ? y - piece.intercept : piece.intercept - y;
}

// Some point of `part` whose image has color `color`, if any.
inline std::optional<ExactScalar> point_with_image_in(const std::vector<ImagePart>& parts,
                                                      const BoundarySet& color,
                                                      const PiecewiseMap& map) {
  for (const auto& ip : parts) {
    const auto hit = BoundarySet::of(ip.image).intersect(color);
    if (!hit.empty()) return preimage(map.pieces()[ip.piece], hit.components().front().representative());
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks both goodness conditions of `sub` relative to `map`:
///  1. every class is a single interval (of any endpoint shape);
///  2. for each class component I and each discontinuity p strictly inside
///     I, the colors met by f(I left of p) and by f(I right of p) are
///     disjoint.
/// Returns a certificate when both hold, else every violation found.
inline GoodnessResult is_good(const Subdivision& sub, const PiecewiseMap& map) {
  if (sub.radicand() != map.radicand()) throw FieldMismatch("subdivision and map live in different fields");
  std::vector<GoodnessViolation> violations;
  const auto disc = map.discontinuities();
  const auto& classes = sub.classes();

  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Letter& letter = sub.alphabet()[ci];
    if (!classes[ci].is_convex()) {
      GoodnessViolation v;
      v.condition = 1;
      v.letter = letter;
      v.components = classes[ci].size();
      violations.push_back(std::move(v));
    }
    for (const auto& comp : classes[ci].components()) {
      for (const auto& p : disc) {
        if (!(comp.lo < p && p < comp.hi)) continue;
        const Component left{comp.lo, comp.lo_in, p, false};
        const Component right{p, false, comp.hi, comp.hi_in};
        const auto left_img = detail::image_parts(left, map);
        const auto right_img = detail::image_parts(right, map);
        for (std::size_t color = 0; color < classes.size(); ++color) {
          auto a = detail::point_with_image_in(left_img, classes[color], map);
          if (!a) continue;
          auto b = detail::point_with_image_in(right_img, classes[color], map);
          if (!b) continue;
          GoodnessViolation v;
          v.condition = 2;
          v.letter = letter;
          v.components = classes[ci].size();
          v.discontinuity = p;
          v.witness = std::make_pair(*a, *b);
          v.shared_color = sub.alphabet()[color];
          violations.push_back(std::move(v));
          break;
        }
      }
    }
  }
  if (!violations.empty()) return violations;
  return GoodnessCertificate(sub, map.fingerprint());
}

struct Refinement {
  Subdivision subdivision;
  GluingMap gluing;
};

namespace detail {

inline std::vector<Letter> fresh_names(const std::vector<std::pair<std::size_t, std::size_t>>& origin,
                                       const std::vector<Letter>& old_alphabet) {
  for (std::string sep;; sep += "_") {
    std::vector<Letter> names;
    std::set<Letter> seen;
    bool unique = true;
    for (const auto& [letter, index] : origin) {
      names.push_back(old_alphabet[letter] + sep + std::to_string(index));
      if (!seen.insert(names.back()).second) unique = false;
    }
    if (unique) return names;
  }
}

}  // namespace detail

/// Splits every class component at each discontinuity of `map` lying
/// strictly inside it. A cut point joins the piece on its right. Each piece
/// gets a fresh letter `old + index` (index counts that letter's pieces left
/// to right); the gluing sends it back to `old`. If two fresh names would
/// collide, a "_" separator is inserted (repeated until unique).
inline Refinement refine_to_good(const Subdivision& sub, const PiecewiseMap& map) {
  if (sub.radicand() != map.radicand()) throw FieldMismatch("subdivision and map live in different fields");
  const auto disc = map.discontinuities();

  std::vector<std::pair<std::size_t, std::size_t>> origin;
  std::vector<Component> pieces;
  for (std::size_t ci = 0; ci < sub.classes().size(); ++ci) {
    std::size_t index = 0;
    for (const auto& comp : sub.classes()[ci].components()) {
      Component current = comp;
      for (const auto& p : disc) {
        if (!(current.lo < p && p < current.hi)) continue;
        pieces.push_back({current.lo, current.lo_in, p, false});
        origin.emplace_back(ci, index++);
        current = Component{p, true, current.hi, current.hi_in};
      }
      pieces.push_back(current);
      origin.emplace_back(ci, index++);
    }
  }

  const auto names = detail::fresh_names(origin, sub.alphabet());
  RawClasses raw;
  std::vector<std::pair<Letter, Letter>> gluing;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    raw.push_back({names[i], {pieces[i]}});
    gluing.emplace_back(names[i], sub.alphabet()[origin[i].first]);
  }
  return {canonicalize(raw, sub.radicand()), GluingMap(std::move(gluing), sub.alphabet())};
}

}  // namespace ietwords

#endif  // IETWORDS_SUBDIVISION_HPP
