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
 // Piecewise isometries of [0, 1) and interval exchange transformations.

#ifndef IETWORDS_INTERVAL_MAP_HPP
#define IETWORDS_INTERVAL_MAP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ietwords/boundary_set.hpp"
#include "ietwords/errors.hpp"
#include "ietwords/exactnum.hpp"

namespace ietwords {

/// [lo, hi) with 0 <= lo < hi <= 1.
class HalfOpenInterval {
 public:
  HalfOpenInterval(ExactScalar lo, ExactScalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    const auto zero = ExactScalar::integer(0, lo_.radicand());
    const auto one = ExactScalar::integer(1, lo_.radicand());
    if (!(zero <= lo_ && lo_ < hi_ && hi_ <= one)) {
      throw InvalidInterval("interval [" + lo_.to_string() + ", " + hi_.to_string() +
                            ") is not a nonempty subinterval of [0, 1)");
    }
  }

  const ExactScalar& lo() const noexcept { return lo_; }
  const ExactScalar& hi() const noexcept { return hi_; }
  ExactScalar length() const { return hi_ - lo_; }
  bool contains(const ExactScalar& x) const { return lo_ <= x && x < hi_; }
  Component as_component() const { return Component::half_open(lo_, hi_); }

  friend bool operator==(const HalfOpenInterval&, const HalfOpenInterval&) = default;

 private:
  ExactScalar lo_;
  ExactScalar hi_;
};

enum class Slope : int { minus = -1, plus = 1 };

/// x -> slope * x + intercept on `domain`.
struct AffinePiece {
  HalfOpenInterval domain;
  Slope slope = Slope::plus;
  ExactScalar intercept;

  ExactScalar operator()(const ExactScalar& x) const {
    return slope == Slope::plus ? x + intercept : intercept - x;
  }

  /// Image of a part of the domain. A reversing piece swaps which end is
  /// closed, so [l, h) maps to (f(h), f(l)].
  Component image_of(const Component& part) const {
    if (slope == Slope::plus) return {part.lo + intercept, part.lo_in, part.hi + intercept, part.hi_in};
    return {intercept - part.hi, part.hi_in, intercept - part.lo, part.lo_in};
  }

  Component image() const { return image_of(domain.as_component()); }

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

struct MapViolation {
  enum class Kind { domain_overlap, coverage_gap, image_escape };
  Kind kind;
  ExactScalar lo;
  ExactScalar hi;
  std::size_t piece = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::domain_overlap:
        return "DomainOverlap at [" + lo.to_string() + ", " + hi.to_string() + ")";
      case Kind::coverage_gap:
        return "CoverageGap at [" + lo.to_string() + ", " + hi.to_string() + ")";
      case Kind::image_escape:
        return "ImageEscape: piece " + std::to_string(piece) + " maps outside [0, 1)";
    }
    return {};
  }

  friend bool operator==(const MapViolation&, const MapViolation&) = default;
};

struct ValidationReport {
  std::vector<MapViolation> violations;
  /// Informative only: the piece images tile [0, 1) exactly.
  bool bijective = false;

  bool valid() const noexcept { return violations.empty(); }
};

/// A finite list of affine pieces with slopes +-1, sorted by domain start.
///
/// The constructor only sorts; call validate() (or use checked()) before
/// evaluating. apply/discontinuities assume a valid map.
class PiecewiseMap {
 public:
  explicit PiecewiseMap(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw InvalidMap("a map needs at least one piece");
    d_ = pieces_.front().domain.lo().radicand();
    for (const auto& p : pieces_) {
      if (p.domain.lo().radicand() != d_ || p.intercept.radicand() != d_) {
        throw FieldMismatch("map pieces live in different fields");
      }
    }
    std::stable_sort(pieces_.begin(), pieces_.end(), [](const AffinePiece& a, const AffinePiece& b) {
      return a.domain.lo() < b.domain.lo();
    });
  }

  /// Builds and validates; throws InvalidMap listing the violations.
  static PiecewiseMap checked(std::vector<AffinePiece> pieces) {
    PiecewiseMap map(std::move(pieces));
    const auto report = map.validate();
    if (!report.valid()) {
      std::string what = "invalid map:";
      for (const auto& v : report.violations) what += " " + v.describe() + ";";
      throw InvalidMap(what);
    }
    return map;
  }

  const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }
  std::size_t size() const noexcept { return pieces_.size(); }
  std::int64_t radicand() const noexcept { return d_; }

  ExactScalar zero() const { return ExactScalar::integer(0, d_); }
  ExactScalar one() const { return ExactScalar::integer(1, d_); }

  /// Index of the piece whose domain holds x.
  std::size_t piece_index(const ExactScalar& x) const {
    if (x < zero() || x >= one()) {
      throw PointOutsideDomain("point " + x.to_string() + " outside [0, 1)");
    }
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const ExactScalar& v, const AffinePiece& p) { return v < p.domain.lo(); });
    if (it == pieces_.begin() || !std::prev(it)->domain.contains(x)) {
      throw CorruptMap("no piece contains " + x.to_string());
    }
    return static_cast<std::size_t>(std::prev(it) - pieces_.begin());
  }

  ExactScalar apply(const ExactScalar& x) const {
    ExactScalar y = pieces_[piece_index(x)](x);
    if (y < zero() || y >= one()) throw CorruptMap("image " + y.to_string() + " escapes [0, 1)");
    return y;
  }

  /// Interior piece boundaries where the left limit differs from the value.
  std::vector<ExactScalar> discontinuities() const {
    std::vector<ExactScalar> out;
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
      const ExactScalar& p = pieces_[i + 1].domain.lo();
      if (pieces_[i](p) != pieces_[i + 1](p)) out.push_back(p);
    }
    return out;
  }

  ValidationReport validate() const {
    using Kind = MapViolation::Kind;
    ValidationReport report;
    ExactScalar reach = zero();
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const auto& dom = pieces_[i].domain;
      if (dom.lo() > reach) {
        report.violations.push_back({Kind::coverage_gap, reach, dom.lo(), i});
      } else if (dom.lo() < reach) {
        report.violations.push_back({Kind::domain_overlap, dom.lo(), std::min(reach, dom.hi()), i});
      }
      reach = std::max(reach, dom.hi());
    }
    if (reach < one()) report.violations.push_back({Kind::coverage_gap, reach, one(), pieces_.size()});

    const Bound floor_bound{zero(), false};
    const Bound ceiling_bound{one(), false};
    std::vector<Component> images;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      Component img = pieces_[i].image();
      if (img.low() < floor_bound || img.high() > ceiling_bound) {
        report.violations.push_back({Kind::image_escape, img.lo, img.hi, i});
      }
      images.push_back(std::move(img));
    }
    if (!report.valid()) return report;

    std::sort(images.begin(), images.end(),
              [](const Component& a, const Component& b) { return a.low() < b.low(); });
    Bound cursor = floor_bound;
    report.bijective = true;
    for (const auto& img : images) {
      if (img.low() != cursor) {
        report.bijective = false;
        break;
      }
      cursor = img.high();
    }
    report.bijective = report.bijective && cursor == ceiling_bound;
    return report;
  }

  /// Content-derived identity used by goodness certificates and word origins.
  std::string fingerprint() const {
    std::string text;
    for (const auto& p : pieces_) {
      text += p.domain.lo().to_string() + "," + p.domain.hi().to_string() + "," +
              (p.slope == Slope::plus ? "+" : "-") + "," + p.intercept.to_string() + ";";
    }
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out = "map-";
    for (int shift = 60; shift >= 0; shift -= 4) out += digits[(h >> shift) & 0xF];
    return out;
  }

  friend bool operator==(const PiecewiseMap&, const PiecewiseMap&) = default;

 private:
  std::vector<AffinePiece> pieces_;
  std::int64_t d_ = 0;
};

/// Interval exchange: interval i (left to right, length lengths[i]) is
/// translated into slot permutation[i] of the image order.
class IET {
 public:
  IET(std::vector<ExactScalar> lengths, std::vector<std::size_t> permutation)
      : lengths_(std::move(lengths)), permutation_(std::move(permutation)) {
    if (lengths_.empty()) throw InvalidIET("an IET needs at least one interval");
    if (lengths_.size() != permutation_.size()) {
      throw InvalidIET("lengths and permutation differ in size");
    }
    const auto d = lengths_.front().radicand();
    ExactScalar total = ExactScalar::integer(0, d);
    for (const auto& l : lengths_) {
      if (l.sign() <= 0) throw InvalidIET("interval length " + l.to_string() + " is not positive");
      total += l;
    }
    if (total != ExactScalar::integer(1, d)) {
      throw InvalidIET("lengths sum to " + total.to_string() + ", not 1");
    }
    std::vector<bool> seen(permutation_.size(), false);
    for (auto slot : permutation_) {
      if (slot >= permutation_.size() || seen[slot]) throw InvalidIET("permutation is not a bijection");
      seen[slot] = true;
    }
  }

  const std::vector<ExactScalar>& lengths() const noexcept { return lengths_; }
  const std::vector<std::size_t>& permutation() const noexcept { return permutation_; }
  std::size_t size() const noexcept { return lengths_.size(); }

  friend bool operator==(const IET&, const IET&) = default;

 private:
  std::vector<ExactScalar> lengths_;
  std::vector<std::size_t> permutation_;
};

inline PiecewiseMap iet_to_map(const IET& iet) {
  const auto& lengths = iet.lengths();
  const auto& perm = iet.permutation();
  const auto d = lengths.front().radicand();
  const std::size_t k = lengths.size();

  std::vector<std::size_t> by_slot(k);
  for (std::size_t i = 0; i < k; ++i) by_slot[perm[i]] = i;
  std::vector<ExactScalar> image_start(k, ExactScalar::integer(0, d));
  ExactScalar cursor = ExactScalar::integer(0, d);
  for (std::size_t slot = 0; slot < k; ++slot) {
    image_start[by_slot[slot]] = cursor;
    cursor += lengths[by_slot[slot]];
  }

  std::vector<AffinePiece> pieces;
  ExactScalar lo = ExactScalar::integer(0, d);
  for (std::size_t i = 0; i < k; ++i) {
    ExactScalar hi = lo + lengths[i];
    pieces.push_back({HalfOpenInterval(lo, hi), Slope::plus, image_start[i] - lo});
    lo = std::move(hi);
  }
  return PiecewiseMap(std::move(pieces));
}

inline IET to_iet(const PiecewiseMap& map) {
  for (const auto& p : map.pieces()) {
    if (p.slope != Slope::plus) throw NotTranslationPiecewise("map has an orientation-reversing piece");
  }
  const auto report = map.validate();
  if (!report.valid()) throw InvalidMap("map does not validate");
  if (!report.bijective) throw NotBijective("piece images do not tile [0, 1)");

  const auto& pieces = map.pieces();
  std::vector<std::size_t> order(pieces.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pieces[a].image().lo < pieces[b].image().lo;
  });
  std::vector<std::size_t> perm(pieces.size());
  for (std::size_t slot = 0; slot < order.size(); ++slot) perm[order[slot]] = slot;

  std::vector<ExactScalar> lengths;
  for (const auto& p : pieces) lengths.push_back(p.domain.length());
  return IET(std::move(lengths), std::move(perm));
}

inline PiecewiseMap identity_map(std::int64_t d = 0) {
  return PiecewiseMap({{HalfOpenInterval(ExactScalar::integer(0, d), ExactScalar::integer(1, d)),
                        Slope::plus, ExactScalar::integer(0, d)}});
}

/// x -> x + alpha mod 1, for 0 <= alpha < 1.
inline PiecewiseMap rotation(const ExactScalar& alpha) {
  const auto d = alpha.radicand();
  const auto zero = ExactScalar::integer(0, d);
  const auto one = ExactScalar::integer(1, d);
  if (alpha < zero || alpha >= one) throw OutOfExpectedRange("rotation amount must lie in [0, 1)");
  if (alpha == zero) return identity_map(d);
  const auto cut = one - alpha;
  return PiecewiseMap({{HalfOpenInterval(zero, cut), Slope::plus, alpha},
                       {HalfOpenInterval(cut, one), Slope::plus, alpha - one}});
}

}  // namespace ietwords

#endif  // IETWORDS_INTERVAL_MAP_HPP
