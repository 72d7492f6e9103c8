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
 // Seeded random (map, subdivision, start point) instances for the
 // randomized suites. Draws use plain modular reduction of mt19937_64
 // output so a seed reproduces the same instances on every platform.

#ifndef IETWORDS_INSTANCES_HPP
#define IETWORDS_INSTANCES_HPP

#include <algorithm>
#include <numeric>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ietwords/exactnum.hpp"
#include "ietwords/interval_map.hpp"
#include "ietwords/subdivision.hpp"

namespace ietwords {

struct Instance {
  PiecewiseMap map;
  Subdivision subdivision;
  ExactScalar x0;
};

struct InstanceShape {
  std::size_t min_pieces = 2, max_pieces = 6;
  std::size_t min_colors = 2, max_colors = 5;
  std::size_t min_components = 1, max_components = 4;
};

class InstanceGenerator {
 public:
  /// Points are drawn from Q(sqrt d) when d > 1 (mixed with rationals), or
  /// from Q when d is 0 or 1.
  InstanceGenerator(std::uint64_t seed, std::int64_t d) : rng_(seed), d_(d) {}

  std::int64_t radicand() const noexcept { return d_; }

  /// Uniform integer in [lo, hi].
  std::uint64_t draw(std::uint64_t lo, std::uint64_t hi) { return lo + rng_() % (hi - lo + 1); }
  bool coin(std::uint64_t one_in = 2) { return draw(0, one_in - 1) == 0; }

  /// A point of [0, 1): either k/D with D <= 24, or frac(m*sqrt(d) + k/D).
  ExactScalar point() {
    const auto den = static_cast<std::int64_t>(draw(2, 24));
    const auto num = static_cast<std::int64_t>(draw(0, static_cast<std::uint64_t>(den - 1)));
    const auto base = ExactScalar::rational(num, den, d_);
    if (d_ <= 1 || coin()) return base;
    const auto m = static_cast<std::int64_t>(draw(1, 30));
    const auto x = base + ExactScalar::make(0, 1, m, 1, d_);
    return x - ExactScalar::rational(x.floor(), 1, d_);
  }

  /// `count` distinct sorted points strictly inside (0, 1).
  std::vector<ExactScalar> cuts(std::size_t count) {
    std::vector<ExactScalar> out;
    const auto zero = ExactScalar::integer(0, d_);
    while (out.size() < count) {
      auto p = point();
      if (p == zero || std::find(out.begin(), out.end(), p) != out.end()) continue;
      out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// `count` distinct sorted grid points j/den strictly inside (0, 1).
  std::vector<ExactScalar> grid_cuts(std::size_t count, std::int64_t den) {
    std::vector<std::int64_t> picks;
    while (picks.size() < count) {
      const auto j = static_cast<std::int64_t>(draw(1, static_cast<std::uint64_t>(den - 1)));
      if (std::find(picks.begin(), picks.end(), j) == picks.end()) picks.push_back(j);
    }
    std::sort(picks.begin(), picks.end());
    std::vector<ExactScalar> out;
    for (auto j : picks) out.push_back(ExactScalar::rational(j, den, d_));
    return out;
  }

  std::vector<std::size_t> permutation(std::size_t k) {
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[draw(0, i - 1)]);
    return perm;
  }

  /// Translation pieces on the given cuts, images in a random slot order.
  /// Intercepts are computed directly, not through iet_to_map.
  PiecewiseMap translation_bijection(const std::vector<ExactScalar>& cut_points) {
    return PiecewiseMap::checked(exchange_pieces(cut_points, false));
  }

  PiecewiseMap translation_bijection(std::size_t pieces) { return translation_bijection(cuts(pieces - 1)); }

  /// A valid map with `pieces` pieces: an exchange, an exchange with some
  /// pieces reversed, or pieces with independent random images.
  PiecewiseMap map(std::size_t pieces, std::optional<std::int64_t> grid = {}) {
    const auto cut_points = grid ? grid_cuts(pieces - 1, *grid) : cuts(pieces - 1);
    switch (draw(0, 2)) {
      case 0:
        return PiecewiseMap::checked(exchange_pieces(cut_points, false));
      case 1:
        return PiecewiseMap::checked(exchange_pieces(cut_points, true));
      default:
        return PiecewiseMap::checked(free_pieces(cut_points, grid));
    }
  }

  Subdivision subdivision(const InstanceShape& shape, std::optional<std::int64_t> grid = {}) {
    auto colors = static_cast<std::size_t>(draw(shape.min_colors, shape.max_colors));
    if (grid) colors = std::min(colors, static_cast<std::size_t>(*grid));
    std::vector<std::size_t> labels;
    std::vector<std::size_t> per_color(colors);
    for (std::size_t c = 0; c < colors; ++c) {
      per_color[c] = static_cast<std::size_t>(draw(shape.min_components, shape.max_components));
    }
    if (grid) {
      // Every segment boundary must fit on the grid.
      for (std::size_t c = 0; std::accumulate(per_color.begin(), per_color.end(), std::size_t{0}) >
                              static_cast<std::size_t>(*grid);
           c = (c + 1) % colors) {
        if (per_color[c] > 1) --per_color[c];
      }
    }
    for (std::size_t c = 0; c < colors; ++c) labels.insert(labels.end(), per_color[c], c);
    for (int attempt = 0; attempt < 64; ++attempt) {
      for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[draw(0, i - 1)]);
      bool adjacent_equal = false;
      for (std::size_t i = 1; i < labels.size(); ++i) adjacent_equal |= labels[i] == labels[i - 1];
      if (!adjacent_equal) break;
    }

    const auto cut_points = grid ? grid_cuts(labels.size() - 1, *grid) : cuts(labels.size() - 1);
    std::vector<std::vector<Component>> parts(colors);
    ExactScalar lo = ExactScalar::integer(0, d_);
    bool lo_in = true;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i + 1 == labels.size()) {
        parts[labels[i]].push_back({lo, lo_in, ExactScalar::integer(1, d_), false});
        break;
      }
      const auto& cut = cut_points[i];
      const std::size_t left = labels[i], right = labels[i + 1];
      std::size_t other = colors;
      if (colors >= 3 && coin(8)) {
        do {
          other = static_cast<std::size_t>(draw(0, colors - 1));
        } while (other == left || other == right);
      }
      if (other != colors) {
        // The cut point alone forms a component of a third color.
        parts[left].push_back({lo, lo_in, cut, false});
        parts[other].push_back(Component::point(cut));
        lo_in = false;
      } else if (coin()) {
        parts[left].push_back({lo, lo_in, cut, true});
        lo_in = false;
      } else {
        parts[left].push_back({lo, lo_in, cut, false});
        lo_in = true;
      }
      lo = cut;
    }
    RawClasses raw;
    for (std::size_t c = 0; c < colors; ++c) raw.emplace_back(std::string(1, static_cast<char>('A' + c)), parts[c]);
    return canonicalize(raw, d_);
  }

  Instance instance(const InstanceShape& shape = {}) {
    auto m = map(static_cast<std::size_t>(draw(shape.min_pieces, shape.max_pieces)));
    auto s = subdivision(shape);
    auto x0 = point();
    return {std::move(m), std::move(s), std::move(x0)};
  }

  /// All endpoints, intercepts and the start point are multiples of 1/den.
  Instance grid_instance(std::int64_t den, const InstanceShape& shape = {}) {
    const auto max_pieces = std::min<std::size_t>(shape.max_pieces, static_cast<std::size_t>(den));
    const auto pieces = static_cast<std::size_t>(draw(std::min(shape.min_pieces, max_pieces), max_pieces));
    auto m = map(pieces, den);
    auto s = subdivision(shape, den);
    auto x0 = ExactScalar::rational(static_cast<std::int64_t>(draw(0, static_cast<std::uint64_t>(den - 1))), den, d_);
    return {std::move(m), std::move(s), std::move(x0)};
  }

 private:
  std::vector<AffinePiece> exchange_pieces(const std::vector<ExactScalar>& cut_points, bool allow_reversal) {
    const auto zero = ExactScalar::integer(0, d_);
    const auto one = ExactScalar::integer(1, d_);
    std::vector<ExactScalar> bounds{zero};
    bounds.insert(bounds.end(), cut_points.begin(), cut_points.end());
    bounds.push_back(one);
    const std::size_t k = bounds.size() - 1;
    const auto slot_of = permutation(k);

    std::vector<std::size_t> piece_in_slot(k);
    for (std::size_t i = 0; i < k; ++i) piece_in_slot[slot_of[i]] = i;
    std::vector<ExactScalar> start(k, zero);
    ExactScalar cursor = zero;
    for (std::size_t slot = 0; slot < k; ++slot) {
      const auto i = piece_in_slot[slot];
      start[i] = cursor;
      cursor += bounds[i + 1] - bounds[i];
    }

    std::vector<AffinePiece> pieces;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& lo = bounds[i];
      const auto& hi = bounds[i + 1];
      const bool reverse = allow_reversal && slot_of[i] + 1 < k && coin();
      if (reverse) {
        pieces.push_back({HalfOpenInterval(lo, hi), Slope::minus, start[i] + hi});
      } else {
        pieces.push_back({HalfOpenInterval(lo, hi), Slope::plus, start[i] - lo});
      }
    }
    return pieces;
  }

  std::vector<AffinePiece> free_pieces(const std::vector<ExactScalar>& cut_points, std::optional<std::int64_t> grid) {
    const auto zero = ExactScalar::integer(0, d_);
    const auto one = ExactScalar::integer(1, d_);
    std::vector<ExactScalar> bounds{zero};
    bounds.insert(bounds.end(), cut_points.begin(), cut_points.end());
    bounds.push_back(one);

    std::vector<AffinePiece> pieces;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      const auto& lo = bounds[i];
      const auto& hi = bounds[i + 1];
      const auto room = one - (hi - lo);
      const bool reverse = coin();
      ExactScalar s = zero;
      if (grid) {
        // Largest admissible start j/den: room for slope +1, strictly less for -1.
        auto limit = (room * ExactScalar::integer(*grid, d_)).floor();
        if (reverse) limit -= 1;
        s = ExactScalar::rational(static_cast<std::int64_t>(draw(0, limit.convert_to<std::uint64_t>())), *grid, d_);
      } else {
        s = point() * room;
      }
      if (reverse) {
        pieces.push_back({HalfOpenInterval(lo, hi), Slope::minus, s + hi});
      } else {
        pieces.push_back({HalfOpenInterval(lo, hi), Slope::plus, s - lo});
      }
    }
    return pieces;
  }

  std::mt19937_64 rng_;
  std::int64_t d_;
};

}  // namespace ietwords

#endif  // IETWORDS_INSTANCES_HPP
