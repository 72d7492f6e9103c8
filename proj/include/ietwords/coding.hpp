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
 // Orbits and their symbolic codings.

#ifndef IETWORDS_CODING_HPP
#define IETWORDS_CODING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ietwords/errors.hpp"
#include "ietwords/exactnum.hpp"
#include "ietwords/interval_map.hpp"
#include "ietwords/subdivision.hpp"

namespace ietwords {

struct WordOrigin {
  std::string map_id;
  std::string subdivision_id;
  std::optional<ExactScalar> x0;
  std::size_t length = 0;
  /// Set when the word was produced by gluing a finer word.
  bool projected = false;
};

/// A finite word over an alphabet of string letters. Letters are stored as
/// indices into alphabet(); equality compares the letter sequences only,
/// never the origin.
class SymbolicWord {
 public:
  SymbolicWord() = default;
  SymbolicWord(std::vector<Letter> alphabet, std::vector<std::uint32_t> symbols, WordOrigin origin)
      : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)), origin_(std::move(origin)) {
    origin_.length = symbols_.size();
    for (auto s : symbols_) {
      if (s >= alphabet_.size()) throw UnknownLetter("symbol index outside the alphabet");
    }
  }

  /// Builds a word from letter strings; the alphabet is first-seen order.
  static SymbolicWord from_letters(const std::vector<Letter>& letters) {
    std::vector<Letter> alphabet;
    std::unordered_map<Letter, std::uint32_t> ids;
    std::vector<std::uint32_t> symbols;
    symbols.reserve(letters.size());
    for (const auto& l : letters) {
      auto [it, inserted] = ids.emplace(l, static_cast<std::uint32_t>(alphabet.size()));
      if (inserted) alphabet.push_back(l);
      symbols.push_back(it->second);
    }
    return SymbolicWord(std::move(alphabet), std::move(symbols), {});
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const Letter& operator[](std::size_t i) const { return alphabet_[symbols_[i]]; }
  const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::uint32_t>& symbols() const noexcept { return symbols_; }
  const WordOrigin& origin() const noexcept { return origin_; }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(symbols_.size());
    for (auto s : symbols_) out.push_back(alphabet_[s]);
    return out;
  }

  /// Letters joined by single spaces, line-wrapped every `wrap` tokens
  /// (0 disables wrapping). Always ends with a newline when nonempty.
  std::string to_text(std::size_t wrap = 80) const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i > 0) out += (wrap != 0 && i % wrap == 0) ? '\n' : ' ';
      out += alphabet_[symbols_[i]];
    }
    if (!symbols_.empty()) out += '\n';
    return out;
  }

  /// Index of the first differing letter, or nullopt when equal. A length
  /// difference counts as a mismatch at the shorter length.
  std::optional<std::size_t> first_mismatch(const SymbolicWord& other) const {
    const std::size_t n = std::min(size(), other.size());
    if (alphabet_ == other.alphabet_) {
      for (std::size_t i = 0; i < n; ++i) {
        if (symbols_[i] != other.symbols_[i]) return i;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if ((*this)[i] != other[i]) return i;
      }
    }
    if (size() != other.size()) return n;
    return std::nullopt;
  }

  friend bool operator==(const SymbolicWord& a, const SymbolicWord& b) {
    return !a.first_mismatch(b).has_value();
  }

 private:
  std::vector<Letter> alphabet_;
  std::vector<std::uint32_t> symbols_;
  WordOrigin origin_;
};

struct Orbit {
  std::vector<ExactScalar> points;
};

inline Orbit orbit(const PiecewiseMap& map, const ExactScalar& x0, std::size_t n) {
  if (n == 0) throw InvalidLength("orbit length must be at least 1");
  map.piece_index(x0);
  Orbit out;
  out.points.reserve(n);
  out.points.push_back(x0);
  for (std::size_t k = 1; k < n; ++k) out.points.push_back(map.apply(out.points.back()));
  return out;
}

inline void require_same_field(const PiecewiseMap& map, const Subdivision& sub) {
  if (map.radicand() != sub.radicand()) throw FieldMismatch("map and subdivision live in different fields");
}

/// letters[k] = color of T^k x0, for k = 0 .. n-1.
inline SymbolicWord code(const PiecewiseMap& map, const Subdivision& sub, const ExactScalar& x0,
                         std::size_t n) {
  require_same_field(map, sub);
  const Orbit o = orbit(map, x0, n);
  std::vector<std::uint32_t> symbols;
  symbols.reserve(n);
  for (const auto& x : o.points) symbols.push_back(static_cast<std::uint32_t>(sub.color_index(x)));
  return SymbolicWord(sub.alphabet(), std::move(symbols),
                      {map.fingerprint(), sub.fingerprint(), x0, n, false});
}

/// Constant-memory letter source for very long codings. Yields the same
/// letters as code(), one at a time.
class WordStream {
 public:
  WordStream(PiecewiseMap map, Subdivision sub, ExactScalar x0)
      : map_(std::move(map)), sub_(std::move(sub)), current_(std::move(x0)) {
    require_same_field(map_, sub_);
    map_.piece_index(current_);
  }

  /// Index into alphabet() of the next letter.
  std::uint32_t next_symbol() {
    if (started_) current_ = map_.apply(current_);
    started_ = true;
    ++emitted_;
    return static_cast<std::uint32_t>(sub_.color_index(current_));
  }

  const Letter& next() { return sub_.alphabet()[next_symbol()]; }

  const std::vector<Letter>& alphabet() const noexcept { return sub_.alphabet(); }
  std::size_t emitted() const noexcept { return emitted_; }

 private:
  PiecewiseMap map_;
  Subdivision sub_;
  ExactScalar current_;
  std::size_t emitted_ = 0;
  bool started_ = false;
};

/// Applies the gluing letter by letter.
inline SymbolicWord glue_word(const SymbolicWord& word, const GluingMap& gluing) {
  const auto& target = gluing.target_alphabet();
  // Letters of the alphabet that never occur need not be in the gluing domain.
  std::vector<std::optional<std::uint32_t>> translate;
  translate.reserve(word.alphabet().size());
  for (const auto& letter : word.alphabet()) {
    if (!gluing.contains(letter)) {
      translate.emplace_back();
      continue;
    }
    const Letter& image = gluing(letter);
    translate.emplace_back(
        static_cast<std::uint32_t>(std::find(target.begin(), target.end(), image) - target.begin()));
  }
  std::vector<std::uint32_t> symbols;
  symbols.reserve(word.size());
  for (auto s : word.symbols()) {
    if (!translate[s]) gluing(word.alphabet()[s]);  // throws UnknownLetter
    symbols.push_back(*translate[s]);
  }
  WordOrigin origin = word.origin();
  origin.projected = true;
  return SymbolicWord(target, std::move(symbols), std::move(origin));
}

struct RoundtripResult {
  std::optional<std::size_t> mismatch;
  bool ok() const noexcept { return !mismatch.has_value(); }
};

/// Codes x0 through the good refinement of `sub`, glues the result and
/// compares it with the direct coding through `sub`.
inline RoundtripResult roundtrip_check(const PiecewiseMap& map, const Subdivision& sub,
                                       const ExactScalar& x0, std::size_t n) {
  require_same_field(map, sub);
  const auto refined = refine_to_good(sub, map);
  const Orbit o = orbit(map, x0, n);
  auto colors = [&](const Subdivision& s) {
    std::vector<std::uint32_t> symbols;
    symbols.reserve(n);
    for (const auto& x : o.points) symbols.push_back(static_cast<std::uint32_t>(s.color_index(x)));
    return SymbolicWord(s.alphabet(), std::move(symbols), {map.fingerprint(), s.fingerprint(), x0, n, false});
  };
  const auto glued = glue_word(colors(refined.subdivision), refined.gluing);
  const auto direct = colors(sub);
  return {glued.first_mismatch(direct)};
}

}  // namespace ietwords

#endif  // IETWORDS_CODING_HPP
