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
 // Finite-prefix analytics on words: factor complexity, uniform recurrence
 // windows and eventual periodicity. Every verdict is about the prefix only.

#ifndef IETWORDS_ANALYSIS_HPP
#define IETWORDS_ANALYSIS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ietwords/coding.hpp"
#include "ietwords/errors.hpp"

namespace ietwords {

struct ComplexityProfile {
  /// (n, p(n)) for n = 1 .. n_max.
  std::vector<std::pair<std::size_t, std::size_t>> values;
  std::size_t prefix_length = 0;

  std::size_t at(std::size_t n) const { return values.at(n - 1).second; }
};

/// nullopt stands for NOT_RECURRENT_AT_SCALE.
using RecurrenceWindow = std::optional<std::size_t>;

struct RecurrenceProfile {
  std::vector<std::pair<std::size_t, RecurrenceWindow>> values;
  std::size_t prefix_length = 0;
};

struct Periodicity {
  std::size_t preperiod = 0;
  std::size_t period = 0;

  friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

namespace detail {

// Polynomial hashes of every length-n factor, with exact comparison on
// hash collisions.
class FactorTable {
 public:
  explicit FactorTable(const std::vector<std::uint32_t>& symbols) : s_(symbols) {
    prefix_.assign(s_.size() + 1, 0);
    power_.assign(s_.size() + 1, 1);
    for (std::size_t i = 0; i < s_.size(); ++i) {
      prefix_[i + 1] = prefix_[i] * kBase + (s_[i] + 1);
      power_[i + 1] = power_[i] * kBase;
    }
  }

  std::uint64_t hash(std::size_t start, std::size_t n) const {
    return prefix_[start + n] - prefix_[start] * power_[n];
  }

  bool same(std::size_t a, std::size_t b, std::size_t n) const {
    return std::equal(s_.begin() + a, s_.begin() + a + n, s_.begin() + b);
  }

  /// Id of the distinct factor starting at each position (ids are dense,
  /// in first-occurrence order), and the number of distinct factors.
  std::pair<std::vector<std::size_t>, std::size_t> classify(std::size_t n) const {
    const std::size_t starts = s_.size() - n + 1;
    auto h = [&](std::size_t i) { return static_cast<std::size_t>(hash(i, n)); };
    auto eq = [&](std::size_t a, std::size_t b) { return same(a, b, n); };
    std::unordered_set<std::size_t, decltype(h), decltype(eq)> seen(starts, h, eq);
    std::vector<std::size_t> first_id(starts, 0);
    std::vector<std::size_t> ids(starts);
    std::size_t next = 0;
    for (std::size_t i = 0; i < starts; ++i) {
      auto [it, inserted] = seen.insert(i);
      if (inserted) first_id[i] = next++;
      ids[i] = first_id[*it];
    }
    return {std::move(ids), next};
  }

  std::size_t count(std::size_t n) const {
    const std::size_t starts = s_.size() - n + 1;
    auto h = [&](std::size_t i) { return static_cast<std::size_t>(hash(i, n)); };
    auto eq = [&](std::size_t a, std::size_t b) { return same(a, b, n); };
    std::unordered_set<std::size_t, decltype(h), decltype(eq)> seen(starts, h, eq);
    for (std::size_t i = 0; i < starts; ++i) seen.insert(i);
    return seen.size();
  }

 private:
  static constexpr std::uint64_t kBase = 1000003ULL;
  const std::vector<std::uint32_t>& s_;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> power_;
};

// Every length-w window holds at least one full occurrence of each factor.
inline bool windows_cover(const std::vector<std::size_t>& ids, std::size_t kinds, std::size_t length,
                          std::size_t n, std::size_t w) {
  // Window [i, i + w) holds the factors starting in [i, i + w - n].
  const std::size_t span = w - n + 1;
  std::vector<std::size_t> count(kinds, 0);
  std::size_t present = 0;
  for (std::size_t s = 0; s < span; ++s) {
    if (count[ids[s]]++ == 0) ++present;
  }
  if (present != kinds) return false;
  for (std::size_t i = 1; i + w <= length; ++i) {
    if (--count[ids[i - 1]] == 0) --present;
    if (count[ids[i + span - 1]]++ == 0) ++present;
    if (present != kinds) return false;
  }
  return true;
}

}  // namespace detail

/// p(n) = number of distinct length-n factors, for 1 <= n <= n_max.
inline ComplexityProfile complexity(const SymbolicWord& word, std::size_t n_max) {
  if (n_max == 0) throw InvalidLength("n_max must be at least 1");
  if (word.size() < n_max) {
    throw PrefixTooShort("word of length " + std::to_string(word.size()) +
                         " cannot show factors of length " + std::to_string(n_max));
  }
  const detail::FactorTable table(word.symbols());
  ComplexityProfile out;
  out.prefix_length = word.size();
  for (std::size_t n = 1; n <= n_max; ++n) out.values.emplace_back(n, table.count(n));
  return out;
}

/// Smallest W such that every length-W window of the word contains every
/// length-n factor of the word. A prefix only witnesses recurrence if two
/// disjoint windows suffice, so W > length / 2 is reported as
/// NOT_RECURRENT_AT_SCALE (nullopt).
inline RecurrenceWindow recurrence_window(const SymbolicWord& word, std::size_t n) {
  if (n == 0) throw InvalidLength("factor length must be at least 1");
  if (word.size() < 4 * n) {
    throw PrefixTooShort("recurrence at scale " + std::to_string(n) + " needs at least " +
                         std::to_string(4 * n) + " letters");
  }
  const detail::FactorTable table(word.symbols());
  const auto [ids, kinds] = table.classify(n);
  const std::size_t length = word.size();
  // Coverage is monotone in W and always holds for W = length.
  std::size_t lo = n, hi = length;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (detail::windows_cover(ids, kinds, length, n, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo > length / 2) return std::nullopt;
  return lo;
}

inline RecurrenceProfile recurrence_profile(const SymbolicWord& word, std::size_t n_max) {
  RecurrenceProfile out;
  out.prefix_length = word.size();
  for (std::size_t n = 1; n <= n_max && 4 * n <= word.size(); ++n) {
    out.values.emplace_back(n, recurrence_window(word, n));
  }
  return out;
}

/// Smallest (preperiod, period), minimizing the preperiod first, such that
/// word[i] == word[i + period] for all i >= preperiod and
/// preperiod + period <= length / 2. For preperiod 0 this is the smallest
/// period not exceeding half the length. nullopt means APERIODIC_AT_SCALE.
inline std::optional<Periodicity> detect_period(const SymbolicWord& word) {
  const std::size_t length = word.size();
  if (length == 0) throw InvalidLength("cannot analyze an empty word");
  // The suffix starting at t is, reversed, the length (length - t) prefix of
  // the reversed word; its smallest period is that prefix length minus its
  // longest border.
  std::vector<std::uint32_t> rev(word.symbols().rbegin(), word.symbols().rend());
  std::vector<std::size_t> border(length, 0);
  for (std::size_t i = 1, k = 0; i < length; ++i) {
    while (k > 0 && rev[i] != rev[k]) k = border[k - 1];
    if (rev[i] == rev[k]) ++k;
    border[i] = k;
  }
  for (std::size_t t = 0; t <= length / 2; ++t) {
    const std::size_t m = length - t;
    const std::size_t period = m - border[m - 1];
    if (t + period <= length / 2) return Periodicity{t, period};
  }
  return std::nullopt;
}

}  // namespace ietwords

#endif  // IETWORDS_ANALYSIS_HPP
