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
 // Text grammar for scalars:
 //
 //   scalar := rat | rat ("+"|"-") rat "*sqrt(" uint ")"
 //   rat    := ["-"] uint [ "/" uint ]
 //
 // ExactScalar::to_string produces exactly this grammar, so text round-trips.

#ifndef IETWORDS_SCALAR_TEXT_HPP
#define IETWORDS_SCALAR_TEXT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ietwords/errors.hpp"
#include "ietwords/exactnum.hpp"

namespace ietwords {

namespace detail {

class ScalarScanner {
 public:
  explicit ScalarScanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  BigInt uint() {
    const std::size_t start = pos_;
    while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  // rat := ["-"] uint ["/" uint]
  std::pair<BigInt, BigInt> rat() {
    const bool negative = accept('-');
    BigInt num = uint();
    BigInt den = 1;
    if (accept('/')) {
      den = uint();
      if (den == 0) throw ZeroDenominator("zero denominator at position " + std::to_string(pos_));
    }
    return {negative ? BigInt(-num) : num, den};
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("scalar '" + std::string(text_) + "': " + what, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the scalar grammar. A rational literal is placed in `field` (or Q
/// when absent); a literal with sqrt(k) must agree with `field` when given.
inline ExactScalar parse_scalar(std::string_view text, std::optional<std::int64_t> field = {}) {
  detail::ScalarScanner in(text);
  auto [a_num, a_den] = in.rat();
  if (in.at_end()) return ExactScalar::make(a_num, a_den, 0, 1, field.value_or(0));

  bool minus = false;
  if (in.accept('-')) {
    minus = true;
  } else if (!in.accept('+')) {
    in.fail("expected '+', '-' or end of text");
  }
  auto [b_num, b_den] = in.rat();
  in.expect("*sqrt(");
  const std::size_t radicand_pos = in.pos();
  const BigInt radicand = in.uint();
  in.expect(")");
  if (!in.at_end()) in.fail("trailing characters");
  if (radicand > 1'000'000'000) {
    throw SyntaxError("radicand too large", radicand_pos);
  }
  const auto d = radicand.convert_to<std::int64_t>();
  ExactScalar::check_radicand(d);
  if (field && *field != d) {
    throw FieldMismatch("sqrt(" + std::to_string(d) + ") in a sqrt(" + std::to_string(*field) +
                        ") context");
  }
  if (minus) b_num = -b_num;
  return ExactScalar::make(a_num, a_den, b_num, b_den, d);
}

}  // namespace ietwords

#endif  // IETWORDS_SCALAR_TEXT_HPP
