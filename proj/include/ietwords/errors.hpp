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
 // Exception hierarchy shared by every module.

#ifndef IETWORDS_ERRORS_HPP
#define IETWORDS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ietwords {

/// Base of every error raised by the library. User-facing errors never
/// escape the CLI as anything but a message and an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define IETWORDS_DEFINE_ERROR(Name)            \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

IETWORDS_DEFINE_ERROR(ZeroDenominator);
IETWORDS_DEFINE_ERROR(NonSquarefreeRadicand);
IETWORDS_DEFINE_ERROR(FieldMismatch);
IETWORDS_DEFINE_ERROR(OutOfExpectedRange);
IETWORDS_DEFINE_ERROR(PointOutsideDomain);
IETWORDS_DEFINE_ERROR(InvalidInterval);
IETWORDS_DEFINE_ERROR(InvalidMap);
IETWORDS_DEFINE_ERROR(CorruptMap);
IETWORDS_DEFINE_ERROR(InvalidIET);
IETWORDS_DEFINE_ERROR(NotTranslationPiecewise);
IETWORDS_DEFINE_ERROR(NotBijective);
IETWORDS_DEFINE_ERROR(InvalidSubdivision);
IETWORDS_DEFINE_ERROR(InvalidGluing);
IETWORDS_DEFINE_ERROR(UnknownLetter);
IETWORDS_DEFINE_ERROR(InvalidLength);
IETWORDS_DEFINE_ERROR(PrefixTooShort);

#undef IETWORDS_DEFINE_ERROR

/// Malformed text; `position` is a zero-based character offset into the
/// text that was being parsed.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

  /// The same error with `prefix` (e.g. a JSON pointer) in front of the message.
  SyntaxError located(const std::string& prefix) const { return SyntaxError(prefix + ": " + what(), position_, 0); }

 private:
  SyntaxError(const std::string& message, std::size_t position, int) : Error(message), position_(position) {}

  std::size_t position_;
};

/// Structurally wrong spec document. `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error((path.empty() ? std::string("/") : path) + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace ietwords

#endif  // IETWORDS_ERRORS_HPP
