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
 // Exact arithmetic in a single quadratic field Q(sqrt d).

#ifndef IETWORDS_EXACTNUM_HPP
#define IETWORDS_EXACTNUM_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ietwords/errors.hpp"

namespace ietwords {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline bool is_squarefree(std::int64_t d) {
  if (d < 0) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

inline int sign_of(const BigInt& v) { return v.sign(); }

// Sign of p + q*sqrt(d) for integers p, q and d >= 0.
inline int sign_of(const BigInt& p, const BigInt& q, std::int64_t d) {
  const int sp = p.sign();
  const int sq = d == 0 ? 0 : q.sign();
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against q^2 d.
  const BigInt lhs = p * p;
  const BigInt rhs = q * q * d;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sp : sq;
}

}  // namespace detail

/// An element a + b*sqrt(d) of Q(sqrt d).
///
/// Stored as (p + q*sqrt(d)) / r with r > 0 and gcd(p, q, r) = 1, which is
/// unique per value, so structural equality is value equality. The
/// per-component fractions a = p/r and b = q/r are exposed in lowest terms
/// through the a_num()/a_den()/b_num()/b_den() accessors.
///
/// The radicand travels with every value. Combining values from different
/// fields throws FieldMismatch; there is no implicit lift.
class ExactScalar {
 public:
  /// Zero in Q.
  ExactScalar() = default;

  /// a_num/a_den + (b_num/b_den) sqrt(d), in canonical form.
  static ExactScalar make(const BigInt& a_num, const BigInt& a_den, const BigInt& b_num,
                          const BigInt& b_den, std::int64_t d) {
    if (a_den == 0 || b_den == 0) throw ZeroDenominator("zero denominator");
    check_radicand(d);
    ExactScalar out;
    out.d_ = d;
    out.p_ = a_num * b_den;
    out.q_ = b_num * a_den;
    out.r_ = a_den * b_den;
    out.normalize();
    return out;
  }

  /// num/den living in the field context d.
  static ExactScalar rational(const BigInt& num, const BigInt& den = 1, std::int64_t d = 0) {
    return make(num, den, 0, 1, d);
  }

  static ExactScalar integer(std::int64_t v, std::int64_t d = 0) { return rational(v, 1, d); }

  std::int64_t radicand() const noexcept { return d_; }

  BigInt a_num() const { return p_ / gcd(p_, r_); }
  BigInt a_den() const { return r_ / gcd(p_, r_); }
  BigInt b_num() const { return q_ / gcd(q_, r_); }
  BigInt b_den() const { return r_ / gcd(q_, r_); }

  /// True when the radical coefficient is zero.
  bool is_rational() const noexcept { return q_ == 0; }
  int sign() const { return detail::sign_of(p_, q_, d_); }

  /// Same value, re-tagged with another field. Only valid for rationals.
  ExactScalar in_field(std::int64_t d) const {
    if (!is_rational() && d != d_) {
      throw FieldMismatch("cannot move an irrational value to another field");
    }
    check_radicand(d);
    ExactScalar out = *this;
    out.d_ = d;
    return out;
  }

  /// Approximate value for display. Never used to decide anything.
  double approx() const {
    long double v = p_.convert_to<long double>();
    if (q_ != 0) v += q_.convert_to<long double>() * std::sqrt(static_cast<long double>(d_));
    return static_cast<double>(v / r_.convert_to<long double>());
  }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.d_ == y.d_ && x.p_ == y.p_ && x.q_ == y.q_ && x.r_ == y.r_;
  }

  friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) {
    require_same_field(x, y);
    int s;
    if (x.r_ == y.r_) {
      s = detail::sign_of(x.p_ - y.p_, x.q_ - y.q_, x.d_);
    } else {
      s = detail::sign_of(x.p_ * y.r_ - y.p_ * x.r_, x.q_ * y.r_ - y.q_ * x.r_, x.d_);
    }
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    require_same_field(x, y);
    ExactScalar out;
    out.d_ = x.d_;
    if (x.r_ == y.r_) {
      out.p_ = x.p_ + y.p_;
      out.q_ = x.q_ + y.q_;
      out.r_ = x.r_;
    } else {
      out.p_ = x.p_ * y.r_ + y.p_ * x.r_;
      out.q_ = x.q_ * y.r_ + y.q_ * x.r_;
      out.r_ = x.r_ * y.r_;
    }
    out.normalize();
    return out;
  }

  friend ExactScalar operator-(const ExactScalar& x) {
    ExactScalar out = x;
    out.p_ = -out.p_;
    out.q_ = -out.q_;
    return out;
  }

  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    require_same_field(x, y);
    ExactScalar out;
    out.d_ = x.d_;
    out.p_ = x.p_ * y.p_ + x.q_ * y.q_ * x.d_;
    out.q_ = x.p_ * y.q_ + y.p_ * x.q_;
    out.r_ = x.r_ * y.r_;
    out.normalize();
    return out;
  }

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

  /// Largest integer n with n <= value.
  BigInt floor() const {
    BigInt n(static_cast<long long>(std::floor(approx())));
    const ExactScalar& self = *this;
    while (self < integer_like(n)) --n;
    while (self >= integer_like(n + 1)) ++n;
    return n;
  }

  /// Textual form accepted by parse_scalar: "a", "a/b", "a+c/e*sqrt(d)".
  std::string to_string() const {
    std::string out = fraction_text(a_num(), a_den());
    if (q_ != 0) {
      const BigInt bn = b_num();
      out += bn.sign() < 0 ? "-" : "+";
      out += fraction_text(abs(bn), b_den());
      out += "*sqrt(" + std::to_string(d_) + ")";
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
    return os << x.to_string();
  }

  static void check_radicand(std::int64_t d) {
    if (!detail::is_squarefree(d)) {
      throw NonSquarefreeRadicand("radicand " + std::to_string(d) + " is not squarefree");
    }
  }

 private:
  static void require_same_field(const ExactScalar& x, const ExactScalar& y) {
    if (x.d_ != y.d_) {
      throw FieldMismatch("mixing sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                          std::to_string(y.d_) + ") values");
    }
  }

  static std::string fraction_text(const BigInt& num, const BigInt& den) {
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }

  ExactScalar integer_like(const BigInt& n) const {
    ExactScalar out;
    out.p_ = n;
    out.d_ = d_;
    return out;
  }

  void normalize() {
    if (d_ <= 1) {
      if (d_ == 1) p_ += q_;
      q_ = 0;
    }
    if (r_.sign() < 0) {
      p_ = -p_;
      q_ = -q_;
      r_ = -r_;
    }
    if (p_ == 0 && q_ == 0) {
      r_ = 1;
      return;
    }
    BigInt g = gcd(p_, q_);
    if (g != 1) g = gcd(g, r_);
    if (g != 1) {
      p_ /= g;
      q_ /= g;
      r_ /= g;
    }
  }

  BigInt p_ = 0;
  BigInt q_ = 0;
  BigInt r_ = 1;
  std::int64_t d_ = 0;
};

/// Spec-level constructor; see ExactScalar::make.
inline ExactScalar make_scalar(const BigInt& a_num, const BigInt& a_den, const BigInt& b_num,
                               const BigInt& b_den, std::int64_t d) {
  return ExactScalar::make(a_num, a_den, b_num, b_den, d);
}

/// Three-way comparison. Throws FieldMismatch across fields.
inline std::strong_ordering cmp(const ExactScalar& x, const ExactScalar& y) { return x <=> y; }

/// Reduces a value produced by one translation step into [0, 1).
/// Inputs outside [-1, 2) indicate a bug upstream and are rejected.
inline ExactScalar mod1(const ExactScalar& x) {
  const auto one = ExactScalar::integer(1, x.radicand());
  const auto zero = ExactScalar::integer(0, x.radicand());
  if (x < -one || x >= one + one) {
    throw OutOfExpectedRange("mod1 input " + x.to_string() + " outside [-1, 2)");
  }
  if (x < zero) return x + one;
  if (x >= one) return x - one;
  return x;
}

/// x / 2, used for midpoints. Not general division.
inline ExactScalar halve(const ExactScalar& x) {
  return x * ExactScalar::rational(1, 2, x.radicand());
}

}  // namespace ietwords

#endif  // IETWORDS_EXACTNUM_HPP
