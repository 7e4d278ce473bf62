// Copyright 2026 The invopt Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INVOPT_RATIONAL_H_
#define INVOPT_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace invopt {

// Arbitrary-precision rational. Arithmetic results are canonical (positive
// denominator, coprime parts); the two-argument constructor is not.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "n", "+n", "-n" or "p/q" with q > 0. Infinities are rejected here;
// see ParseExtendedRational.
Rational ParseRational(std::string_view text);

// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string ToString(const Rational& value);

Integer Ceil(const Rational& value);
Integer Floor(const Rational& value);
bool IsIntegral(const Rational& value);

// A rational extended with -inf and +inf. The infinities exist only as bound
// sentinels: they compare, but asking for their value is an error.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value)  // NOLINT(runtime/explicit)
      : kind_(Kind::kFinite), value_(std::move(value)) {}
  ExtendedRational(long value)  // NOLINT(runtime/explicit)
      : kind_(Kind::kFinite), value_(value) {}

  static ExtendedRational NegInf() { return ExtendedRational(Kind::kNegInf); }
  static ExtendedRational PosInf() { return ExtendedRational(Kind::kPosInf); }

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  // Throws Error(kInfiniteArithmetic) on an infinity.
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  enum class Kind { kNegInf, kFinite, kPosInf };
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_ = 0;
};

// Accepts everything ParseRational does plus "-inf", "+inf" and "inf".
ExtendedRational ParseExtendedRational(std::string_view text);
std::string ToString(const ExtendedRational& value);

// Projects x onto [lo, hi]; requires lo <= hi.
Rational Clamp(const Rational& x, const ExtendedRational& lo,
               const ExtendedRational& hi);

}  // namespace invopt

#endif  // INVOPT_RATIONAL_H_
