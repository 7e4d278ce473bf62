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

#include "invopt/rational.h"

#include <cctype>
#include <string>

#include "invopt/error.h"

namespace invopt {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument:
      return "MalformedDocument";
    case ErrorCode::kBoundViolation:
      return "BoundViolation";
    case ErrorCode::kNonPositiveWeight:
      return "NonPositiveWeight";
    case ErrorCode::kStarNotInFamily:
      return "StarNotInFamily";
    case ErrorCode::kInvalidFamily:
      return "InvalidFamily";
    case ErrorCode::kEmptyFamily:
      return "EmptyFamily";
    case ErrorCode::kLimitExceeded:
      return "LimitExceeded";
    case ErrorCode::kIterationCapExceeded:
      return "IterationCapExceeded";
    case ErrorCode::kConstrainedInstance:
      return "ConstrainedInstance";
    case ErrorCode::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::kInfiniteArithmetic:
      return "InfiniteArithmetic";
  }
  return "Unknown";
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void BadLiteral(std::string_view text) {
  throw Error(ErrorCode::kMalformedDocument,
              "invalid rational literal \"" + std::string(text) + "\"");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const size_t slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) BadLiteral(text);
  Rational result;
  result.get_num() = Integer(std::string(num), 10);
  result.get_den() = Integer(std::string(den), 10);
  if (result.get_den() == 0) BadLiteral(text);
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer Floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer Ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

bool IsIntegral(const Rational& value) { return value.get_den() == 1; }

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::kFinite) {
    throw Error(ErrorCode::kInfiniteArithmetic,
                "value of an infinite bound requested");
  }
  return value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a,
                                 const ExtendedRational& b) {
  if (a.kind_ != b.kind_ || a.kind_ != ExtendedRational::Kind::kFinite) {
    return a.kind_ <=> b.kind_;
  }
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtendedRational ParseExtendedRational(std::string_view text) {
  if (text == "-inf") return ExtendedRational::NegInf();
  if (text == "+inf" || text == "inf") return ExtendedRational::PosInf();
  return ParseRational(text);
}

std::string ToString(const ExtendedRational& value) {
  if (value.is_neg_inf()) return "-inf";
  if (value.is_pos_inf()) return "+inf";
  return ToString(value.value());
}

Rational Clamp(const Rational& x, const ExtendedRational& lo,
               const ExtendedRational& hi) {
  if (lo.is_finite() && x < lo.value()) return lo.value();
  if (hi.is_finite() && x > hi.value()) return hi.value();
  return x;
}

}  // namespace invopt
