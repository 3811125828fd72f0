// Copyright 2026 The Pathcause Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PATHCAUSE_RATIONAL_H_
#define PATHCAUSE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace pathcause {

// Exact fraction over int64 with a positive, reduced denominator. Arithmetic
// that overflows int64 throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // Accepts "3", "-2", "3/4", "0.125" and "1e-2"-free decimals.
  static Rational Parse(std::string_view text);

  // "3", "3/4"
  std::string ToString() const;
  // Terminating decimals render exactly ("0.25"); anything else falls back
  // to ToString().
  std::string ToExactDecimal() const;
  double ToDouble() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pathcause

#endif  // PATHCAUSE_RATIONAL_H_
