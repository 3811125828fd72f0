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

#include "pathcause/rational.h"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "pathcause/error.h"

namespace pathcause {
namespace {

std::int64_t Narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational Make(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(Narrow(num), Narrow(den));
}

std::int64_t ParseInt(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kParseError,
                "not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational division by zero");
  __int128 n = numerator;
  __int128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(numerator, denominator);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = Narrow(n);
  den_ = Narrow(d);
}

Rational Rational::Parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t den = ParseInt(text.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::kParseError,
                  "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(ParseInt(text.substr(0, slash), text), den);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(ParseInt(text, text));

  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 18) {
    throw Error(ErrorCode::kParseError,
                "not a rational number: '" + std::string(text) + "'");
  }
  bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative) int_part.remove_prefix(1);
  std::int64_t whole = int_part.empty() ? 0 : ParseInt(int_part, text);
  if (whole < 0) {
    throw Error(ErrorCode::kParseError,
                "not a rational number: '" + std::string(text) + "'");
  }
  std::int64_t frac = ParseInt(frac_part, text);
  __int128 scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  __int128 num = static_cast<__int128>(whole) * scale + frac;
  return Make(negative ? -num : num, scale);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::ToExactDecimal() const {
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return ToString();
  if (den_ == 1) return std::to_string(num_);

  int digits = std::max(twos, fives);
  __int128 scaled = static_cast<__int128>(num_ < 0 ? -num_ : num_);
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= den_;
  __int128 pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  std::string whole = std::to_string(static_cast<std::int64_t>(scaled / pow10));
  std::string frac =
      std::to_string(static_cast<std::int64_t>(scaled % pow10));
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (num_ < 0 ? "-" : "") + whole + "." + frac;
}

double Rational::ToDouble() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator+(const Rational& o) const {
  return Make(static_cast<__int128>(num_) * o.den_ +
                  static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Make(static_cast<__int128>(num_) * o.den_ -
                  static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Make(static_cast<__int128>(num_) * o.num_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  return Make(static_cast<__int128>(num_) * o.den_,
              static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <=>
         static_cast<__int128>(o.num_) * den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace pathcause
