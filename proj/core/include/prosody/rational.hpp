// Copyright 2026 The Prosody Authors.
//
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

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prosody {

namespace detail {
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail

// Nonnegative exact fraction in lowest terms. A zero denominator encodes
// +infinity (numerator is then 1). 0/0 is rejected.
//
// Every quantity this library compares (variances, variance ratios) is
// nonnegative, so comparison by 128-bit cross multiplication is exact and
// also orders infinity correctly.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::uint64_t numerator, std::uint64_t denominator = 1) {
    if (numerator == 0 && denominator == 0) {
      throw std::domain_error("Rational: 0/0 is undefined");
    }
    if (denominator == 0) {
      num_ = 1;
      den_ = 0;
      return;
    }
    const std::uint64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
  }

  static constexpr Rational infinity() { return Rational(1, 0); }

  // (a/b) / (c/d) without intermediate overflow; throws std::overflow_error
  // if the reduced result does not fit in 64 bits.
  static Rational quotient(Rational dividend, Rational divisor) {
    if (divisor.num_ == 0) {
      if (dividend.num_ == 0) throw std::domain_error("Rational: 0/0 is undefined");
      return infinity();
    }
    if (dividend.is_infinite()) {
      if (divisor.is_infinite()) throw std::domain_error("Rational: inf/inf is undefined");
      return infinity();
    }
    if (divisor.is_infinite()) return Rational(0);
    return FromWide(static_cast<detail::uint128>(dividend.num_) * divisor.den_,
                    static_cast<detail::uint128>(dividend.den_) * divisor.num_);
  }

  constexpr std::uint64_t numerator() const noexcept { return num_; }
  constexpr std::uint64_t denominator() const noexcept { return den_; }
  constexpr bool is_infinite() const noexcept { return den_ == 0; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }

  constexpr Rational reciprocal() const {
    if (num_ == 0) return infinity();
    if (den_ == 0) return Rational(0);
    Rational r;
    r.num_ = den_;
    r.den_ = num_;
    return r;
  }

  double to_double() const noexcept {
    if (den_ == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    if (den_ == 0) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) noexcept {
    const auto lhs = static_cast<detail::uint128>(a.num_) * b.den_;
    const auto rhs = static_cast<detail::uint128>(b.num_) * a.den_;
    if (lhs == rhs) return std::strong_ordering::equal;
    return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  static Rational FromWide(detail::uint128 n, detail::uint128 d) {
    detail::uint128 a = n, b = d;
    while (b != 0) {
      const detail::uint128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (n > kMax || d > kMax) throw std::overflow_error("Rational: result exceeds 64 bits");
    return Rational(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
  }

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace prosody
