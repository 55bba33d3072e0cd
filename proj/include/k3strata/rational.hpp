// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace k3strata {

// Exact rational with a canonical representation: gcd(num, den) == 1 and
// den >= 1. All arithmetic goes through 128-bit intermediates and refuses to
// narrow silently, so results are either exact or an overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: integers promote
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = g ? n / g : 0;
    den_ = g ? d / g : 1;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("division by zero rational");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "a/b", or just "a" when integral.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Accepts "a" or "a/b" with optional leading '-'.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto to_int = [](std::string_view piece) {
      std::int64_t value = 0;
      const char* first = piece.data();
      const char* last = piece.data() + piece.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("malformed rational: " +
                                    std::string(piece));
      return value;
    };
    if (slash == std::string_view::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)),
                    to_int(text.substr(slash + 1)));
  }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace k3strata
