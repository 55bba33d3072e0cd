// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).
//
// Point counting for short Weierstrass curves over small prime fields, and
// the slope data of products of two such curves. Counting is the naive
// character sum: one quadratic-character lookup per x. For p <= 2^20 that is
// fast enough and easy to trust, which is the point.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3strata/errors.hpp"
#include "k3strata/kummer.hpp"
#include "k3strata/polygon.hpp"
#include "k3strata/rational.hpp"

namespace k3strata {

namespace detail {
inline bool is_prime_small(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}
}  // namespace detail

// Odd prime field F_p with 3 < p <= 2^20, carrying a shared quadratic
// character table: chi(x) is 1 on nonzero squares, -1 on non-squares, 0 at 0.
class PrimeField {
 public:
  static constexpr std::int64_t kMaxPrime = 1 << 20;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 5 || p > kMaxPrime || !detail::is_prime_small(p))
      throw DomainError("InvalidPrimeField",
                        "p must be a prime with 5 <= p <= 2^20, got " +
                            std::to_string(p));
    auto table = std::make_shared<std::vector<signed char>>(
        static_cast<std::size_t>(p), static_cast<signed char>(-1));
    (*table)[0] = 0;
    for (std::int64_t x = 1; x <= (p - 1) / 2; ++x)
      (*table)[static_cast<std::size_t>((x * x) % p)] = 1;
    chi_ = std::move(table);
  }

  std::int64_t p() const { return p_; }

  int chi(std::int64_t x) const {
    x %= p_;
    if (x < 0) x += p_;
    return (*chi_)[static_cast<std::size_t>(x)];
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::int64_t p_;
  std::shared_ptr<const std::vector<signed char>> chi_;
};

// y^2 = x^3 + a x + b over F_p, nonsingular (4 a^3 + 27 b^2 != 0).
class EllipticCurve {
 public:
  EllipticCurve(PrimeField field, std::int64_t a, std::int64_t b)
      : field_(std::move(field)), a_(mod(a)), b_(mod(b)) {
    const std::int64_t p = field_.p();
    const std::int64_t a3 = (((a_ * a_) % p) * a_) % p;
    const std::int64_t disc = ((4 * a3) % p + (27 * ((b_ * b_) % p)) % p) % p;
    if (disc == 0)
      throw DomainError("SingularCurve",
                        "4a^3 + 27b^2 = 0 mod " + std::to_string(p) +
                            " for a = " + std::to_string(a_) +
                            ", b = " + std::to_string(b_));
  }

  const PrimeField& field() const { return field_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

 private:
  std::int64_t mod(std::int64_t v) const {
    const std::int64_t p = field_.p();
    v %= p;
    return v < 0 ? v + p : v;
  }

  PrimeField field_;
  std::int64_t a_;
  std::int64_t b_;
};

struct FrobeniusData {
  std::int64_t p = 0;
  std::int64_t point_count = 0;  // projective points, including infinity
  std::int64_t trace = 0;        // a_p = p + 1 - point_count
  bool supersingular = false;    // a_p == 0 mod p; for p >= 5 that is a_p == 0

  friend bool operator==(const FrobeniusData&, const FrobeniusData&) = default;
};

// #E(F_p) = p + 1 + sum_x chi(x^3 + a x + b). The cubic stays below 2^63 for
// p <= 2^20, so no intermediate reduction is needed.
inline FrobeniusData count_points(const EllipticCurve& e) {
  const std::int64_t p = e.field().p();
  const std::int64_t a = e.a();
  const std::int64_t b = e.b();
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x)
    sum += e.field().chi((x * x * x + a * x + b) % p);
  FrobeniusData out;
  out.p = p;
  out.point_count = p + 1 + sum;
  out.trace = -sum;
  if (out.trace * out.trace > 4 * p)
    throw std::logic_error("trace violates the square-root bound");
  out.supersingular = out.trace % p == 0;
  return out;
}

// Slope pair of the curve: {0, 1} ordinary, {1/2, 1/2} supersingular.
inline std::pair<Rational, Rational> curve_slopes(const FrobeniusData& f) {
  if (f.supersingular) return {Rational(1, 2), Rational(1, 2)};
  return {Rational(0), Rational(1)};
}

// Slope profile of E1 x E2. FieldMismatch unless both curves live over the
// same prime field.
inline AbelianSlopeProfile product_profile(const EllipticCurve& e1,
                                           const EllipticCurve& e2) {
  if (!(e1.field() == e2.field()))
    throw DomainError("FieldMismatch",
                      "curves live over F_" + std::to_string(e1.field().p()) +
                          " and F_" + std::to_string(e2.field().p()));
  const auto s1 = curve_slopes(count_points(e1));
  const auto s2 = curve_slopes(count_points(e2));
  return AbelianSlopeProfile({s1.first, s1.second, s2.first, s2.second});
}

struct KummerClassification {
  FrobeniusData first;
  FrobeniusData second;
  AbelianSlopeProfile profile;
  NewtonPolygon polygon;
  Classification surface;
  StratumLabel stratum;
};

// Full pipeline for the Kummer surface of E1 x E2: count, take slopes, push
// through the quotient, classify. A product of two supersingular curves has
// the smallest possible crystalline discriminant, so its stratum is the
// deepest one.
inline KummerClassification classify_kummer_of_product(const EllipticCurve& e1,
                                                       const EllipticCurve& e2) {
  if (!(e1.field() == e2.field()))
    throw DomainError("FieldMismatch",
                      "curves live over F_" + std::to_string(e1.field().p()) +
                          " and F_" + std::to_string(e2.field().p()));
  const FrobeniusData f1 = count_points(e1);
  const FrobeniusData f2 = count_points(e2);
  const auto s1 = curve_slopes(f1);
  const auto s2 = curve_slopes(f2);
  const AbelianSlopeProfile profile({s1.first, s1.second, s2.first, s2.second});
  NewtonPolygon polygon = kummer_slopes(profile);
  const Classification surface = classify(polygon);
  const StratumLabel stratum =
      surface.height.is_infinite()
          ? stratum_of(surface.height, ArtinInvariant(1))
          : stratum_of(surface.height, std::nullopt);
  return {f1, f2, profile, std::move(polygon), surface, stratum};
}

}  // namespace k3strata
