// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).
//
// Kummer construction bookkeeping: push slopes of an abelian surface through
// the quotient-and-blow-up, track polarization degrees across the sixteen
// exceptional curves, and decide ampleness of the descended class from two
// integer Seshadri-type bounds.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "k3strata/errors.hpp"
#include "k3strata/polygon.hpp"
#include "k3strata/rational.hpp"

namespace k3strata {

// Slopes of a principally quasi-polarized abelian surface: four rationals in
// [0, 1], symmetric under s -> 1 - s, with integral breaks. Only three such
// profiles exist; the named constructors below enumerate them.
class AbelianSlopeProfile {
 public:
  explicit AbelianSlopeProfile(std::array<Rational, 4> slopes)
      : slopes_(slopes) {
    std::sort(slopes_.begin(), slopes_.end());
    make_newton(1, 4, std::vector<Rational>(slopes_.begin(), slopes_.end()));
  }

  static AbelianSlopeProfile ordinary() {
    return AbelianSlopeProfile({Rational(0), Rational(0), Rational(1), Rational(1)});
  }
  static AbelianSlopeProfile p_rank_one() {
    return AbelianSlopeProfile(
        {Rational(0), Rational(1, 2), Rational(1, 2), Rational(1)});
  }
  static AbelianSlopeProfile supersingular() {
    return AbelianSlopeProfile({Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                Rational(1, 2)});
  }

  const std::array<Rational, 4>& slopes() const { return slopes_; }

  friend bool operator==(const AbelianSlopeProfile&,
                         const AbelianSlopeProfile&) = default;

 private:
  std::array<Rational, 4> slopes_;
};

// Weight-2 rank-22 polygon of the Kummer surface: the six pairwise sums
// lambda_i + lambda_j (i < j) plus sixteen slope-1 contributions from the
// exceptional curves.
inline NewtonPolygon kummer_slopes(const AbelianSlopeProfile& profile) {
  const auto& l = profile.slopes();
  std::vector<Segment> segs;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) segs.push_back({l[i] + l[j], 1});
  segs.push_back({Rational(1), 16});
  return make_newton(2, 22, std::move(segs));
}

// Polarization data on the Kummer side: multiplier n, abelian-side degree
// d', and the sixteen correction coefficients at the exceptional curves.
struct KummerParams {
  std::int64_t n = 1;
  std::int64_t dprime = 1;
  std::array<std::int64_t, 16> parts{};
};

inline void validate(const KummerParams& p) {
  if (p.n < 1)
    throw DomainError("InvalidParams", "n must be >= 1, got " + std::to_string(p.n));
  if (p.dprime < 1)
    throw DomainError("InvalidParams",
                      "dprime must be >= 1, got " + std::to_string(p.dprime));
  for (std::int64_t nj : p.parts)
    if (nj < 1)
      throw DomainError("InvalidParams",
                        "parts must be >= 1, got " + std::to_string(nj));
}

inline KummerParams uniform_params(std::int64_t n, std::int64_t dprime,
                                   std::int64_t part) {
  KummerParams p;
  p.n = n;
  p.dprime = dprime;
  p.parts.fill(part);
  validate(p);
  return p;
}

// d = 2 n^2 d' - sum_j n_j^2. May be negative for bad parameters; the
// positivity requirement lives in check_ampleness, not here.
inline std::int64_t polarization_degree(const KummerParams& p) {
  validate(p);
  std::int64_t s = 0;
  for (std::int64_t nj : p.parts) s += nj * nj;
  return 2 * p.n * p.n * p.dprime - s;
}

// Self-intersection of the descended class upstairs on the blow-up:
// 8 n^2 d' - 4 sum_j n_j^2, identically 4 * polarization_degree.
inline std::int64_t self_intersection_on_blowup(const KummerParams& p) {
  validate(p);
  std::int64_t s = 0;
  for (std::int64_t nj : p.parts) s += nj * nj;
  return 8 * p.n * p.n * p.dprime - 4 * s;
}

// How much an elliptic curve on the abelian surface is assumed to meet the
// polarization: m = 1 with no assumption, m = 2 when the surface is not a
// product of elliptic curves, arbitrary m >= 1 when a lower bound on the
// intersection number is known.
class AmplenessVariant {
 public:
  static AmplenessVariant general_surface() { return {Kind::General, 1}; }
  static AmplenessVariant non_product() { return {Kind::NonProduct, 2}; }
  static AmplenessVariant min_elliptic_intersection(std::int64_t m) {
    if (m < 1)
      throw DomainError("InvalidParams",
                        "minimal intersection must be >= 1, got " +
                            std::to_string(m));
    return {Kind::MinIntersection, m};
  }

  std::int64_t min_intersection() const { return m_; }

  std::string str() const {
    switch (kind_) {
      case Kind::General:
        return "general";
      case Kind::NonProduct:
        return "non-product";
      case Kind::MinIntersection:
        return "min-intersection(" + std::to_string(m_) + ")";
    }
    return "unknown";
  }

  friend bool operator==(const AmplenessVariant&,
                         const AmplenessVariant&) = default;

 private:
  enum class Kind { General, NonProduct, MinIntersection };

  AmplenessVariant(Kind kind, std::int64_t m) : kind_(kind), m_(m) {}

  Kind kind_;
  std::int64_t m_;
};

// Strict bound shielding against elliptic curves through the j-th node:
// 4 n_j < n m. Integer arithmetic only.
inline bool seshadri_elliptic_bound_holds(const KummerParams& p, int j,
                                          const AmplenessVariant& v) {
  validate(p);
  if (j < 0 || j >= 16) throw std::invalid_argument("part index outside [0, 16)");
  return 4 * p.parts[static_cast<std::size_t>(j)] < p.n * v.min_intersection();
}

// Strict bound shielding against all other curves: 64 n_j^2 < n^2 d'.
inline bool seshadri_generic_bound_holds(const KummerParams& p, int j) {
  validate(p);
  if (j < 0 || j >= 16) throw std::invalid_argument("part index outside [0, 16)");
  const std::int64_t nj = p.parts[static_cast<std::size_t>(j)];
  return 64 * nj * nj < p.n * p.n * p.dprime;
}

struct PartAudit {
  std::int64_t part = 0;
  std::int64_t elliptic_lhs = 0;  // 4 n_j
  std::int64_t elliptic_rhs = 0;  // n m
  bool elliptic_ok = false;
  std::int64_t generic_lhs = 0;  // 64 n_j^2
  std::int64_t generic_rhs = 0;  // n^2 d'
  bool generic_ok = false;

  friend bool operator==(const PartAudit&, const PartAudit&) = default;
};

struct AmplenessReport {
  std::int64_t degree = 0;
  bool positivity_ok = false;
  std::int64_t min_intersection = 1;
  std::array<PartAudit, 16> parts{};
  bool elliptic_branch_ok = false;
  bool generic_branch_ok = false;
  bool ample = false;

  friend bool operator==(const AmplenessReport&, const AmplenessReport&) = default;
};

// Conservative ampleness verdict: positive degree and, at every node, both
// the elliptic and the generic bound. Either bound alone shields only one
// kind of curve, so the verdict demands both; the per-part audit keeps the
// margins visible when a verdict rests on a single branch upstream.
inline AmplenessReport check_ampleness(const KummerParams& p,
                                       const AmplenessVariant& v) {
  validate(p);
  AmplenessReport r;
  r.degree = polarization_degree(p);
  r.positivity_ok = r.degree > 0;
  r.min_intersection = v.min_intersection();
  r.elliptic_branch_ok = true;
  r.generic_branch_ok = true;
  for (int j = 0; j < 16; ++j) {
    const std::int64_t nj = p.parts[static_cast<std::size_t>(j)];
    PartAudit& a = r.parts[static_cast<std::size_t>(j)];
    a.part = nj;
    a.elliptic_lhs = 4 * nj;
    a.elliptic_rhs = p.n * v.min_intersection();
    a.elliptic_ok = a.elliptic_lhs < a.elliptic_rhs;
    a.generic_lhs = 64 * nj * nj;
    a.generic_rhs = p.n * p.n * p.dprime;
    a.generic_ok = a.generic_lhs < a.generic_rhs;
    r.elliptic_branch_ok = r.elliptic_branch_ok && a.elliptic_ok;
    r.generic_branch_ok = r.generic_branch_ok && a.generic_ok;
  }
  r.ample = r.positivity_ok && r.elliptic_branch_ok && r.generic_branch_ok;
  return r;
}

enum class AbelianType { Ordinary, PRankOne, SupersingularNotSuperspecial, Superspecial };

inline std::string to_string(AbelianType t) {
  switch (t) {
    case AbelianType::Ordinary:
      return "ordinary";
    case AbelianType::PRankOne:
      return "p-rank-1";
    case AbelianType::SupersingularNotSuperspecial:
      return "supersingular-not-superspecial";
    case AbelianType::Superspecial:
      return "superspecial";
  }
  return "unknown";
}

// Where each abelian-surface type lands in the K3 filtration:
//   ordinary                      -> M(1) \ M(2)
//   p-rank 1                      -> M(2) \ M(3)
//   supersingular, not superspecial -> Sigma(9) \ Sigma(10)
//   superspecial                  -> Sigma(10)
inline StratumLabel stratum_image(AbelianType t) {
  switch (t) {
    case AbelianType::Ordinary:
      return stratum_of(HeightValue::finite(1), std::nullopt);
    case AbelianType::PRankOne:
      return stratum_of(HeightValue::finite(2), std::nullopt);
    case AbelianType::SupersingularNotSuperspecial:
      return stratum_of(HeightValue::infinite(), ArtinInvariant(2));
    case AbelianType::Superspecial:
      return stratum_of(HeightValue::infinite(), ArtinInvariant(1));
  }
  throw std::logic_error("unhandled abelian type");
}

}  // namespace k3strata
