// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).
//
// Newton/Hodge polygons in exact arithmetic and the 20-step height
// stratification they cut out on a 22-dimensional weight-2 lattice:
//
//   M(1) ⊃ M(2) ⊃ ... ⊃ M(10) ⊃ M(11) = Sigma(1) ⊃ Sigma(2) ⊃ ... ⊃ Sigma(10)
//
// M(h) carries the finite-height locus (height >= h), Sigma(i) the
// infinite-height locus sliced by the Artin invariant (sigma0 <= 11 - i).

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3strata/errors.hpp"
#include "k3strata/rational.hpp"

namespace k3strata {

struct Segment {
  Rational slope;
  std::int64_t multiplicity = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Convex piecewise-linear graph from (0,0) with integer break points,
// described by its multiset of slopes. Canonical form: slopes strictly
// increasing, equal slopes merged. Construction enforces, in this order:
// every slope in [0, weight] (SlopeOutOfRange), multiplicities summing to
// rank (RankMismatch), the slope multiset fixed under s -> weight - s
// (SymmetryViolation), and an integral y at every segment boundary
// (BreakIntegralityViolation). Symmetry plus integral breaks force the
// endpoint (rank, rank * weight / 2), so that needs no separate check.
class NewtonPolygon {
 public:
  std::int64_t weight() const { return weight_; }
  std::int64_t rank() const { return rank_; }
  const std::vector<Segment>& segments() const { return segments_; }

  Rational min_slope() const { return segments_.front().slope; }
  Rational max_slope() const { return segments_.back().slope; }

  // y-value of the graph at integer abscissa x in [0, rank].
  Rational value_at(std::int64_t x) const {
    if (x < 0 || x > rank_)
      throw std::invalid_argument("abscissa outside [0, rank]");
    Rational y = 0;
    std::int64_t used = 0;
    for (const Segment& s : segments_) {
      const std::int64_t step = std::min(s.multiplicity, x - used);
      if (step <= 0) break;
      y = y + s.slope * Rational(step);
      used += step;
    }
    return y;
  }

  Rational total_rise() const { return value_at(rank_); }

  // Flat view: one slope per lattice point, length == rank.
  std::vector<Rational> expanded_slopes() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(rank_));
    for (const Segment& s : segments_)
      out.insert(out.end(), static_cast<std::size_t>(s.multiplicity), s.slope);
    return out;
  }

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  friend NewtonPolygon make_newton(std::int64_t, std::int64_t,
                                   std::vector<Segment>);

  NewtonPolygon(std::int64_t weight, std::int64_t rank,
                std::vector<Segment> segments)
      : weight_(weight), rank_(rank), segments_(std::move(segments)) {}

  std::int64_t weight_ = 0;
  std::int64_t rank_ = 0;
  std::vector<Segment> segments_;
};

// Validating constructor; accepts slopes in any order, with repeats.
inline NewtonPolygon make_newton(std::int64_t weight, std::int64_t rank,
                                 std::vector<Segment> slopes) {
  if (weight < 1) throw std::invalid_argument("weight must be positive");
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  for (const Segment& s : slopes) {
    if (s.multiplicity < 1)
      throw std::invalid_argument("multiplicities must be positive");
    if (s.slope < Rational(0) || s.slope > Rational(weight))
      throw DomainError("SlopeOutOfRange",
                        "slope " + s.slope.str() + " outside [0, " +
                            std::to_string(weight) + "]");
  }

  std::sort(slopes.begin(), slopes.end(),
            [](const Segment& a, const Segment& b) { return a.slope < b.slope; });
  std::vector<Segment> merged;
  for (const Segment& s : slopes) {
    if (!merged.empty() && merged.back().slope == s.slope)
      merged.back().multiplicity += s.multiplicity;
    else
      merged.push_back(s);
  }

  std::int64_t total = 0;
  for (const Segment& s : merged) total += s.multiplicity;
  if (total != rank)
    throw DomainError("RankMismatch", "multiplicities sum to " +
                                          std::to_string(total) +
                                          ", expected " + std::to_string(rank));

  const std::size_t k = merged.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Segment& lo = merged[i];
    const Segment& hi = merged[k - 1 - i];
    if (lo.slope + hi.slope != Rational(weight) ||
        lo.multiplicity != hi.multiplicity)
      throw DomainError("SymmetryViolation",
                        "slope " + lo.slope.str() + " (multiplicity " +
                            std::to_string(lo.multiplicity) +
                            ") has no matching slope " +
                            (Rational(weight) - lo.slope).str());
  }

  Rational y = 0;
  for (const Segment& s : merged) {
    y = y + s.slope * Rational(s.multiplicity);
    if (!y.is_integer())
      throw DomainError("BreakIntegralityViolation",
                        "break after slope " + s.slope.str() +
                            " sits at non-integral height " + y.str());
  }

  return NewtonPolygon(weight, rank, std::move(merged));
}

inline NewtonPolygon make_newton(std::int64_t weight, std::int64_t rank,
                                 const std::vector<Rational>& slopes) {
  std::vector<Segment> segs;
  segs.reserve(slopes.size());
  for (const Rational& s : slopes) segs.push_back({s, 1});
  return make_newton(weight, rank, std::move(segs));
}

// Hodge polygon: integer slopes with fixed multiplicities; for weight-2 rank-22
// lattices this is 0, 1 (x20), 2.
class HodgePolygon {
 public:
  HodgePolygon(std::int64_t weight, std::vector<Segment> segments)
      : weight_(weight), segments_(std::move(segments)) {
    for (const Segment& s : segments_) rank_ += s.multiplicity;
  }

  std::int64_t weight() const { return weight_; }
  std::int64_t rank() const { return rank_; }
  const std::vector<Segment>& segments() const { return segments_; }

  Rational value_at(std::int64_t x) const {
    if (x < 0 || x > rank_)
      throw std::invalid_argument("abscissa outside [0, rank]");
    Rational y = 0;
    std::int64_t used = 0;
    for (const Segment& s : segments_) {
      const std::int64_t step = std::min(s.multiplicity, x - used);
      if (step <= 0) break;
      y = y + s.slope * Rational(step);
      used += step;
    }
    return y;
  }

  Rational total_rise() const { return value_at(rank_); }

 private:
  std::int64_t weight_ = 0;
  std::int64_t rank_ = 0;
  std::vector<Segment> segments_;
};

inline HodgePolygon hodge_k3() {
  return HodgePolygon(2, {{Rational(0), 1}, {Rational(1), 20}, {Rational(2), 1}});
}

// Height of the formal Brauer group: h with smallest slope 1 - 1/h, or
// infinite when the polygon is the straight slope-1 line.
class HeightValue {
 public:
  static HeightValue finite(int h) {
    if (h < 1 || h > 10)
      throw DomainError("NonIntegralHeight",
                        "height " + std::to_string(h) + " outside [1, 10]");
    HeightValue v;
    v.height_ = h;
    return v;
  }
  static HeightValue infinite() { return HeightValue(); }

  bool is_infinite() const { return height_ == 0; }
  int value() const {
    if (is_infinite())
      throw std::logic_error("value() called on infinite height");
    return height_;
  }

  std::string str() const {
    return is_infinite() ? "infinite" : std::to_string(height_);
  }

  friend bool operator==(const HeightValue&, const HeightValue&) = default;

 private:
  int height_ = 0;  // 0 encodes infinite
};

// Smallest slope alpha determines the height: h = 1 / (1 - alpha), infinite
// when alpha == 1. Requires weight 2, rank 22. NonIntegralHeight if
// 1 / (1 - alpha) is not an integer in [1, 10].
inline HeightValue height_of(const NewtonPolygon& np) {
  if (np.weight() != 2 || np.rank() != 22)
    throw std::invalid_argument("height is defined for weight-2 rank-22 polygons");
  const Rational alpha = np.min_slope();
  if (alpha == Rational(1)) return HeightValue::infinite();
  const Rational h = Rational(1) / (Rational(1) - alpha);
  if (!h.is_integer())
    throw DomainError("NonIntegralHeight",
                      "smallest slope " + alpha.str() +
                          " gives non-integral height " + h.str());
  if (h < Rational(1) || h > Rational(10))
    throw DomainError("NonIntegralHeight",
                      "smallest slope " + alpha.str() + " gives height " +
                          h.str() + " outside [1, 10]");
  return HeightValue::finite(static_cast<int>(h.num()));
}

// Canonical weight-2 rank-22 polygon of the given height:
//   finite h:  (1 - 1/h) x h,  1 x (22 - 2h),  (1 + 1/h) x h
//   infinite:  1 x 22
inline NewtonPolygon newton_from_height(const HeightValue& h) {
  if (h.is_infinite()) return make_newton(2, 22, {Segment{Rational(1), 22}});
  const std::int64_t k = h.value();
  std::vector<Segment> segs;
  segs.push_back({Rational(k - 1, k), k});
  if (22 - 2 * k > 0) segs.push_back({Rational(1), 22 - 2 * k});
  segs.push_back({Rational(k + 1, k), k});
  return make_newton(2, 22, std::move(segs));
}

// True iff np's graph is >= hp's graph at every abscissa. Both polygons have
// integral break points, so checking the integer abscissae suffices.
// EndpointMismatch if ranks or total rises differ.
inline bool lies_above(const NewtonPolygon& np, const HodgePolygon& hp) {
  if (np.rank() != hp.rank())
    throw DomainError("EndpointMismatch",
                      "ranks differ: " + std::to_string(np.rank()) + " vs " +
                          std::to_string(hp.rank()));
  if (np.total_rise() != hp.total_rise())
    throw DomainError("EndpointMismatch",
                      "total rises differ: " + np.total_rise().str() + " vs " +
                          hp.total_rise().str());
  for (std::int64_t x = 0; x <= np.rank(); ++x)
    if (np.value_at(x) < hp.value_at(x)) return false;
  return true;
}

enum class SurfaceClass { Ordinary, FiniteHeight, Supersingular };

inline std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Ordinary:
      return "ordinary";
    case SurfaceClass::FiniteHeight:
      return "finite-height";
    case SurfaceClass::Supersingular:
      return "supersingular";
  }
  return "unknown";
}

struct Classification {
  SurfaceClass kind;
  HeightValue height;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Classifies a weight-2 rank-22 polygon by height. Beyond height_of this
// insists the polygon actually is the canonical one for its height; shapes
// like {0 x2, 1 x18, 2 x2} pass construction but arise from no surface in
// this family, and are rejected with the same error height_of uses.
inline Classification classify(const NewtonPolygon& np) {
  const HeightValue h = height_of(np);
  if (!(np == newton_from_height(h)))
    throw DomainError("NonIntegralHeight",
                      "polygon is not the height-" + h.str() +
                          " polygon; no surface in this family realizes it");
  if (h.is_infinite()) return {SurfaceClass::Supersingular, h};
  if (h.value() == 1) return {SurfaceClass::Ordinary, h};
  return {SurfaceClass::FiniteHeight, h};
}

// Artin invariant sigma0 in [1, 10], from ord_p of the discriminant of the
// crystalline lattice (always even, equal to 2 * sigma0).
class ArtinInvariant {
 public:
  explicit ArtinInvariant(int sigma0) : sigma0_(sigma0) {
    if (sigma0 < 1 || sigma0 > 10)
      throw DomainError("OutOfRange", "Artin invariant " +
                                          std::to_string(sigma0) +
                                          " outside [1, 10]");
  }

  int value() const { return sigma0_; }

  friend bool operator==(const ArtinInvariant&, const ArtinInvariant&) = default;

 private:
  int sigma0_;
};

inline ArtinInvariant artin_from_discriminant_valuation(std::int64_t valuation) {
  if (valuation < 0)
    throw DomainError("OutOfRange", "discriminant valuation " +
                                        std::to_string(valuation) +
                                        " is negative");
  if (valuation % 2 != 0)
    throw DomainError("OddValuation", "discriminant valuation " +
                                          std::to_string(valuation) +
                                          " is odd");
  const std::int64_t sigma0 = valuation / 2;
  if (sigma0 < 1 || sigma0 > 10)
    throw DomainError("OutOfRange", "discriminant valuation " +
                                        std::to_string(valuation) +
                                        " gives Artin invariant outside [1, 10]");
  return ArtinInvariant(static_cast<int>(sigma0));
}

// One stratum of the 20-step filtration. position() linearizes the chain:
// M(h) -> h, Sigma(i) -> 10 + i; M(11) and Sigma(1) are the same stratum
// (position 11) under two names. strict marks membership in the stratum but
// not the next-deeper one; the deepest stratum Sigma(10) has no deeper
// neighbour, so there strict is false.
struct StratumLabel {
  enum class Kind { M, Sigma };

  Kind kind;
  int index;
  bool strict;

  int position() const { return kind == Kind::M ? index : 10 + index; }

  std::string str() const {
    return (kind == Kind::M ? "M(" : "Sigma(") + std::to_string(index) + ")";
  }

  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

inline StratumLabel stratum_of(const HeightValue& h,
                               std::optional<ArtinInvariant> sigma0) {
  if (h.is_infinite()) {
    if (!sigma0)
      throw DomainError("MissingArtinInvariant",
                        "infinite height requires an Artin invariant");
    const int i = 11 - sigma0->value();
    return {StratumLabel::Kind::Sigma, i, i < 10};
  }
  if (sigma0)
    throw DomainError("UnexpectedArtinInvariant",
                      "finite height admits no Artin invariant");
  return {StratumLabel::Kind::M, h.value(), true};
}

}  // namespace k3strata
