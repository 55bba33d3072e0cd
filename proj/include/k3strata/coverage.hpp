// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).
//
// Which degrees d = 2 n^2 d' - sum of 16 squares are achievable? Two small
// dynamic programs answer this: one over exact sums, one over residues mod
// 2 n^2. They are deliberately independent implementations of the same
// question and the tests hold them against each other.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3strata/errors.hpp"
#include "k3strata/kummer.hpp"

namespace k3strata {

// Sums v_1^2 + ... + v_k^2 with every v_i in [1, max_part]. Keeps the DP
// layers so any reachable sum can be traced back to a witness tuple.
class SumSet {
 public:
  SumSet(int parts, int max_part) : parts_(parts), max_part_(max_part) {
    if (parts < 1 || max_part < 1)
      throw std::invalid_argument("parts and max_part must be >= 1");
    const std::int64_t top = static_cast<std::int64_t>(parts) * max_part * max_part;
    layers_.assign(static_cast<std::size_t>(parts) + 1,
                   std::vector<char>(static_cast<std::size_t>(top) + 1, 0));
    layers_[0][0] = 1;
    for (int t = 1; t <= parts; ++t)
      for (std::int64_t s = 0; s <= top; ++s) {
        if (!layers_[static_cast<std::size_t>(t) - 1][static_cast<std::size_t>(s)])
          continue;
        for (std::int64_t v = 1; v <= max_part; ++v) {
          const std::int64_t next = s + v * v;
          if (next > top) break;
          layers_[static_cast<std::size_t>(t)][static_cast<std::size_t>(next)] = 1;
        }
      }
  }

  int parts() const { return parts_; }
  int max_part() const { return max_part_; }
  std::int64_t min_sum() const { return parts_; }
  std::int64_t max_sum() const {
    return static_cast<std::int64_t>(parts_) * max_part_ * max_part_;
  }

  bool contains(std::int64_t s) const {
    return s >= 0 && s <= max_sum() &&
           layers_.back()[static_cast<std::size_t>(s)] != 0;
  }

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (std::int64_t s = 0; s <= max_sum(); ++s)
      if (contains(s)) out.push_back(s);
    return out;
  }

  // Tuple realizing s, filled from the last position backwards taking the
  // smallest part value that stays reachable.
  std::vector<int> witness(std::int64_t s) const {
    if (!contains(s)) throw std::invalid_argument("sum is not reachable");
    std::vector<int> tuple(static_cast<std::size_t>(parts_), 0);
    for (int t = parts_; t >= 1; --t) {
      bool found = false;
      for (std::int64_t v = 1; v <= max_part_; ++v) {
        const std::int64_t prev = s - v * v;
        if (prev < 0) break;
        if (layers_[static_cast<std::size_t>(t) - 1][static_cast<std::size_t>(prev)]) {
          tuple[static_cast<std::size_t>(t) - 1] = static_cast<int>(v);
          s = prev;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("witness traversal lost reachability");
    }
    return tuple;
  }

 private:
  int parts_;
  int max_part_;
  std::vector<std::vector<char>> layers_;  // layers_[t][s]: s reachable with t parts
};

inline SumSet reachable_sums(int parts, int max_part) {
  return SumSet(parts, max_part);
}

// Subset of Z/m.
class ResidueSet {
 public:
  ResidueSet(std::int64_t modulus, std::vector<char> members)
      : modulus_(modulus), members_(std::move(members)) {
    if (modulus_ < 1) throw std::invalid_argument("modulus must be >= 1");
    if (members_.size() != static_cast<std::size_t>(modulus_))
      throw std::invalid_argument("member table size must equal modulus");
  }

  std::int64_t modulus() const { return modulus_; }
  bool contains(std::int64_t r) const {
    return members_[static_cast<std::size_t>(((r % modulus_) + modulus_) % modulus_)] != 0;
  }
  std::int64_t count() const {
    return std::count(members_.begin(), members_.end(), char(1));
  }
  bool full() const { return count() == modulus_; }

  std::vector<std::int64_t> members() const {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r < modulus_; ++r)
      if (members_[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
  }
  std::vector<std::int64_t> missing() const {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r < modulus_; ++r)
      if (!members_[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
  }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::int64_t modulus_;
  std::vector<char> members_;
};

// Residues of k-term square sums mod m, computed directly in Z/m without
// materializing the sums. Layered like SumSet for witness extraction.
class ResidueReachability {
 public:
  ResidueReachability(std::int64_t modulus, int parts, int max_part)
      : modulus_(modulus), parts_(parts), max_part_(max_part) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    if (parts < 1 || max_part < 1)
      throw std::invalid_argument("parts and max_part must be >= 1");
    layers_.assign(static_cast<std::size_t>(parts) + 1,
                   std::vector<char>(static_cast<std::size_t>(modulus), 0));
    layers_[0][0] = 1;
    std::vector<std::int64_t> squares;
    for (std::int64_t v = 1; v <= max_part; ++v) squares.push_back((v * v) % modulus);
    for (int t = 1; t <= parts; ++t)
      for (std::int64_t r = 0; r < modulus; ++r) {
        if (!layers_[static_cast<std::size_t>(t) - 1][static_cast<std::size_t>(r)])
          continue;
        for (std::int64_t sq : squares)
          layers_[static_cast<std::size_t>(t)][static_cast<std::size_t>((r + sq) % modulus)] = 1;
      }
  }

  ResidueSet result() const { return ResidueSet(modulus_, layers_.back()); }

  std::vector<int> witness(std::int64_t r) const {
    r = ((r % modulus_) + modulus_) % modulus_;
    if (!layers_.back()[static_cast<std::size_t>(r)])
      throw std::invalid_argument("residue is not reachable");
    std::vector<int> tuple(static_cast<std::size_t>(parts_), 0);
    for (int t = parts_; t >= 1; --t) {
      bool found = false;
      for (std::int64_t v = 1; v <= max_part_; ++v) {
        const std::int64_t prev = ((r - v * v) % modulus_ + modulus_) % modulus_;
        if (layers_[static_cast<std::size_t>(t) - 1][static_cast<std::size_t>(prev)]) {
          tuple[static_cast<std::size_t>(t) - 1] = static_cast<int>(v);
          r = prev;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("witness traversal lost reachability");
    }
    return tuple;
  }

 private:
  std::int64_t modulus_;
  int parts_;
  int max_part_;
  std::vector<std::vector<char>> layers_;
};

inline ResidueSet reachable_residues(std::int64_t modulus, int parts, int max_part) {
  return ResidueReachability(modulus, parts, max_part).result();
}

// Same set by the other route: enumerate exact sums, then reduce. Kept as an
// independent cross-check of reachable_residues.
inline ResidueSet reachable_residues_from_sums(std::int64_t modulus,
                                               const SumSet& sums) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<char> members(static_cast<std::size_t>(modulus), 0);
  for (std::int64_t s : sums.values())
    members[static_cast<std::size_t>(s % modulus)] = 1;
  return ResidueSet(modulus, std::move(members));
}

// Sixteen squares with parts in [1, 4] cover every residue mod 162.
inline bool verify_lemma_res() { return reachable_residues(162, 16, 4).full(); }

// Largest part value admitted for multiplier n: ceil(n / 2) - 1. Positive
// only from n = 3 on.
inline int remark_part_bound(std::int64_t n) {
  if (n < 3)
    throw DomainError("PartBoundEmpty",
                      "no positive parts satisfy the bound for n = " +
                          std::to_string(n));
  return static_cast<int>((n - 1) / 2);
}

// Sixteen squares with parts up to remark_part_bound(n) cover Z/(2 n^2)?
inline bool verify_remark(std::int64_t n) {
  return reachable_residues(2 * n * n, 16, remark_part_bound(n)).full();
}

struct CoverageWitness {
  std::int64_t residue = 0;
  std::vector<int> parts;

  friend bool operator==(const CoverageWitness&, const CoverageWitness&) = default;
};

struct CoverageResult {
  std::int64_t n = 0;
  std::int64_t dprime_min = 0;
  int max_part = 0;
  std::int64_t modulus = 0;   // 2 n^2
  std::int64_t min_sum = 0;   // 16, all parts at their minimum
  std::int64_t threshold = 0; // modulus * dprime_min - min_sum
  std::vector<CoverageWitness> witnesses;  // one per residue, ascending
  std::int64_t computed_dprime_min = 0;    // least d' passing the generic bound at max_part
};

// Least d' for which 64 B^2 < n^2 d' holds at the largest allowed part B.
inline std::int64_t least_dprime_for_generic_bound(std::int64_t n, int max_part) {
  const std::int64_t b = max_part;
  return (64 * b * b) / (n * n) + 1;
}

// Threshold D = 2 n^2 dprime_min - 16: with full residue coverage, every
// degree d >= D is realized by some d' >= dprime_min and parts in
// [1, max_part]. D is the formula value, not the least such degree; letting
// d' grow can realize scattered degrees below it. IncompleteResidueCoverage
// when some residue mod 2 n^2 is unreachable.
inline CoverageResult coverage_threshold(std::int64_t n, std::int64_t dprime_min,
                                         int max_part) {
  if (n < 1 || dprime_min < 1 || max_part < 1)
    throw std::invalid_argument("n, dprime_min, max_part must be >= 1");
  CoverageResult out;
  out.n = n;
  out.dprime_min = dprime_min;
  out.max_part = max_part;
  out.modulus = 2 * n * n;
  out.min_sum = 16;
  const ResidueReachability dp(out.modulus, 16, max_part);
  const ResidueSet reached = dp.result();
  if (!reached.full()) {
    const std::vector<std::int64_t> gaps = reached.missing();
    std::string detail = "parts in [1, " + std::to_string(max_part) +
                         "] miss " + std::to_string(gaps.size()) +
                         " residues mod " + std::to_string(out.modulus) + ":";
    for (std::size_t i = 0; i < gaps.size() && i < 8; ++i)
      detail += " " + std::to_string(gaps[i]);
    if (gaps.size() > 8) detail += " ...";
    throw DomainError("IncompleteResidueCoverage", detail);
  }
  out.threshold = out.modulus * dprime_min - out.min_sum;
  out.witnesses.reserve(static_cast<std::size_t>(out.modulus));
  for (std::int64_t r = 0; r < out.modulus; ++r)
    out.witnesses.push_back({r, dp.witness(r)});
  out.computed_dprime_min = least_dprime_for_generic_bound(n, max_part);
  return out;
}

enum class Parity { Any, Even, Odd };

struct DegreeFilter {
  Parity parity = Parity::Any;
  std::int64_t coprime_to = 0;  // 0: no coprimality constraint

  friend bool operator==(const DegreeFilter&, const DegreeFilter&) = default;
};

namespace detail {
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}
}  // namespace detail

// All d = 2 n^2 d' - s over d' in [dprime_lo, dprime_hi] and s in sums,
// filtered, sorted, deduplicated.
inline std::vector<std::int64_t> achievable_degrees(
    std::int64_t n, std::int64_t dprime_lo, std::int64_t dprime_hi,
    const std::vector<std::int64_t>& sums, const DegreeFilter& filter = {}) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (dprime_lo < 1 || dprime_hi < dprime_lo)
    throw std::invalid_argument("need 1 <= dprime_lo <= dprime_hi");
  std::vector<std::int64_t> out;
  for (std::int64_t dp = dprime_lo; dp <= dprime_hi; ++dp)
    for (std::int64_t s : sums) {
      const std::int64_t d = 2 * n * n * dp - s;
      if (filter.parity == Parity::Even && d % 2 != 0) continue;
      if (filter.parity == Parity::Odd && (d % 2 + 2) % 2 != 1) continue;
      if (filter.coprime_to != 0 && detail::gcd64(d, filter.coprime_to) != 1)
        continue;
      out.push_back(d);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::int64_t> achievable_degrees(std::int64_t n,
                                                    std::int64_t dprime_lo,
                                                    std::int64_t dprime_hi,
                                                    int max_part,
                                                    const DegreeFilter& filter = {}) {
  return achievable_degrees(n, dprime_lo, dprime_hi,
                            reachable_sums(16, max_part).values(), filter);
}

// One row of the headline-bounds report: a parameter family, its degree
// threshold and spacing, and an ampleness audit at the family's stated
// parameters.
struct FamilyRow {
  std::string family;
  std::int64_t n = 0;
  std::int64_t dprime_min = 0;
  int part_bound = 0;
  std::optional<std::array<std::int64_t, 16>> fixed_parts;
  std::int64_t modulus = 0;
  std::int64_t min_sum = 0;
  std::int64_t threshold = 0;
  std::int64_t step = 0;
  std::int64_t witness_count = 0;
  std::int64_t computed_dprime_min = 0;
  std::string variant;
  std::array<std::int64_t, 16> audited_parts{};
  AmplenessReport ampleness;
  bool ampleness_discrepancy = false;
};

struct PaperBoundsReport {
  std::vector<FamilyRow> families;
};

// The three headline families. The "even" row's stated parameters fail the
// generic bound (64 >= d' for every d' <= 64 at n = 1), which the audit
// records as a discrepancy rather than papering over; its degree arithmetic
// is reproduced as stated.
inline PaperBoundsReport paper_bounds_report() {
  PaperBoundsReport report;

  {
    FamilyRow row;
    row.family = "general";
    row.n = 9;
    row.dprime_min = 26;
    row.part_bound = 4;
    const CoverageResult cov = coverage_threshold(row.n, row.dprime_min, row.part_bound);
    row.modulus = cov.modulus;
    row.min_sum = cov.min_sum;
    row.threshold = cov.threshold;
    row.step = 1;
    row.witness_count = static_cast<std::int64_t>(cov.witnesses.size());
    row.computed_dprime_min = cov.computed_dprime_min;
    const AmplenessVariant v = AmplenessVariant::non_product();
    row.variant = v.str();
    row.audited_parts.fill(row.part_bound);
    KummerParams params;
    params.n = row.n;
    params.dprime = row.dprime_min;
    std::copy(row.audited_parts.begin(), row.audited_parts.end(), params.parts.begin());
    row.ampleness = check_ampleness(params, v);
    row.ampleness_discrepancy = !row.ampleness.ample;
    report.families.push_back(std::move(row));
  }

  {
    FamilyRow row;
    row.family = "even";
    row.n = 1;
    row.dprime_min = 32;
    row.part_bound = 1;
    row.fixed_parts.emplace();
    row.fixed_parts->fill(1);
    row.modulus = 2;
    row.min_sum = 16;
    row.threshold = 2 * row.dprime_min - 16;  // 48
    row.step = 2;
    row.witness_count = 1;
    row.computed_dprime_min = least_dprime_for_generic_bound(row.n, row.part_bound);
    const AmplenessVariant v = AmplenessVariant::min_elliptic_intersection(3);
    row.variant = v.str();
    row.audited_parts = *row.fixed_parts;
    KummerParams params;
    params.n = row.n;
    params.dprime = row.dprime_min;
    params.parts = *row.fixed_parts;
    row.ampleness = check_ampleness(params, v);
    row.ampleness_discrepancy = !row.ampleness.ample;
    report.families.push_back(std::move(row));
  }

  {
    FamilyRow row;
    row.family = "odd";
    row.n = 1;
    row.dprime_min = 512;
    row.part_bound = 2;
    row.fixed_parts.emplace();
    row.fixed_parts->fill(2);
    (*row.fixed_parts)[0] = 1;
    row.modulus = 2;
    row.min_sum = 61;  // 1 + 15 * 4
    row.threshold = 2 * row.dprime_min - 61;  // 963
    row.step = 2;
    row.witness_count = 1;
    row.computed_dprime_min = least_dprime_for_generic_bound(row.n, row.part_bound);
    const AmplenessVariant v = AmplenessVariant::min_elliptic_intersection(9);
    row.variant = v.str();
    row.audited_parts = *row.fixed_parts;
    KummerParams params;
    params.n = row.n;
    params.dprime = row.dprime_min;
    params.parts = *row.fixed_parts;
    row.ampleness = check_ampleness(params, v);
    row.ampleness_discrepancy = !row.ampleness.ample;
    report.families.push_back(std::move(row));
  }

  return report;
}

}  // namespace k3strata
