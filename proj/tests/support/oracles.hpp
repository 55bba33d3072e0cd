// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).
//
// Reference oracles: the slowest, most obviously correct way to compute each
// quantity. Nothing here shares code with the library paths under test; the
// suite and the fixture seeder both lean on these.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "k3strata/polygon.hpp"
#include "k3strata/rational.hpp"

namespace k3strata::oracles {

// Every sum of k squares with parts in [1, max_part], by literal tuple
// enumeration. Only sane for max_part^k small.
inline std::set<std::int64_t> sums_by_tuples(int k, int max_part) {
  std::set<std::int64_t> out;
  std::vector<int> tuple(static_cast<std::size_t>(k), 1);
  while (true) {
    std::int64_t s = 0;
    for (int v : tuple) s += static_cast<std::int64_t>(v) * v;
    out.insert(s);
    int i = k - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == max_part) {
      tuple[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
  }
  return out;
}

// Same set via multisets (order of parts never matters for the sum), usable
// for k = 16 where tuple enumeration is hopeless.
inline void sums_by_multisets_rec(int value, int remaining, std::int64_t acc,
                                  std::set<std::int64_t>& out) {
  if (value == 1) {
    out.insert(acc + remaining);  // all remaining parts are 1
    return;
  }
  for (int count = 0; count <= remaining; ++count)
    sums_by_multisets_rec(value - 1, remaining - count,
                          acc + static_cast<std::int64_t>(count) * value * value,
                          out);
}

inline std::set<std::int64_t> sums_by_multisets(int k, int max_part) {
  std::set<std::int64_t> out;
  sums_by_multisets_rec(max_part, k, 0, out);
  return out;
}

inline std::set<std::int64_t> reduce_mod(const std::set<std::int64_t>& values,
                                         std::int64_t m) {
  std::set<std::int64_t> out;
  for (std::int64_t v : values) out.insert(((v % m) + m) % m);
  return out;
}

// Projective point count of y^2 = x^3 + a x + b over F_p by scanning the
// full (x, y) grid. Quadratic in p; keep p small.
inline std::int64_t curve_count_by_grid(std::int64_t p, std::int64_t a,
                                        std::int64_t b) {
  std::int64_t count = 1;  // point at infinity
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = ((x * x % p) * x + a * x + b) % p;
    const std::int64_t target = ((rhs % p) + p) % p;
    for (std::int64_t y = 0; y < p; ++y)
      if ((y * y) % p == target) ++count;
  }
  return count;
}

inline std::vector<Rational> pairwise_sums(const std::array<Rational, 4>& l) {
  std::vector<Rational> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out.push_back(l[i] + l[j]);
  std::sort(out.begin(), out.end());
  return out;
}

// All valid weight-2 rank-22 polygons with at most two symmetric slope pairs
// around a slope-1 plateau, whose smallest slope is alpha. Denominators of
// the second pair run up to max_den. Used to confirm that a given smallest
// slope pins down the whole polygon.
inline std::vector<NewtonPolygon> two_pair_polygons_with_min_slope(
    const Rational& alpha, int max_den) {
  std::vector<NewtonPolygon> found;
  const auto try_add = [&](std::vector<Segment> segs) {
    try {
      NewtonPolygon np = make_newton(2, 22, std::move(segs));
      if (np.min_slope() == alpha) found.push_back(std::move(np));
    } catch (const DomainError&) {
    }
  };
  for (std::int64_t m1 = 1; 2 * m1 <= 22; ++m1) {
    // one pair plus plateau
    {
      std::vector<Segment> segs{{alpha, m1}, {Rational(2) - alpha, m1}};
      if (22 - 2 * m1 > 0) segs.push_back({Rational(1), 22 - 2 * m1});
      try_add(std::move(segs));
    }
    // two pairs plus plateau
    for (int den = 1; den <= max_den; ++den)
      for (int num = 0; Rational(num, den) < Rational(1); ++num) {
        const Rational beta(num, den);
        if (beta <= alpha) continue;
        for (std::int64_t m2 = 1; 2 * m1 + 2 * m2 <= 22; ++m2) {
          std::vector<Segment> segs{{alpha, m1},
                                    {beta, m2},
                                    {Rational(2) - beta, m2},
                                    {Rational(2) - alpha, m1}};
          if (22 - 2 * m1 - 2 * m2 > 0)
            segs.push_back({Rational(1), 22 - 2 * m1 - 2 * m2});
          try_add(std::move(segs));
        }
      }
  }
  // canonicalize the list: drop duplicates produced by unreduced beta
  std::vector<NewtonPolygon> unique;
  for (NewtonPolygon& np : found) {
    bool seen = false;
    for (const NewtonPolygon& u : unique)
      if (u == np) {
        seen = true;
        break;
      }
    if (!seen) unique.push_back(std::move(np));
  }
  return unique;
}

}  // namespace k3strata::oracles
