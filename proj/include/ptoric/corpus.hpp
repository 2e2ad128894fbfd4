// Copyright 2026 The ptoric Authors.
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

// Seeded random lattice polygons and unimodular maps for property checks.

#include <cstdint>
#include <random>
#include <vector>

#include "ptoric/errors.hpp"
#include "ptoric/intlat.hpp"
#include "ptoric/polytope.hpp"

namespace ptoric::corpus {

/// Convex hulls of 3 to 6 uniform points in [-box, box]^2, degenerate draws skipped.
inline std::vector<LatticePolytope> random_polygons(std::size_t count, std::uint64_t seed, Integer box = 5) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Integer> coord(-box, box);
  std::uniform_int_distribution<int> npts(3, 6);
  std::vector<LatticePolytope> out;
  while (out.size() < count) {
    std::vector<Point> pts(static_cast<std::size_t>(npts(rng)));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    try {
      out.push_back(LatticePolytope::from_vertices(pts));
    } catch (const ValidationError&) {
    }
  }
  return out;
}

/// Product of a few random elementary matrices and sign flips: det = +-1.
template <class Rng>
IntMatrix random_unimodular(std::size_t n, Rng& rng, int steps = 4) {
  IntMatrix u = identity_matrix(n);
  if (n < 2) {
    if (rng() & 1) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<Integer> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (j + 1) % n;
    const Integer f = factor(rng);
    for (std::size_t r = 0; r < n; ++r) u(r, i) = checked::add(u(r, i), checked::mul(f, u(r, j)));
  }
  if (rng() & 1)
    for (std::size_t r = 0; r < n; ++r) u(r, 0) = -u(r, 0);
  return u;
}

}  // namespace ptoric::corpus
