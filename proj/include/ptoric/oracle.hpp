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

// Brute-force verifiers. Nothing here reuses the construction paths of the
// code module: ranks come from plain row reduction, distances from message
// enumeration, class counts from pairwise union-find on facet tightness.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "ptoric/code.hpp"
#include "ptoric/errors.hpp"
#include "ptoric/gf.hpp"
#include "ptoric/polytope.hpp"

namespace ptoric::oracle {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Row-reduces a copy of `m`; returns the nonzero rows of the echelon form.
inline FqMatrix row_basis(const FqMatrix& m, const Field& field) {
  FqMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Element inv = field.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = field.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Element f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = field.sub(a(i, j), field.mul(f, a(r, j)));
    }
    ++r;
  }
  FqMatrix basis(0, 0);
  for (std::size_t i = 0; i < r; ++i) basis.append_row(a.row(i));
  return basis;
}

inline std::size_t rank_gf(const FqMatrix& m, const Field& field) { return row_basis(m, field).rows(); }

inline std::uint64_t weight(std::span<const Element> v) {
  return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](Element e) { return !e.is_zero(); }));
}

/// Exact minimum distance of the row space of `m` by enumerating messages.
///
/// Only messages whose leading nonzero coefficient is 1 are visited (scalar
/// multiples share a weight). Refuses with BudgetExceeded when q^rank > budget.
inline std::uint64_t min_distance_exhaustive(const FqMatrix& m, const Field& field,
                                             std::uint64_t budget = kDefaultBudget, unsigned workers = 0) {
  const FqMatrix basis = row_basis(m, field);
  const std::size_t k = basis.rows(), n = basis.cols();
  if (k == 0) throw ValidationError("code has no nonzero codeword");
  const std::uint32_t q = field.q();
  {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (__builtin_mul_overflow(total, std::uint64_t{q}, &total) || total > budget)
        throw BudgetExceeded("exhaustive search needs q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                             " messages, over the budget of " + std::to_string(budget));
    }
  }

  // delta[i][c] = (e_{c+1} - e_c) * row_i, the change when digit i steps code c -> c+1 (mod q)
  std::vector<std::vector<std::vector<Element>>> delta(k, std::vector<std::vector<Element>>(q));
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t c = 0; c < q; ++c) {
      const Element step = field.sub(Element{(c + 1) % q}, Element{c});
      auto& d = delta[i][c];
      d.resize(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = field.mul(step, basis(i, j));
    }

  // Task: leading position lead, and (when lead+1 < k) a fixed code for position lead+1.
  struct Task {
    std::size_t lead;
    std::uint32_t next;
  };
  std::vector<Task> tasks;
  for (std::size_t lead = 0; lead < k; ++lead) {
    if (lead + 1 < k)
      for (std::uint32_t c = 0; c < q; ++c) tasks.push_back({lead, c});
    else
      tasks.push_back({lead, 0});
  }

  auto run = [&](const Task& t) {
    std::vector<Element> cw(n);
    for (std::size_t j = 0; j < n; ++j) cw[j] = basis(t.lead, j);
    std::size_t free_from = t.lead + 1;
    if (t.lead + 1 < k) {
      const Element coef{t.next};
      for (std::size_t j = 0; j < n; ++j) cw[j] = field.add(cw[j], field.mul(coef, basis(t.lead + 1, j)));
      free_from = t.lead + 2;
    }
    std::uint64_t w = weight(cw), best = w;
    std::vector<std::uint32_t> digits(k, 0);
    for (;;) {
      std::size_t i = free_from;
      // odometer step over positions free_from..k-1
      while (i < k) {
        const std::uint32_t c = digits[i];
        const auto& d = delta[i][c];
        for (std::size_t j = 0; j < n; ++j) {
          if (d[j].is_zero()) continue;
          const bool was = !cw[j].is_zero();
          cw[j] = field.add(cw[j], d[j]);
          const bool now = !cw[j].is_zero();
          if (was != now) now ? ++w : --w;
        }
        digits[i] = (c + 1) % q;
        if (digits[i] != 0) break;
        ++i;
      }
      if (i == k) break;
      best = std::min(best, w);
    }
    return best;
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
  std::vector<std::uint64_t> results(tasks.size(), std::numeric_limits<std::uint64_t>::max());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run(tasks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run(tasks[i]);
      });
    for (auto& th : pool) th.join();
  }
  return *std::min_element(results.begin(), results.end());
}

/// Upper bound on the minimum distance from random nonzero messages.
inline std::uint64_t min_weight_random_upper(const FqMatrix& m, const Field& field, std::uint64_t iterations,
                                             std::uint64_t seed = kDefaultSeed) {
  const FqMatrix basis = row_basis(m, field);
  const std::size_t k = basis.rows(), n = basis.cols();
  if (k == 0) throw ValidationError("code has no nonzero codeword");
  if (iterations == 0) throw ValidationError("need at least one iteration");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, field.q() - 1);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<Element> msg(k), cw(n);
  for (std::uint64_t it = 0; it < iterations; ++it) {
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : msg) {
        c = Element{coef(rng)};
        nonzero |= !c.is_zero();
      }
    }
    std::fill(cw.begin(), cw.end(), field.zero());
    for (std::size_t i = 0; i < k; ++i) {
      if (msg[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) cw[j] = field.add(cw[j], field.mul(msg[i], basis(i, j)));
    }
    best = std::min(best, weight(cw));
  }
  return best;
}

/// Number of classes of the face-by-face relation by pairwise union-find.
inline std::size_t reduction_class_count_unionfind(const LatticePolytope& p, std::uint32_t q) {
  const auto pts = lattice_points(p);
  std::vector<std::vector<std::size_t>> tight;
  for (const auto& m : pts) tight.push_back(p.tight_facets(m));
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Integer modulus = q - 1;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (tight[i] != tight[j]) continue;
      bool congruent = true;
      for (std::size_t c = 0; c < pts[i].size() && congruent; ++c)
        congruent = (pts[i][c] - pts[j][c]) % modulus == 0;
      if (congruent) parent[find(i)] = find(j);
    }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) roots += find(i) == i;
  return roots;
}

/// Vertices of a polygon in counter-clockwise order (angular sort about the centroid).
inline std::vector<Point> polygon_cycle(const LatticePolytope& p) {
  if (p.dim() != 2) throw ValidationError("polygon_cycle needs a 2-dimensional polytope");
  std::vector<Point> v = p.vertices();
  double cx = 0, cy = 0;
  for (const auto& x : v) {
    cx += static_cast<double>(x[0]);
    cy += static_cast<double>(x[1]);
  }
  cx /= static_cast<double>(v.size());
  cy /= static_cast<double>(v.size());
  std::sort(v.begin(), v.end(), [&](const Point& a, const Point& b) {
    return std::atan2(static_cast<double>(a[1]) - cy, static_cast<double>(a[0]) - cx) <
           std::atan2(static_cast<double>(b[1]) - cy, static_cast<double>(b[0]) - cx);
  });
  return v;
}

/// Twice the area of a polygon (shoelace).
inline Integer shoelace_area2(const LatticePolytope& p) {
  const auto v = polygon_cycle(p);
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return std::llabs(s);
}

/// Pick's theorem: 2A = 2I + B - 2, with B from edge gcds and I the
/// remaining enumerated lattice points.
inline bool pick_check(const LatticePolytope& p) {
  const auto v = polygon_cycle(p);
  Integer boundary = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    boundary += std::gcd(std::llabs(b[0] - a[0]), std::llabs(b[1] - a[1]));
  }
  const auto total = static_cast<Integer>(lattice_points(p).size());
  const Integer interior = total - boundary;
  return shoelace_area2(p) == 2 * interior + boundary - 2;
}

/// Entries of a generator matrix violating "entry is nonzero iff the row point
/// lies on the column face", with membership decided from facet slacks.
inline std::size_t block_support_violations(const EvaluationMatrix& m, const LatticePolytope& p,
                                            const FaceLattice& faces) {
  std::size_t bad = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& facets = faces[m.columns[c].face].facets;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      bool on = true;
      for (auto f : facets) on = on && p.slack(m.row_points[r], f) == 0;
      if (on == m.entries(r, c).is_zero()) ++bad;
    }
  }
  return bad;
}

}  // namespace ptoric::oracle
