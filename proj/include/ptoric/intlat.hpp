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

// Exact integer matrix algebra: Hermite normal form with transform,
// determinant, rank, Smith invariant factors.
//
// All arithmetic is 64-bit with overflow detection; a computation that would
// wrap throws OverflowError instead.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <tuple>
#include <vector>

#include "ptoric/errors.hpp"
#include "ptoric/matrix.hpp"

namespace ptoric {

using Integer = std::int64_t;
using IntVector = std::vector<Integer>;
using IntMatrix = Matrix<Integer>;

namespace checked {

inline Integer add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}
inline Integer sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}
inline Integer mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}
inline Integer neg(Integer a) { return sub(0, a); }
// a*b + c*d
inline Integer dot2(Integer a, Integer b, Integer c, Integer d) {
  return add(mul(a, b), mul(c, d));
}

}  // namespace checked

/// Floor division (rounds toward negative infinity). `b` must be nonzero.
inline Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Representative of `a` modulo `m` in [0, m).
inline Integer mod_floor(Integer a, Integer m) {
  Integer r = a % m;
  return r < 0 ? r + m : r;
}

/// Extended gcd: returns (g, x, y) with x*a + y*b = g >= 0.
inline std::tuple<Integer, Integer, Integer> ext_gcd(Integer a, Integer b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, checked::sub(old_r, checked::mul(q, r)));
    std::tie(old_s, s) = std::make_tuple(s, checked::sub(old_s, checked::mul(q, s)));
    std::tie(old_t, t) = std::make_tuple(t, checked::sub(old_t, checked::mul(q, t)));
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

/// gcd of the absolute values; 0 for an all-zero (or empty) vector.
inline Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (Integer x : v) g = std::gcd(g, x);
  return g;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = checked::add(c(i, j), checked::mul(a(i, k), b(k, j)));
    }
  return c;
}

/// A * v for a column vector v.
inline IntVector mat_vec(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols() != v.size()) throw ValidationError("matrix-vector dimension mismatch");
  IntVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[i] = checked::add(out[i], checked::mul(a(i, j), v[j]));
  return out;
}

inline IntMatrix identity_matrix(std::size_t n) { return IntMatrix::identity(n, 0, 1); }

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& a) {
  if (!a.square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = checked::sub(checked::mul(m(i, j), m(k, k)), checked::mul(m(i, k), m(k, j)));
        m(i, j) = num / prev;  // exact by Sylvester's identity
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return checked::mul(sign, m(n - 1, n - 1));
}

/// Rank over the rationals.
inline std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer num = checked::sub(checked::mul(m(i, j), m(r, c)), checked::mul(m(i, c), m(r, j)));
        m(i, j) = num / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Result of `hnf_lower`: A * transform == hermite.
struct HermiteForm {
  IntMatrix hermite;
  IntMatrix transform;
};

/// Lower-triangular Hermite normal form via unimodular column operations.
///
/// The output is canonical: diagonal entries are positive and every entry to
/// the left of the diagonal lies in [0, h_ii). Throws SingularMatrixError if
/// `a` is singular.
inline HermiteForm hnf_lower(const IntMatrix& a) {
  if (!a.square()) throw ValidationError("hnf_lower expects a square matrix");
  const std::size_t n = a.rows();
  IntMatrix h = a;
  IntMatrix t = identity_matrix(n);

  // col_x <- cx*col_x + dx*col_y ; col_y <- cy*col_x + dy*col_y
  auto combine = [n](IntMatrix& m, std::size_t x, std::size_t y, Integer cx, Integer dx,
                     Integer cy, Integer dy) {
    for (std::size_t r = 0; r < n; ++r) {
      const Integer vx = m(r, x), vy = m(r, y);
      m(r, x) = checked::dot2(cx, vx, dx, vy);
      m(r, y) = checked::dot2(cy, vx, dy, vy);
    }
  };
  auto axpy_col = [n](IntMatrix& m, std::size_t dst, std::size_t src, Integer f) {
    for (std::size_t r = 0; r < n; ++r)
      m(r, dst) = checked::sub(m(r, dst), checked::mul(f, m(r, src)));
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Integer b = h(i, j);
      if (b == 0) continue;
      const Integer aii = h(i, i);
      auto [g, x, y] = ext_gcd(aii, b);
      // [[x, -b/g], [y, aii/g]] has determinant 1.
      const Integer bg = b / g, ag = aii / g;
      combine(h, i, j, x, y, checked::neg(bg), ag);
      combine(t, i, j, x, y, checked::neg(bg), ag);
    }
    if (h(i, i) == 0) throw SingularMatrixError("hnf_lower: matrix is singular");
    if (h(i, i) < 0) {
      for (std::size_t r = 0; r < n; ++r) {
        h(r, i) = checked::neg(h(r, i));
        t(r, i) = checked::neg(t(r, i));
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Integer f = floor_div(h(i, j), h(i, i));
      if (f == 0) continue;
      axpy_col(h, j, i, f);
      axpy_col(t, j, i, f);
    }
  }
  return {std::move(h), std::move(t)};
}

/// Inverse of a unimodular matrix (|det| = 1), via the adjugate.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.square()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const Integer det = determinant(a);
  if (det != 1 && det != -1) throw ValidationError("matrix is not unimodular");
  IntMatrix inv(n, n, 0);
  if (n == 1) {
    inv(0, 0) = det;
    return inv;
  }
  IntMatrix minor(n - 1, n - 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = checked::neg(cof);
      inv(j, i) = checked::mul(cof, det);  // adj / det with det = +-1
    }
  return inv;
}

/// Smith invariant factors d_1 | d_2 | ... | d_N of an r x N matrix of rank N.
///
/// Throws ValidationError when the rank is below N.
inline IntVector snf_invariant_factors(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows < cols) throw ValidationError("snf_invariant_factors: rank deficient input");
  IntVector factors;

  auto row_axpy = [&](std::size_t dst, std::size_t src, Integer f) {
    for (std::size_t j = 0; j < cols; ++j) m(dst, j) = checked::sub(m(dst, j), checked::mul(f, m(src, j)));
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, Integer f) {
    for (std::size_t i = 0; i < rows; ++i) m(i, dst) = checked::sub(m(i, dst), checked::mul(f, m(i, src)));
  };

  for (std::size_t t = 0; t < cols; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 && (pi == rows || std::llabs(m(i, j)) < std::llabs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) throw ValidationError("snf_invariant_factors: rank deficient input");
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        row_axpy(i, t, floor_div(m(i, t), m(t, t)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        col_axpy(j, t, floor_div(m(t, j), m(t, t)));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t c = 0; c < cols; ++c) m(t, c) = checked::add(m(t, c), m(i, c));
            divides = false;
            break;
          }
      if (divides) break;
    }
    factors.push_back(std::llabs(m(t, t)));
  }
  return factors;
}

}  // namespace ptoric
