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

// Finite fields GF(p^k), q <= 2^16.
//
// Element wire encoding: the polynomial sum c_i x^i (reduced modulo the field
// modulus) is stored as the integer sum c_i p^i. The modulus is the monic
// irreducible of degree k with the smallest such code, so encodings are
// reproducible across runs and machines.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ptoric/errors.hpp"
#include "ptoric/matrix.hpp"

namespace ptoric {

struct Element {
  std::uint32_t code = 0;

  auto operator<=>(const Element&) const = default;
  [[nodiscard]] bool is_zero() const noexcept { return code == 0; }
};

inline std::ostream& operator<<(std::ostream& os, Element e) { return os << e.code; }

using FqMatrix = Matrix<Element>;

class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws ValidationError unless q = p^k is a prime power with q <= 2^16.
  explicit Field(std::uint32_t q);

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t k() const noexcept { return k_; }
  [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
  /// Coefficients c_0..c_k of the monic modulus (c_k = 1).
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  [[nodiscard]] Element generator() const noexcept { return Element{generator_}; }

  [[nodiscard]] Element zero() const noexcept { return Element{0}; }
  [[nodiscard]] Element one() const noexcept { return Element{1}; }

  [[nodiscard]] bool valid(Element a) const noexcept { return a.code < q_; }

  [[nodiscard]] Element add(Element a, Element b) const {
    if (p_ == 2) return Element{a.code ^ b.code};
    if (!add_table_.empty()) return Element{add_table_[a.code * q_ + b.code]};
    return Element{digitwise(a.code, b.code, false)};
  }
  [[nodiscard]] Element sub(Element a, Element b) const {
    if (p_ == 2) return Element{a.code ^ b.code};
    return Element{digitwise(a.code, b.code, true)};
  }
  [[nodiscard]] Element neg(Element a) const { return sub(zero(), a); }

  [[nodiscard]] Element mul(Element a, Element b) const {
    if (a.code == 0 || b.code == 0) return zero();
    std::uint32_t s = log_[a.code] + log_[b.code];
    if (s >= q_ - 1) s -= q_ - 1;
    return Element{exp_[s]};
  }

  [[nodiscard]] Element inv(Element a) const {
    if (a.code == 0) throw Error("inverse of zero in GF(" + std::to_string(q_) + ")");
    return Element{exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
  }

  /// a^e for any integer e; negative exponents need a != 0. 0^0 = 1.
  [[nodiscard]] Element pow(Element a, std::int64_t e) const {
    if (a.code == 0) {
      if (e < 0) throw Error("negative power of zero");
      return e == 0 ? one() : zero();
    }
    const std::int64_t order = q_ - 1;
    std::int64_t l = (static_cast<std::int64_t>(log_[a.code]) * (e % order)) % order;
    if (l < 0) l += order;
    return Element{exp_[static_cast<std::size_t>(l)]};
  }

  /// Discrete log base the stored generator; a must be nonzero.
  [[nodiscard]] std::uint32_t log(Element a) const {
    if (a.code == 0) throw Error("log of zero");
    return log_[a.code];
  }
  [[nodiscard]] Element exp(std::uint32_t i) const { return Element{exp_[i % (q_ - 1)]}; }

  /// g^0, g^1, ..., g^(q-2) for the stored generator g.
  [[nodiscard]] std::vector<Element> units() const {
    std::vector<Element> out;
    out.reserve(q_ - 1);
    for (std::uint32_t i = 0; i + 1 < q_; ++i) out.push_back(Element{exp_[i]});
    return out;
  }

  bool operator==(const Field& o) const { return q_ == o.q_; }

 private:
  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const {
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      const std::uint32_t da = a % p_, db = b % p_;
      a /= p_;
      b /= p_;
      out += ((subtract ? da + p_ - db : da + db) % p_) * place;
      place *= p_;
    }
    return out;
  }

  std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> exp_, log_;
  std::vector<std::uint32_t> add_table_;
};

inline Field make_field(std::uint32_t q) { return Field(q); }

namespace detail {

using Poly = std::vector<std::uint32_t>;  // coefficients c_0..c_d over F_p

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of f modulo the monic polynomial g
inline Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
    trim(f);
  }
  return f;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    // every monic g of degree d
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      std::uint32_t x = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = x % p;
        x /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

inline Field::Field(std::uint32_t q) {
  if (q < 2) throw ValidationError("field order must be at least 2");
  if (q > kMaxOrder) throw ValidationError("field order " + std::to_string(q) + " exceeds 2^16");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw ValidationError(std::to_string(q) + " is not a prime power");
  p_ = p;
  k_ = k;
  q_ = q;

  // smallest monic irreducible of degree k by code sum c_i p^i
  for (std::uint32_t c = 0; c < q; ++c) {
    detail::Poly f(k + 1, 0);
    std::uint32_t x = c;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = x % p;
      x /= p;
    }
    f[k] = 1;
    if (detail::is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  if (q == 2) {
    generator_ = 1;
    exp_[0] = 1;
  } else {
    for (std::uint32_t g = 2; g < q; ++g) {
      std::uint32_t x = 1, order = 0;
      do {
        x = poly_mul_mod(x, g);
        ++order;
      } while (x != 1 && order < q);
      if (order == q - 1) {
        generator_ = g;
        break;
      }
    }
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      exp_[i] = x;
      x = poly_mul_mod(x, generator_);
    }
  }
  for (std::uint32_t i = 0; i + 1 < q; ++i) log_[exp_[i]] = i;

  if (p != 2 && q <= 256) {
    add_table_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) add_table_[a * q + b] = digitwise(a, b, false);
  }
}

inline std::uint32_t Field::poly_mul_mod(std::uint32_t a, std::uint32_t b) const {
  detail::Poly fa(k_, 0), fb(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    fa[i] = a % p_;
    a /= p_;
    fb[i] = b % p_;
    b /= p_;
  }
  detail::Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  const detail::Poly r = detail::poly_rem(prod, modulus_, p_);
  std::uint32_t code = 0, place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (i < r.size()) code += r[i] * place;
    place *= p_;
  }
  return code;
}

}  // namespace ptoric
