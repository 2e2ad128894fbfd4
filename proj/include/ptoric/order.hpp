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

// Total orders on Z^N compatible with addition (a < b implies a + c < b + c).

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ptoric/errors.hpp"
#include "ptoric/intlat.hpp"

namespace ptoric {

class MonomialOrder {
 public:
  enum class Kind { lex, graded_lex, weighted_lex, permuted_lex };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}, {}); }
  static MonomialOrder graded_lex() { return MonomialOrder(Kind::graded_lex, {}, {}); }
  /// Compares <w, a> first, ties broken lexicographically.
  static MonomialOrder weighted_lex(IntVector weights) {
    return MonomialOrder(Kind::weighted_lex, std::move(weights), {});
  }
  /// Lexicographic on the coordinates read in the order perm[0], perm[1], ...
  static MonomialOrder permuted_lex(std::vector<std::size_t> perm) {
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw ValidationError("permuted_lex needs a permutation of 0..N-1");
    return MonomialOrder(Kind::permuted_lex, {}, std::move(perm));
  }

  /// Parses "lex", "grlex", "wlex:W0,W1,..." or "permlex:P0,P1,...".
  static MonomialOrder parse(const std::string& text) {
    if (text == "lex") return lex();
    if (text == "grlex") return graded_lex();
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ValidationError("unknown order '" + text + "'");
    const std::string head = text.substr(0, colon);
    std::vector<Integer> values;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ValidationError("bad number '" + item + "' in order '" + text + "'");
      }
    }
    if (values.empty()) throw ValidationError("order '" + text + "' has no parameters");
    if (head == "wlex") return weighted_lex(values);
    if (head == "permlex") {
      std::vector<std::size_t> perm;
      for (Integer v : values) {
        if (v < 0) throw ValidationError("negative index in order '" + text + "'");
        perm.push_back(static_cast<std::size_t>(v));
      }
      return permuted_lex(std::move(perm));
    }
    throw ValidationError("unknown order '" + text + "'");
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

  [[nodiscard]] std::string name() const {
    auto join = [](const auto& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::graded_lex: return "grlex";
      case Kind::weighted_lex: return "wlex:" + join(weights_);
      case Kind::permuted_lex: return "permlex:" + join(perm_);
    }
    return "?";
  }

  /// Strict comparison a < b.
  [[nodiscard]] bool less(const IntVector& a, const IntVector& b) const {
    check_dim(a.size());
    switch (kind_) {
      case Kind::lex: return a < b;
      case Kind::graded_lex: {
        const Integer sa = std::accumulate(a.begin(), a.end(), Integer{0});
        const Integer sb = std::accumulate(b.begin(), b.end(), Integer{0});
        return sa != sb ? sa < sb : a < b;
      }
      case Kind::weighted_lex: {
        Integer sa = 0, sb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          sa = checked::add(sa, checked::mul(weights_[i], a[i]));
          sb = checked::add(sb, checked::mul(weights_[i], b[i]));
        }
        return sa != sb ? sa < sb : a < b;
      }
      case Kind::permuted_lex:
        for (auto i : perm_)
          if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    return false;
  }

  bool operator()(const IntVector& a, const IntVector& b) const { return less(a, b); }
  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, IntVector w, std::vector<std::size_t> perm)
      : kind_(k), weights_(std::move(w)), perm_(std::move(perm)) {}

  void check_dim(std::size_t n) const {
    if (kind_ == Kind::weighted_lex && weights_.size() != n)
      throw ValidationError("order " + name() + " does not match dimension " + std::to_string(n));
    if (kind_ == Kind::permuted_lex && perm_.size() != n)
      throw ValidationError("order " + name() + " does not match dimension " + std::to_string(n));
  }

  Kind kind_;
  IntVector weights_;
  std::vector<std::size_t> perm_;
};

/// lex, grlex and, for N >= 2, lex on the reversed coordinates.
inline std::vector<MonomialOrder> stock_orders(std::size_t n) {
  std::vector<MonomialOrder> out{MonomialOrder::lex(), MonomialOrder::graded_lex()};
  if (n >= 2) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.rbegin(), perm.rend(), 0);
    out.push_back(MonomialOrder::permuted_lex(perm));
  }
  return out;
}

}  // namespace ptoric
