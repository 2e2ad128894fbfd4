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

// Variety-level data derived from a polytope: the simplicity and
// characteristic conditions, rational point count, flag covers with their
// straightening maps, and the Picard group.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ptoric/errors.hpp"
#include "ptoric/gf.hpp"
#include "ptoric/intlat.hpp"
#include "ptoric/polytope.hpp"

namespace ptoric {

struct HypothesisReport {
  bool simple = false;
  std::uint32_t characteristic = 0;
  /// |det A(v)| per vertex, canonical vertex order; 0 where v is on more than N facets.
  std::vector<Integer> vertex_determinants;
  /// Vertices whose determinant is divisible by the characteristic.
  std::vector<std::size_t> offending_vertices;
  bool h2_ok = false;

  [[nodiscard]] bool ok() const noexcept { return simple && h2_ok; }
};

/// A(v): rows are the normals of the facets through vertex v, ascending facet order.
inline IntMatrix vertex_normal_matrix(const LatticePolytope& p, std::size_t v) {
  IntMatrix a(0, 0);
  for (auto f : p.vertex_facets(v)) a.append_row(p.facets()[f].normal);
  return a;
}

inline HypothesisReport check_hypotheses(const LatticePolytope& p, std::uint32_t q) {
  HypothesisReport r;
  r.characteristic = Field(q).p();
  r.simple = is_simple(p);
  r.h2_ok = r.simple;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    if (p.vertex_facets(v).size() != p.dim()) {
      r.vertex_determinants.push_back(0);
      continue;
    }
    const Integer d = std::llabs(determinant(vertex_normal_matrix(p, v)));
    r.vertex_determinants.push_back(d);
    if (d % r.characteristic == 0) {
      r.offending_vertices.push_back(v);
      r.h2_ok = false;
    }
  }
  return r;
}

inline void require_hypotheses(const LatticePolytope& p, std::uint32_t q) {
  const auto r = check_hypotheses(p, q);
  if (!r.simple) throw HypothesisError("polytope is not simple");
  if (!r.h2_ok) {
    const auto v = r.offending_vertices.front();
    throw HypothesisError("|det A(v)| = " + std::to_string(r.vertex_determinants[v]) + " at vertex " +
                          to_string(p.vertices()[v]) + " is divisible by the characteristic " +
                          std::to_string(r.characteristic));
  }
}

/// Number of F_q-rational points: sum over k of #faces(k) * (q-1)^k.
inline std::uint64_t count_rational_points(const FaceLattice& lattice, std::uint32_t q) {
  std::uint64_t n = 0;
  const auto fv = lattice.f_vector();
  for (std::size_t k = 0; k < fv.size(); ++k) {
    std::uint64_t term = fv[k];
    for (std::size_t i = 0; i < k; ++i)
      if (__builtin_mul_overflow(term, std::uint64_t{q - 1}, &term))
        throw OverflowError("rational point count overflows 64 bits");
    if (__builtin_add_overflow(n, term, &n)) throw OverflowError("rational point count overflows 64 bits");
  }
  return n;
}

inline std::uint64_t count_rational_points(const LatticePolytope& p, std::uint32_t q) {
  return count_rational_points(face_lattice(p), q);
}

/// A complete flag Q_0 < Q_1 < ... < Q_{N-1} < P with its straightening map.
///
/// `normals` has the normals of the N facets through Q_0 as rows, ordered so
/// that Q_j is the intersection of the first N-j of them. With
/// normals * transform = hermite (lower HNF) and T' the transform with its
/// columns reversed, the map m -> T'^{-1} (m - Q_0) sends the affine span of
/// Q_j onto Span(e_1, ..., e_j).
struct Flag {
  std::vector<std::size_t> chain;        // face indices, chain[j] has dimension j
  std::vector<std::size_t> facet_order;  // F_1, ..., F_N
  IntMatrix normals;
  IntMatrix hermite;
  IntMatrix transform;
  IntMatrix straightening;  // T'^{-1}
  Point base;

  [[nodiscard]] IntVector straighten(const Point& m) const { return mat_vec(straightening, m - base); }
  [[nodiscard]] bool contains_face(std::size_t face) const {
    return std::find(chain.begin(), chain.end(), face) != chain.end();
  }
};

/// Builds the flag for a chain of face indices (dims 0..N) of a simple polytope.
inline Flag make_flag(const LatticePolytope& p, const FaceLattice& lattice, std::vector<std::size_t> chain) {
  const std::size_t n = p.dim();
  if (chain.size() != n + 1) throw ValidationError("flag chain must have N+1 faces");
  for (std::size_t j = 0; j <= n; ++j) {
    const Face& f = lattice[chain[j]];
    if (f.dim != j) throw ValidationError("flag chain has a face of the wrong dimension");
    if (f.facets.size() != n - j) throw HypothesisError("polytope is not simple");
    if (j > 0 && !f.contains_face(lattice[chain[j - 1]])) throw ValidationError("flag chain is not nested");
  }
  Flag flag;
  flag.chain = std::move(chain);
  // F_l is the facet containing Q_{N-l} but not Q_{N-l+1}
  for (std::size_t l = 1; l <= n; ++l) {
    const auto& lower = lattice[flag.chain[n - l]].facets;
    const auto& upper = lattice[flag.chain[n - l + 1]].facets;
    for (auto f : lower)
      if (std::find(upper.begin(), upper.end(), f) == upper.end()) {
        flag.facet_order.push_back(f);
        break;
      }
  }
  flag.normals = IntMatrix(0, 0);
  for (auto f : flag.facet_order) flag.normals.append_row(p.facets()[f].normal);
  auto hnf = hnf_lower(flag.normals);
  flag.hermite = std::move(hnf.hermite);
  flag.transform = std::move(hnf.transform);
  IntMatrix reversed = flag.transform;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) reversed(r, c) = flag.transform(r, n - 1 - c);
  flag.straightening = inverse_unimodular(reversed);
  flag.base = p.vertices()[lattice[flag.chain[0]].base_vertex()];
  return flag;
}

enum class FlagCoverOrder { canonical, reversed };

/// A set of flags such that every face lies in one of them. `owner[face]`
/// is the first flag containing that face.
struct FlagCover {
  std::vector<Flag> flags;
  std::vector<std::size_t> owner;
};

/// Deterministic flag cover. Starting from one partial flag per vertex, each
/// dimension level is extended by a maximum matching between partial flags
/// and the faces of that dimension (free faces are taken greedily first,
/// then augmenting paths); faces left uncovered get a new flag of their own.
/// For polygons this yields exactly one flag per vertex.
inline FlagCover build_flags(const LatticePolytope& p, const FaceLattice& lattice,
                             FlagCoverOrder order = FlagCoverOrder::canonical) {
  if (!is_simple(p)) throw HypothesisError("polytope is not simple");
  const std::size_t n = p.dim();
  auto ordered = [order](std::vector<std::size_t> v) {
    if (order == FlagCoverOrder::reversed) std::reverse(v.begin(), v.end());
    return v;
  };

  std::vector<std::vector<std::size_t>> chains;
  for (auto v : ordered(lattice.of_dim(0))) chains.push_back({v});

  for (std::size_t j = 1; j < n; ++j) {
    const auto level = ordered(lattice.of_dim(j));
    std::vector<std::vector<std::size_t>> cand(chains.size());
    for (std::size_t c = 0; c < chains.size(); ++c)
      for (auto f : level)
        if (lattice[f].contains_face(lattice[chains[c].back()])) cand[c].push_back(f);

    std::vector<long> claimed(lattice.size(), -1);
    std::vector<long> assigned(chains.size(), -1);
    std::vector<char> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t c) -> bool {
      for (auto f : cand[c])
        if (claimed[f] < 0) {
          claimed[f] = static_cast<long>(c);
          assigned[c] = static_cast<long>(f);
          return true;
        }
      for (auto f : cand[c]) {
        if (visited[f]) continue;
        visited[f] = 1;
        const auto other = static_cast<std::size_t>(claimed[f]);
        if (augment(other)) {
          claimed[f] = static_cast<long>(c);
          assigned[c] = static_cast<long>(f);
          return true;
        }
      }
      return false;
    };
    for (std::size_t c = 0; c < chains.size(); ++c) {
      visited.assign(lattice.size(), 0);
      augment(c);
    }
    for (std::size_t c = 0; c < chains.size(); ++c)
      chains[c].push_back(assigned[c] >= 0 ? static_cast<std::size_t>(assigned[c]) : cand[c].front());

    for (auto f : level) {
      if (claimed[f] >= 0) continue;
      std::vector<std::size_t> chain{f};
      for (std::size_t i = j; i-- > 0;)
        for (auto g : ordered(lattice.of_dim(i)))
          if (lattice[chain.back()].contains_face(lattice[g])) {
            chain.push_back(g);
            break;
          }
      std::reverse(chain.begin(), chain.end());
      chains.push_back(std::move(chain));
    }
  }

  FlagCover cover;
  for (auto& chain : chains) {
    chain.push_back(lattice.top());
    cover.flags.push_back(make_flag(p, lattice, chain));
  }
  cover.owner.assign(lattice.size(), 0);
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    std::size_t i = 0;
    while (i < cover.flags.size() && !cover.flags[i].contains_face(f)) ++i;
    if (i == cover.flags.size()) throw Error("flag cover misses a face");  // unreachable for valid input
    cover.owner[f] = i;
  }
  return cover;
}

inline FlagCover build_flags(const LatticePolytope& p, FlagCoverOrder order = FlagCoverOrder::canonical) {
  return build_flags(p, face_lattice(p), order);
}

/// Straightened coordinates of m; the trailing N-j coordinates vanish when m
/// lies on the flag's j-face. Throws ValidationError if m is not in P.
inline IntVector straighten(const LatticePolytope& p, const Flag& flag, const Point& m) {
  if (m.size() != p.dim() || !p.contains(m))
    throw ValidationError("point " + to_string(m) + " is not in the polytope");
  return flag.straighten(m);
}

struct PicardGroup {
  std::size_t free_rank = 0;
  IntVector torsion;  // invariant factors > 1
};

inline IntMatrix facet_normal_matrix(const LatticePolytope& p) {
  IntMatrix a(0, 0);
  for (const auto& f : p.facets()) a.append_row(f.normal);
  return a;
}

inline PicardGroup picard_invariants(const LatticePolytope& p) {
  PicardGroup g;
  g.free_rank = p.facets().size() - p.dim();
  for (Integer d : snf_invariant_factors(facet_normal_matrix(p)))
    if (d != 1) g.torsion.push_back(d);
  return g;
}

}  // namespace ptoric
