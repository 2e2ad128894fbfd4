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

// Projective toric codes: generator matrix M(P), the classical toric code,
// face-by-face reduction modulo q-1 (dimension), surjective polytopes and the
// footprint lower bound on the minimum distance.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptoric/errors.hpp"
#include "ptoric/gf.hpp"
#include "ptoric/order.hpp"
#include "ptoric/polytope.hpp"
#include "ptoric/variety.hpp"

namespace ptoric {

/// Polytope plus its face lattice and lattice points in row order.
///
/// Rows are ordered by the minimal face containing the point: interior of P
/// first, then facet interiors, and so on down to the vertices; ties by face
/// index, then lexicographically.
struct PolytopeGeometry {
  LatticePolytope polytope;
  FaceLattice faces;
  std::vector<Point> points;
  std::vector<std::size_t> point_face;  // face whose relative interior holds the point

  explicit PolytopeGeometry(LatticePolytope p) : polytope(std::move(p)), faces(face_lattice(polytope)) {
    struct Entry {
      std::size_t dim, face;
      Point m;
    };
    std::vector<Entry> entries;
    for (auto& m : lattice_points(polytope)) {
      auto f = faces.find_by_facets(polytope.tight_facets(m));
      if (!f) throw Error("lattice point " + to_string(m) + " has no carrier face");
      entries.push_back({faces[*f].dim, *f, std::move(m)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      if (a.dim != b.dim) return a.dim > b.dim;
      if (a.face != b.face) return a.face < b.face;
      return a.m < b.m;
    });
    for (auto& e : entries) {
      points.push_back(std::move(e.m));
      point_face.push_back(e.face);
    }
  }

  [[nodiscard]] bool on_face(std::size_t row, std::size_t face) const {
    return faces[face].contains_face(faces[point_face[row]]);
  }
  [[nodiscard]] std::optional<std::size_t> row_of(const Point& m) const {
    auto it = std::find(points.begin(), points.end(), m);
    if (it == points.end()) return std::nullopt;
    return static_cast<std::size_t>(it - points.begin());
  }
};

/// Column label: a face and a tuple of unit exponents (i_1, ..., i_k) naming
/// the torus point (g^{i_1}, ..., g^{i_k}).
struct EvaluationColumn {
  std::size_t face = 0;
  std::vector<std::uint32_t> tuple;
  bool operator==(const EvaluationColumn&) const = default;
};

struct EvaluationMatrix {
  std::uint32_t q = 0;
  FqMatrix entries;
  std::vector<Point> row_points;
  std::vector<std::size_t> row_faces;
  std::vector<EvaluationColumn> columns;
  std::vector<std::size_t> column_face_dims;

  [[nodiscard]] std::size_t rows() const noexcept { return entries.rows(); }
  [[nodiscard]] std::size_t cols() const noexcept { return entries.cols(); }
};

namespace detail {

// Mixed-radix enumeration of [0, q-2]^k, first coordinate slowest.
inline std::vector<std::vector<std::uint32_t>> unit_tuples(std::size_t k, std::uint32_t q) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(k, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0) {
      if (cur[i - 1] + 2 < q) {
        ++cur[i - 1];
        break;
      }
      cur[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

// prod_j (g^{t_j})^{e_j}
inline Element monomial_at(const Field& field, std::span<const Integer> exps,
                           const std::vector<std::uint32_t>& tuple) {
  const Integer order = field.q() - 1;
  Integer s = 0;
  for (std::size_t j = 0; j < tuple.size(); ++j)
    s = mod_floor(s + mod_floor(exps[j], order) * static_cast<Integer>(tuple[j]), order);
  return field.exp(static_cast<std::uint32_t>(s));
}

}  // namespace detail

/// Block M(P, Q): one row per lattice point, one column per point of the
/// torus of Q. Row m is zero unless m lies on Q; otherwise it evaluates the
/// monomial with the first k straightened coordinates of m as exponents.
inline FqMatrix block_matrix(const PolytopeGeometry& g, std::size_t face, const Flag& flag, const Field& field) {
  const Face& q = g.faces[face];
  const std::size_t k = q.dim;
  if (flag.chain.size() <= k || flag.chain[k] != face)
    throw ValidationError("flag does not contain the face at its dimension");
  const auto tuples = detail::unit_tuples(k, field.q());
  FqMatrix block(g.points.size(), tuples.size(), field.zero());
  for (std::size_t r = 0; r < g.points.size(); ++r) {
    if (!g.on_face(r, face)) continue;
    const IntVector e = flag.straighten(g.points[r]);
    for (std::size_t j = k; j < e.size(); ++j)
      if (e[j] != 0) throw Error("straightening left a nonzero trailing coordinate");
    for (std::size_t c = 0; c < tuples.size(); ++c)
      block(r, c) = detail::monomial_at(field, std::span<const Integer>(e.data(), k), tuples[c]);
  }
  return block;
}

/// M(P) for a given flag cover: blocks side by side in decreasing face dimension.
inline EvaluationMatrix generator_matrix(const PolytopeGeometry& g, const FlagCover& cover, const Field& field) {
  EvaluationMatrix m;
  m.q = field.q();
  m.row_points = g.points;
  m.row_faces = g.point_face;
  std::vector<FqMatrix> blocks;
  std::size_t width = 0;
  for (std::size_t k = g.polytope.dim() + 1; k-- > 0;)
    for (auto face : g.faces.of_dim(k)) {
      blocks.push_back(block_matrix(g, face, cover.flags[cover.owner[face]], field));
      for (const auto& t : detail::unit_tuples(k, field.q())) {
        m.columns.push_back({face, t});
        m.column_face_dims.push_back(k);
      }
      width += blocks.back().cols();
    }
  m.entries = FqMatrix(g.points.size(), width, field.zero());
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m.entries(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return m;
}

inline EvaluationMatrix generator_matrix(const LatticePolytope& p, const Field& field,
                                         FlagCoverOrder order = FlagCoverOrder::canonical) {
  require_hypotheses(p, field.q());
  PolytopeGeometry g(p);
  return generator_matrix(g, build_flags(g.polytope, g.faces, order), field);
}

/// Classical toric code: chi^m evaluated on the whole torus (F_q^*)^N,
/// rows in the same order as `generator_matrix`.
inline EvaluationMatrix toric_generator_matrix(const PolytopeGeometry& g, const Field& field) {
  EvaluationMatrix m;
  m.q = field.q();
  m.row_points = g.points;
  m.row_faces = g.point_face;
  const std::size_t n = g.polytope.dim();
  const auto tuples = detail::unit_tuples(n, field.q());
  m.entries = FqMatrix(g.points.size(), tuples.size(), field.zero());
  for (const auto& t : tuples) {
    m.columns.push_back({g.faces.top(), t});
    m.column_face_dims.push_back(n);
  }
  for (std::size_t r = 0; r < g.points.size(); ++r)
    for (std::size_t c = 0; c < tuples.size(); ++c) m.entries(r, c) = detail::monomial_at(field, g.points[r], tuples[c]);
  return m;
}

inline EvaluationMatrix toric_generator_matrix(const LatticePolytope& p, const Field& field) {
  return toric_generator_matrix(PolytopeGeometry(p), field);
}

/// Classes of the face-by-face relation: same carrier face interior and
/// difference in (q-1) Z^N. Each class lists row indices of `g.points`.
inline std::vector<std::vector<std::size_t>> projective_classes(const PolytopeGeometry& g, std::uint32_t q) {
  const Integer modulus = q - 1;
  std::map<std::pair<std::size_t, IntVector>, std::size_t> index;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t r = 0; r < g.points.size(); ++r) {
    IntVector residue = g.points[r];
    for (auto& x : residue) x = mod_floor(x, modulus);
    auto [it, fresh] = index.emplace(std::make_pair(g.point_face[r], std::move(residue)), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(r);
  }
  return classes;
}

/// Red_<(P): the order-minimal point of each class.
struct ReductionSet {
  std::vector<Point> points;                     // all lattice points, row order
  std::vector<std::size_t> representative_of;   // row index -> row index of its representative
  std::vector<Point> representatives;            // one per class, in class order

  [[nodiscard]] std::size_t size() const noexcept { return representatives.size(); }
  [[nodiscard]] bool is_representative(const Point& m) const {
    return std::find(representatives.begin(), representatives.end(), m) != representatives.end();
  }
};

inline ReductionSet select_representatives(const PolytopeGeometry& g,
                                           const std::vector<std::vector<std::size_t>>& classes,
                                           const MonomialOrder& order) {
  ReductionSet red;
  red.points = g.points;
  red.representative_of.assign(g.points.size(), 0);
  for (const auto& cls : classes) {
    std::size_t best = cls.front();
    for (auto r : cls)
      if (order.less(g.points[r], g.points[best])) best = r;
    for (auto r : cls) red.representative_of[r] = best;
    red.representatives.push_back(g.points[best]);
  }
  return red;
}

inline ReductionSet projective_reduction(const PolytopeGeometry& g, const Field& field, const MonomialOrder& order) {
  return select_representatives(g, projective_classes(g, field.q()), order);
}

inline ReductionSet projective_reduction(const LatticePolytope& p, const Field& field,
                                         const MonomialOrder& order = MonomialOrder::lex()) {
  return projective_reduction(PolytopeGeometry(p), field, order);
}

/// Plain reduction modulo q-1, ignoring faces. Representatives come out in
/// order of first appearance of their class in `points`.
inline std::vector<Point> toric_reduction(const std::vector<Point>& points, const Field& field,
                                          const MonomialOrder& order = MonomialOrder::lex()) {
  const Integer modulus = field.q() - 1;
  std::map<IntVector, std::size_t> index;
  std::vector<Point> reps;
  for (const auto& m : points) {
    IntVector residue = m;
    for (auto& x : residue) x = mod_floor(x, modulus);
    auto [it, fresh] = index.emplace(std::move(residue), reps.size());
    if (fresh)
      reps.push_back(m);
    else if (order.less(m, reps[it->second]))
      reps[it->second] = m;
  }
  return reps;
}

/// Dimension of the projective toric code: number of face-by-face classes.
inline std::size_t dimension(const LatticePolytope& p, const Field& field) {
  require_hypotheses(p, field.q());
  return projective_classes(PolytopeGeometry(p), field.q()).size();
}

/// Pp is P-surjective: same normal fan, contains P, and its code fills F_q^n.
inline bool is_surjective(const LatticePolytope& pp, const LatticePolytope& p, const Field& field) {
  if (!same_normal_fan(pp, p)) return false;
  for (const auto& f : p.facets()) {
    auto g = pp.facet_with_normal(f.normal);
    if (!g || pp.facets()[*g].offset < f.offset) return false;
  }
  PolytopeGeometry geo(pp);
  return projective_classes(geo, field.q()).size() == count_rational_points(geo.faces, field.q());
}

/// Centre of the dilates tried for P-surjectivity: the origin when P holds
/// it, otherwise the first vertex. Either way lambda*(P - c) + c contains P.
inline Point dilation_centre(const LatticePolytope& p) {
  const Point origin(p.dim(), 0);
  return p.contains(origin) ? origin : p.vertices().front();
}

inline LatticePolytope surjective_candidate(const LatticePolytope& p, Integer lambda) {
  const Point c = dilation_centre(p);
  return translate(dilate(translate(p, Point(p.dim(), 0) - c), lambda), c);
}

/// Smallest lambda in [1, lambda_max] whose dilate about `dilation_centre`
/// is P-surjective.
inline std::optional<Integer> find_surjective_dilate(const LatticePolytope& p, const Field& field,
                                                     Integer lambda_max) {
  for (Integer lambda = 1; lambda <= lambda_max; ++lambda)
    if (is_surjective(surjective_candidate(p, lambda), p, field)) return lambda;
  return std::nullopt;
}

struct DistanceBound {
  std::uint64_t bound = 0;
  std::vector<Point> minimizers;  // points of Red_<(P) attaining the minimum
  std::string order;
};

namespace detail {

inline DistanceBound footprint_bound(const ReductionSet& red_p, const ReductionSet& red_surj,
                                     const DivisorRegion& region, const MonomialOrder& order) {
  DistanceBound out;
  out.order = order.name();
  bool first = true;
  for (const auto& m : red_p.representatives) {
    std::uint64_t count = 0;
    for (const auto& ms : red_surj.representatives)
      if (region.contains(ms - m)) ++count;
    if (first || count < out.bound) {
      out.bound = count;
      out.minimizers.clear();
      first = false;
    }
    if (count == out.bound) out.minimizers.push_back(m);
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

inline void require_surjective(const LatticePolytope& p, const LatticePolytope& surj, const Field& field) {
  require_hypotheses(p, field.q());
  if (!is_surjective(surj, p, field)) throw ValidationError("the given polytope is not P-surjective");
}

}  // namespace detail

/// Footprint lower bound: min over m in Red_<(P) of the number of
/// m' in Red_<(Psurj) with m' - m in the offset difference Psurj - P.
inline DistanceBound distance_lower_bound(const LatticePolytope& p, const LatticePolytope& surj, const Field& field,
                                          const MonomialOrder& order = MonomialOrder::lex()) {
  detail::require_surjective(p, surj, field);
  return detail::footprint_bound(projective_reduction(p, field, order), projective_reduction(surj, field, order),
                                 offset_difference(surj, p), order);
}

struct OrderSweep {
  DistanceBound best;
  std::vector<DistanceBound> per_order;
};

/// Classes are computed once; only representative selection changes per order.
/// The best bound is the largest; ties go to the earliest order in the list.
inline OrderSweep best_bound_over_orders(const LatticePolytope& p, const LatticePolytope& surj, const Field& field,
                                         const std::vector<MonomialOrder>& orders) {
  if (orders.empty()) throw ValidationError("no orders given");
  detail::require_surjective(p, surj, field);
  const PolytopeGeometry gp(p), gs(surj);
  const auto cp = projective_classes(gp, field.q());
  const auto cs = projective_classes(gs, field.q());
  const auto region = offset_difference(surj, p);
  OrderSweep sweep;
  for (const auto& order : orders) {
    sweep.per_order.push_back(detail::footprint_bound(select_representatives(gp, cp, order),
                                                      select_representatives(gs, cs, order), region, order));
    if (sweep.per_order.size() == 1 || sweep.per_order.back().bound > sweep.best.bound)
      sweep.best = sweep.per_order.back();
  }
  return sweep;
}

/// Column indices of the block for the whole torus (the top face).
inline std::vector<std::size_t> torus_columns(const EvaluationMatrix& m) {
  std::vector<std::size_t> out;
  const std::size_t top = m.column_face_dims.empty()
                              ? 0
                              : *std::max_element(m.column_face_dims.begin(), m.column_face_dims.end());
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.column_face_dims[c] == top) out.push_back(c);
  return out;
}

inline std::vector<std::size_t> face_columns(const EvaluationMatrix& m, std::size_t face) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.columns[c].face == face) out.push_back(c);
  return out;
}

namespace detail {

inline std::vector<std::size_t> normalize_selection(std::vector<std::size_t> idx, std::size_t limit,
                                                    const char* what) {
  if (idx.empty()) throw ValidationError(std::string("empty ") + what + " selection");
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.back() >= limit) throw ValidationError(std::string(what) + " index out of range");
  return idx;
}

}  // namespace detail

/// Submatrix on the given rows and columns, both kept in their original order.
inline EvaluationMatrix subcode_matrix(const EvaluationMatrix& m, std::vector<std::size_t> rows,
                                       std::vector<std::size_t> cols) {
  rows = detail::normalize_selection(std::move(rows), m.rows(), "row");
  cols = detail::normalize_selection(std::move(cols), m.cols(), "column");
  EvaluationMatrix s;
  s.q = m.q;
  s.entries = FqMatrix(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s.row_points.push_back(m.row_points[rows[i]]);
    s.row_faces.push_back(m.row_faces[rows[i]]);
    for (std::size_t j = 0; j < cols.size(); ++j) s.entries(i, j) = m.entries(rows[i], cols[j]);
  }
  for (auto c : cols) {
    s.columns.push_back(m.columns[c]);
    s.column_face_dims.push_back(m.column_face_dims[c]);
  }
  return s;
}

}  // namespace ptoric
