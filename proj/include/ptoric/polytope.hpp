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

// Full-dimensional lattice polytopes given by vertices and facet inequalities
// <m, u_F> >= -a_F with primitive inner normals u_F.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ptoric/errors.hpp"
#include "ptoric/intlat.hpp"

namespace ptoric {

using Point = IntVector;

inline std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

inline Point operator-(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::sub(a[i], b[i]);
  return r;
}

inline Point operator+(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::add(a[i], b[i]);
  return r;
}

/// Half-space <m, normal> >= -offset.
struct Facet {
  IntVector normal;
  Integer offset = 0;

  auto operator<=>(const Facet&) const = default;
};

/// Affine dimension of a point set (-1 for the empty set).
inline int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  IntMatrix diffs(0, 0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Point d = pts[i] - pts[0];
    diffs.append_row(d);
  }
  return diffs.rows() == 0 ? 0 : static_cast<int>(rank(diffs));
}

class LatticePolytope {
 public:
  /// Convex hull of integer points, N in {1, 2, 3}.
  ///
  /// Facets are found by testing every affinely independent N-subset of the
  /// input; redundant points are discarded. Throws ValidationError on
  /// lower-dimensional input.
  static LatticePolytope from_vertices(std::vector<Point> points);

  /// Builds from a matching vertex/facet pair, for any dimension. The two
  /// representations are cross-validated.
  static LatticePolytope from_vrep_hrep(std::vector<Point> vertices, std::vector<Facet> facets);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<Point>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Facet>& facets() const noexcept { return facets_; }
  [[nodiscard]] const std::vector<std::size_t>& vertex_facets(std::size_t v) const {
    return vertex_facets_.at(v);
  }
  [[nodiscard]] const std::vector<std::size_t>& facet_vertices(std::size_t f) const {
    return facet_vertices_.at(f);
  }

  /// <m, u_F> + a_F; zero exactly on the facet, nonnegative on P.
  [[nodiscard]] Integer slack(const Point& m, std::size_t f) const {
    return checked::add(dot(m, facets_[f].normal), facets_[f].offset);
  }

  [[nodiscard]] bool contains(const Point& m) const {
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (slack(m, f) < 0) return false;
    return true;
  }

  /// Facets tight at m, ascending.
  [[nodiscard]] std::vector<std::size_t> tight_facets(const Point& m) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (slack(m, f) == 0) out.push_back(f);
    return out;
  }

  std::optional<std::size_t> facet_with_normal(const IntVector& u) const {
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (facets_[f].normal == u) return f;
    return std::nullopt;
  }

  bool operator==(const LatticePolytope& o) const {
    return vertices_ == o.vertices_ && facets_ == o.facets_;
  }

 private:
  LatticePolytope(std::size_t dim, std::vector<Point> vertices, std::vector<Facet> facets);

  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
};

namespace detail {

// Integer normal to the hyperplane through N affinely independent points in Z^N
// (generalized cross product of the N-1 difference vectors). Zero if dependent.
inline IntVector hyperplane_normal(const std::vector<const Point*>& pts) {
  const std::size_t n = pts.front()->size();
  IntVector normal(n, 0);
  if (n == 1) {
    normal[0] = 1;
    return normal;
  }
  IntMatrix minor(n - 1, n - 1, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t j = 0, mj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(r - 1, mj++) = checked::sub((*pts[r])[j], (*pts[0])[j]);
      }
    Integer d = determinant(minor);
    normal[c] = (c % 2 == 0) ? d : checked::neg(d);
  }
  return normal;
}

inline IntVector make_primitive(IntVector v) {
  const Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace detail

inline LatticePolytope::LatticePolytope(std::size_t dim, std::vector<Point> vertices,
                                        std::vector<Facet> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(facets_.begin(), facets_.end());
  vertex_facets_.assign(vertices_.size(), {});
  facet_vertices_.assign(facets_.size(), {});
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (slack(vertices_[v], f) == 0) {
        vertex_facets_[v].push_back(f);
        facet_vertices_[f].push_back(v);
      }
}

inline LatticePolytope LatticePolytope::from_vertices(std::vector<Point> points) {
  if (points.empty()) throw ValidationError("polytope needs at least one point");
  const std::size_t n = points.front().size();
  if (n == 0) throw ValidationError("dimension must be at least 1");
  if (n > 3)
    throw ValidationError("facet enumeration from vertices supports N <= 3; supply facets as well");
  for (const auto& p : points)
    if (p.size() != n) throw ValidationError("points of mixed dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (affine_dimension(points) != static_cast<int>(n))
    throw ValidationError("points do not span a full-dimensional polytope");

  std::set<Facet> found;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t total = points.size();
  // iterate over N-subsets in lexicographic index order
  for (;;) {
    std::vector<const Point*> subset;
    for (auto i : idx) subset.push_back(&points[i]);
    IntVector u = detail::hyperplane_normal(subset);
    if (std::any_of(u.begin(), u.end(), [](Integer x) { return x != 0; })) {
      u = detail::make_primitive(u);
      const Integer level = dot(*subset[0], u);
      bool above = true, below = true;
      for (const auto& p : points) {
        const Integer s = dot(p, u);
        if (s < level) above = false;
        if (s > level) below = false;
      }
      if (above) found.insert(Facet{u, checked::neg(level)});
      if (below) {
        for (auto& x : u) x = -x;
        found.insert(Facet{u, level});
      }
    }
    // next subset
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == total - n + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<Facet> facets(found.begin(), found.end());

  // vertices: input points whose tight normals span R^N
  std::vector<Point> vertices;
  for (const auto& p : points) {
    IntMatrix tight(0, 0);
    for (const auto& f : facets)
      if (checked::add(dot(p, f.normal), f.offset) == 0) tight.append_row(f.normal);
    if (tight.rows() >= n && rank(tight) == n) vertices.push_back(p);
  }
  return LatticePolytope(n, std::move(vertices), std::move(facets));
}

inline LatticePolytope LatticePolytope::from_vrep_hrep(std::vector<Point> vertices,
                                                       std::vector<Facet> facets) {
  if (vertices.empty() || facets.empty()) throw ValidationError("empty vertex or facet list");
  const std::size_t n = vertices.front().size();
  if (n == 0) throw ValidationError("dimension must be at least 1");
  for (const auto& v : vertices)
    if (v.size() != n) throw ValidationError("vertices of mixed dimension");
  for (const auto& f : facets) {
    if (f.normal.size() != n) throw ValidationError("facet normal has wrong dimension");
    if (content(f.normal) != 1) throw ValidationError("facet normal " + to_string(f.normal) + " is not primitive");
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw ValidationError("duplicate vertex");
  {
    auto normals = facets;
    std::sort(normals.begin(), normals.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    for (std::size_t i = 1; i < normals.size(); ++i)
      if (normals[i].normal == normals[i - 1].normal) throw ValidationError("duplicate facet normal");
  }
  if (affine_dimension(vertices) != static_cast<int>(n))
    throw ValidationError("vertices do not span a full-dimensional polytope");

  LatticePolytope p(n, std::move(vertices), std::move(facets));
  for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
    if (!p.contains(p.vertices_[v]))
      throw ValidationError("vertex " + to_string(p.vertices_[v]) + " violates a facet inequality");
    IntMatrix tight(0, 0);
    for (auto f : p.vertex_facets_[v]) tight.append_row(p.facets_[f].normal);
    if (tight.rows() < n || rank(tight) != n)
      throw ValidationError("vertex " + to_string(p.vertices_[v]) + " is not tight on N independent facets");
  }
  for (std::size_t f = 0; f < p.facets_.size(); ++f) {
    std::vector<Point> on;
    for (auto v : p.facet_vertices_[f]) on.push_back(p.vertices_[v]);
    if (on.size() < n || affine_dimension(on) != static_cast<int>(n) - 1)
      throw ValidationError("facet " + to_string(p.facets_[f].normal) + " is not tight on a codimension-1 vertex set");
  }
  return p;
}

/// A face, identified by the facets containing it and the vertices it contains.
struct Face {
  std::size_t dim = 0;
  std::vector<std::size_t> facets;    // ascending facet indices F with Q in F
  std::vector<std::size_t> vertices;  // ascending vertex indices

  [[nodiscard]] std::size_t base_vertex() const { return vertices.front(); }
  [[nodiscard]] bool contains_face(const Face& other) const {
    return std::includes(vertices.begin(), vertices.end(), other.vertices.begin(),
                         other.vertices.end());
  }
  bool operator==(const Face&) const = default;
};

/// All faces of P, sorted by (dimension, vertex index set). P itself is last.
class FaceLattice {
 public:
  explicit FaceLattice(std::vector<Face> faces) : faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
      return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    top_dim_ = faces_.empty() ? 0 : faces_.back().dim;
  }

  [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }
  [[nodiscard]] const Face& operator[](std::size_t i) const { return faces_.at(i); }
  [[nodiscard]] std::size_t size() const noexcept { return faces_.size(); }
  [[nodiscard]] std::size_t top() const noexcept { return faces_.size() - 1; }

  [[nodiscard]] std::vector<std::size_t> of_dim(std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (faces_[i].dim == k) out.push_back(i);
    return out;
  }
  [[nodiscard]] std::size_t count(std::size_t k) const { return of_dim(k).size(); }

  /// Face counts f_0, ..., f_N.
  [[nodiscard]] std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> out(top_dim_ + 1, 0);
    for (const auto& f : faces_) ++out[f.dim];
    return out;
  }

  /// Index of the face whose facet set is exactly `facets`, if any.
  [[nodiscard]] std::optional<std::size_t> find_by_facets(const std::vector<std::size_t>& facets) const {
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (faces_[i].facets == facets) return i;
    return std::nullopt;
  }

 private:
  std::vector<Face> faces_;
  std::size_t top_dim_ = 0;
};

inline FaceLattice face_lattice(const LatticePolytope& p) {
  const std::size_t nv = p.vertices().size();
  std::map<std::vector<std::size_t>, Face> seen;

  auto make_face = [&](std::vector<std::size_t> verts) {
    Face f;
    f.vertices = std::move(verts);
    std::vector<Point> pts;
    for (auto v : f.vertices) pts.push_back(p.vertices()[v]);
    f.dim = static_cast<std::size_t>(affine_dimension(pts));
    for (std::size_t g = 0; g < p.facets().size(); ++g) {
      const auto& fv = p.facet_vertices(g);
      if (std::includes(fv.begin(), fv.end(), f.vertices.begin(), f.vertices.end()))
        f.facets.push_back(g);
    }
    return f;
  };

  std::vector<std::size_t> all(nv);
  std::iota(all.begin(), all.end(), 0);
  seen.emplace(all, make_face(all));

  std::vector<std::vector<std::size_t>> queue;
  for (std::size_t g = 0; g < p.facets().size(); ++g) {
    const auto& fv = p.facet_vertices(g);
    if (seen.emplace(fv, make_face(fv)).second) queue.push_back(fv);
  }
  // every face is an intersection of facets
  while (!queue.empty()) {
    auto cur = std::move(queue.back());
    queue.pop_back();
    for (std::size_t g = 0; g < p.facets().size(); ++g) {
      const auto& fv = p.facet_vertices(g);
      std::vector<std::size_t> inter;
      std::set_intersection(cur.begin(), cur.end(), fv.begin(), fv.end(), std::back_inserter(inter));
      if (inter.empty() || inter == cur) continue;
      if (seen.count(inter)) continue;
      seen.emplace(inter, make_face(inter));
      queue.push_back(std::move(inter));
    }
  }
  std::vector<Face> faces;
  for (auto& [k, f] : seen) faces.push_back(std::move(f));
  return FaceLattice(std::move(faces));
}

/// Lattice points of P in lexicographic order (bounding-box scan).
inline std::vector<Point> lattice_points(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  Point lo = p.vertices().front(), hi = lo;
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<Point> out;
  Point cur = lo;
  for (;;) {
    if (p.contains(cur)) out.push_back(cur);
    std::size_t i = n;
    while (i > 0) {
      if (cur[i - 1] < hi[i - 1]) {
        ++cur[i - 1];
        break;
      }
      cur[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

/// Lattice points in the relative interior of face q: tight on exactly the
/// facets containing q.
inline std::vector<Point> interior_lattice_points(const LatticePolytope& p, const Face& q) {
  std::vector<Point> out;
  for (auto& m : lattice_points(p))
    if (p.tight_facets(m) == q.facets) out.push_back(std::move(m));
  return out;
}

inline LatticePolytope dilate(const LatticePolytope& p, Integer lambda) {
  if (lambda < 1) throw ValidationError("dilation factor must be a positive integer");
  std::vector<Point> verts = p.vertices();
  for (auto& v : verts)
    for (auto& x : v) x = checked::mul(x, lambda);
  std::vector<Facet> facets = p.facets();
  for (auto& f : facets) f.offset = checked::mul(f.offset, lambda);
  return LatticePolytope::from_vrep_hrep(std::move(verts), std::move(facets));
}

/// Image of P under m -> U m + shift for unimodular U.
inline LatticePolytope affine_image(const LatticePolytope& p, const IntMatrix& u, const Point& shift) {
  const std::size_t n = p.dim();
  if (u.rows() != n || u.cols() != n || shift.size() != n)
    throw ValidationError("affine map has wrong dimension");
  const IntMatrix dual = inverse_unimodular(u).transposed();  // U^{-T}
  std::vector<Point> verts;
  for (const auto& v : p.vertices()) verts.push_back(mat_vec(u, v) + shift);
  std::vector<Facet> facets;
  for (const auto& f : p.facets()) {
    IntVector w = mat_vec(dual, f.normal);
    facets.push_back({w, checked::sub(f.offset, dot(shift, w))});
  }
  return LatticePolytope::from_vrep_hrep(std::move(verts), std::move(facets));
}

inline LatticePolytope translate(const LatticePolytope& p, const Point& shift) {
  return affine_image(p, identity_matrix(p.dim()), shift);
}

/// Region {m : <m, u_F> >= -(a2_F - a1_F)} for two polytopes sharing their
/// normals. Only a membership test is exposed; the region may be empty.
class DivisorRegion {
 public:
  explicit DivisorRegion(std::vector<Facet> halfspaces) : halfspaces_(std::move(halfspaces)) {}

  [[nodiscard]] bool contains(const Point& m) const {
    for (const auto& h : halfspaces_)
      if (checked::add(dot(m, h.normal), h.offset) < 0) return false;
    return true;
  }
  [[nodiscard]] const std::vector<Facet>& halfspaces() const noexcept { return halfspaces_; }

 private:
  std::vector<Facet> halfspaces_;
};

inline DivisorRegion offset_difference(const LatticePolytope& p2, const LatticePolytope& p1) {
  if (p1.facets().size() != p2.facets().size()) throw ValidationError("polytopes have different normal sets");
  std::vector<Facet> hs;
  for (const auto& f2 : p2.facets()) {
    auto f1 = p1.facet_with_normal(f2.normal);
    if (!f1) throw ValidationError("polytopes have different normal sets");
    hs.push_back({f2.normal, checked::sub(f2.offset, p1.facets()[*f1].offset)});
  }
  return DivisorRegion(std::move(hs));
}

/// Every vertex lies on exactly N facets.
inline bool is_simple(const LatticePolytope& p) {
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    if (p.vertex_facets(v).size() != p.dim()) return false;
  return true;
}

inline bool same_normal_fan(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim() || a.facets().size() != b.facets().size()) return false;
  auto cones = [](const LatticePolytope& p) {
    std::set<std::vector<IntVector>> out;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      std::vector<IntVector> cone;
      for (auto f : p.vertex_facets(v)) cone.push_back(p.facets()[f].normal);
      std::sort(cone.begin(), cone.end());
      out.insert(std::move(cone));
    }
    return out;
  };
  for (const auto& f : a.facets())
    if (!b.facet_with_normal(f.normal)) return false;
  return cones(a) == cones(b);
}

}  // namespace ptoric
