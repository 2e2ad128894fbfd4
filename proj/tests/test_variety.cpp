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

#include <gtest/gtest.h>

#include <set>

#include "ptoric/corpus.hpp"
#include "ptoric/variety.hpp"

using namespace ptoric;

namespace {

LatticePolytope toy() { return LatticePolytope::from_vertices({{0, 0}, {1, 0}, {-2, 3}}); }
LatticePolytope quadrilateral() { return LatticePolytope::from_vertices({{0, 0}, {2, 0}, {3, 2}, {0, 3}}); }
LatticePolytope unit_square() { return LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
LatticePolytope segment(Integer a) { return LatticePolytope::from_vertices({{0}, {a}}); }

std::multiset<Integer> dets(const HypothesisReport& r) { return {r.vertex_determinants.begin(), r.vertex_determinants.end()}; }

std::size_t vertex_index(const LatticePolytope& p, const Point& v) {
  return static_cast<std::size_t>(std::find(p.vertices().begin(), p.vertices().end(), v) - p.vertices().begin());
}

std::vector<Point> lattice_points_of_face(const LatticePolytope& p, const Face& f) {
  std::vector<Point> out;
  for (const auto& m : lattice_points(p)) {
    bool on = true;
    for (auto fi : f.facets) on &= p.slack(m, fi) == 0;
    if (on) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Hypotheses, Quadrilateral) {
  const auto p = quadrilateral();
  const auto r5 = check_hypotheses(p, 5);
  EXPECT_TRUE(r5.simple);
  EXPECT_EQ(dets(r5), (std::multiset<Integer>{1, 2, 3, 7}));
  EXPECT_TRUE(r5.h2_ok);
  const auto r7 = check_hypotheses(p, 7);
  EXPECT_FALSE(r7.h2_ok);
  ASSERT_EQ(r7.offending_vertices.size(), 1u);
  EXPECT_EQ(p.vertices()[r7.offending_vertices[0]], (Point{3, 2}));
  EXPECT_THROW(require_hypotheses(p, 7), HypothesisError);
  try {
    require_hypotheses(p, 7);
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find('7'), std::string::npos);
  }
}

TEST(Hypotheses, Toy) {
  const auto r = check_hypotheses(toy(), 4);
  EXPECT_EQ(dets(r), (std::multiset<Integer>{1, 1, 3}));
  EXPECT_EQ(r.vertex_determinants[vertex_index(toy(), {0, 0})], 3);
  EXPECT_TRUE(r.h2_ok);
  EXPECT_EQ(r.characteristic, 2u);
  EXPECT_FALSE(check_hypotheses(toy(), 9).h2_ok);
}

TEST(Hypotheses, NotSimple) {
  const auto pyr = LatticePolytope::from_vertices({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}});
  const auto r = check_hypotheses(pyr, 5);
  EXPECT_FALSE(r.simple);
  EXPECT_FALSE(r.ok());
  EXPECT_THROW(require_hypotheses(pyr, 5), HypothesisError);
  EXPECT_THROW(build_flags(pyr), HypothesisError);
}

TEST(RationalPoints, Examples) {
  EXPECT_EQ(count_rational_points(toy(), 4), 21u);
  EXPECT_EQ(count_rational_points(unit_square(), 3), 16u);
  EXPECT_EQ(count_rational_points(segment(1), 3), 4u);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    EXPECT_EQ(count_rational_points(unit_square(), q), std::uint64_t{q + 1} * (q + 1));
    EXPECT_EQ(count_rational_points(segment(1), q), q + 1u);
  }
}

TEST(Flags, CoverSizes) {
  EXPECT_EQ(build_flags(segment(4)).flags.size(), 2u);
  EXPECT_EQ(build_flags(toy()).flags.size(), 3u);
  EXPECT_EQ(build_flags(quadrilateral()).flags.size(), 4u);
  for (const auto& p : corpus::random_polygons(100, 4)) {
    const auto lat = face_lattice(p);
    for (auto order : {FlagCoverOrder::canonical, FlagCoverOrder::reversed}) {
      const auto cover = build_flags(p, lat, order);
      EXPECT_EQ(cover.flags.size(), p.vertices().size());
      for (std::size_t f = 0; f < lat.size(); ++f) EXPECT_TRUE(cover.flags[cover.owner[f]].contains_face(f));
    }
  }
}

TEST(Flags, CubeCoverAudit) {
  std::vector<Point> v;
  for (Integer x = 0; x <= 2; x += 2)
    for (Integer y = 0; y <= 1; ++y)
      for (Integer z = 0; z <= 3; z += 3) v.push_back({x, y, z});
  const auto p = LatticePolytope::from_vertices(v);
  const auto lat = face_lattice(p);
  const auto cover = build_flags(p, lat);
  for (std::size_t f = 0; f < lat.size(); ++f) EXPECT_TRUE(cover.flags[cover.owner[f]].contains_face(f));
  for (const auto& flag : cover.flags)
    for (std::size_t j = 0; j <= 3; ++j)
      for (const auto& m : lattice_points_of_face(p, lat[flag.chain[j]])) {
        const auto s = flag.straighten(m);
        for (std::size_t i = j; i < 3; ++i) EXPECT_EQ(s[i], 0);
      }
}

TEST(Straighten, ToyEdge) {
  const auto p = toy();
  const auto lat = face_lattice(p);
  const auto v = vertex_index(p, {1, 0});
  const auto w = vertex_index(p, {-2, 3});
  std::optional<std::size_t> vertex, edge;
  for (std::size_t f = 0; f < lat.size(); ++f) {
    if (lat[f].vertices == std::vector<std::size_t>{v}) vertex = f;
    if (lat[f].dim == 1 && std::set<std::size_t>(lat[f].vertices.begin(), lat[f].vertices.end()) == std::set{v, w})
      edge = f;
  }
  ASSERT_TRUE(vertex && edge);
  const auto flag = make_flag(p, lat, {*vertex, *edge, lat.top()});
  EXPECT_EQ(straighten(p, flag, {1, 0}), (IntVector{0, 0}));
  EXPECT_EQ(straighten(p, flag, {0, 1}), (IntVector{1, 0}));
  EXPECT_EQ(straighten(p, flag, {-1, 2}), (IntVector{2, 0}));
  EXPECT_THROW(straighten(p, flag, {5, 5}), ValidationError);

  // the canonical cover puts that edge in the flag based at (1,0)
  const auto cover = build_flags(p, lat);
  EXPECT_EQ(cover.flags[cover.owner[*edge]].chain[0], *vertex);
}

TEST(Straighten, UnitSquare) {
  const auto p = unit_square();
  const auto lat = face_lattice(p);
  const auto o = vertex_index(p, {0, 0}), r = vertex_index(p, {1, 0});
  std::optional<std::size_t> vertex, edge;
  for (std::size_t f = 0; f < lat.size(); ++f) {
    if (lat[f].vertices == std::vector<std::size_t>{o}) vertex = f;
    if (lat[f].dim == 1 && std::set<std::size_t>(lat[f].vertices.begin(), lat[f].vertices.end()) == std::set{o, r})
      edge = f;
  }
  const auto flag = make_flag(p, lat, {*vertex, *edge, lat.top()});
  EXPECT_EQ(flag.straighten({1, 0}), (IntVector{1, 0}));
  EXPECT_EQ(flag.straighten({0, 0}), (IntVector{0, 0}));
}

TEST(Straighten, AffineInjectiveAndTrailingZeros) {
  for (const auto& p : corpus::random_polygons(80, 6)) {
    if (!is_simple(p)) continue;
    const auto lat = face_lattice(p);
    const auto cover = build_flags(p, lat);
    const auto pts = lattice_points(p);
    for (const auto& flag : cover.flags) {
      EXPECT_EQ(std::abs(determinant(flag.straightening)), 1);
      EXPECT_EQ(flag.straighten(flag.base), (IntVector{0, 0}));
      std::set<IntVector> images;
      for (const auto& m : pts) {
        images.insert(flag.straighten(m));
        EXPECT_EQ(flag.straighten(m) - flag.straighten(pts[0]), mat_vec(flag.straightening, m - pts[0]));
      }
      EXPECT_EQ(images.size(), pts.size());
      for (std::size_t j = 0; j <= 2; ++j)
        for (const auto& m : lattice_points_of_face(p, lat[flag.chain[j]])) {
          const auto s = flag.straighten(m);
          for (std::size_t i = j; i < 2; ++i) EXPECT_EQ(s[i], 0);
        }
    }
  }
}

TEST(Picard, Examples) {
  const auto sq = picard_invariants(unit_square());
  EXPECT_EQ(sq.free_rank, 2u);
  EXPECT_TRUE(sq.torsion.empty());
  const auto qd = picard_invariants(quadrilateral());
  EXPECT_EQ(qd.free_rank, 2u);
  EXPECT_TRUE(qd.torsion.empty());
  const auto sg = picard_invariants(segment(1));
  EXPECT_EQ(sg.free_rank, 1u);
  EXPECT_TRUE(sg.torsion.empty());
  const auto tri = picard_invariants(LatticePolytope::from_vertices({{0, 0}, {2, 0}, {0, 2}}));
  EXPECT_EQ(tri.free_rank, 1u);
}

TEST(Picard, TorsionDetected) {
  // inner normals (2,-1), (-1,2), (-1,-1): maximal minors all +-3
  const auto p = LatticePolytope::from_vertices({{-1, -1}, {0, 1}, {1, 0}});
  const auto pic = picard_invariants(p);
  EXPECT_EQ(pic.free_rank, 1u);
  EXPECT_EQ(pic.torsion, (std::vector<Integer>{3}));
  EXPECT_EQ(snf_invariant_factors(facet_normal_matrix(p)), (std::vector<Integer>{1, 3}));
}
