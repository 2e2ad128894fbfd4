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

#include <random>
#include <set>

#include "ptoric/corpus.hpp"
#include "ptoric/oracle.hpp"
#include "ptoric/polytope.hpp"

using namespace ptoric;

namespace {

LatticePolytope toy() { return LatticePolytope::from_vertices({{0, 0}, {1, 0}, {-2, 3}}); }
LatticePolytope quadrilateral() { return LatticePolytope::from_vertices({{0, 0}, {2, 0}, {3, 2}, {0, 3}}); }
LatticePolytope unit_square() { return LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

std::vector<Point> cube_vertices() {
  std::vector<Point> v;
  for (Integer x = 0; x <= 1; ++x)
    for (Integer y = 0; y <= 1; ++y)
      for (Integer z = 0; z <= 1; ++z) v.push_back({x, y, z});
  return v;
}

std::set<std::pair<IntVector, Integer>> facet_set(const LatticePolytope& p) {
  std::set<std::pair<IntVector, Integer>> s;
  for (const auto& f : p.facets()) s.insert({f.normal, f.offset});
  return s;
}

}  // namespace

TEST(FromVertices, Quadrilateral) {
  EXPECT_EQ(facet_set(quadrilateral()), (std::set<std::pair<IntVector, Integer>>{
                                            {{1, 0}, 0}, {{0, 1}, 0}, {{-2, 1}, 4}, {{-1, -3}, 9}}));
}

TEST(FromVertices, UnitSimplexAndToy) {
  const auto s = LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(facet_set(s), (std::set<std::pair<IntVector, Integer>>{{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}}));
  EXPECT_EQ(facet_set(toy()), (std::set<std::pair<IntVector, Integer>>{{{0, 1}, 0}, {{-1, -1}, 1}, {{3, 2}, 0}}));
}

TEST(FromVertices, DropsRedundantPointsAndSorts) {
  const auto p = LatticePolytope::from_vertices({{1, 1}, {0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 0}});
  EXPECT_EQ(p.vertices(), (std::vector<Point>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  EXPECT_EQ(LatticePolytope::from_vertices(p.vertices()), p);
}

TEST(FromVertices, RejectsDegenerate) {
  EXPECT_THROW(LatticePolytope::from_vertices({{0, 0}, {1, 1}, {2, 2}}), ValidationError);
  EXPECT_THROW(LatticePolytope::from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), ValidationError);
}

TEST(FromVrepHrep, AcceptsConsistentInput) {
  const auto sq = unit_square();
  EXPECT_NO_THROW(LatticePolytope::from_vrep_hrep(sq.vertices(), sq.facets()));
  const auto cube = LatticePolytope::from_vertices(cube_vertices());
  EXPECT_EQ(LatticePolytope::from_vrep_hrep(cube.vertices(), cube.facets()), cube);
}

TEST(FromVrepHrep, RejectsLooseFacet) {
  auto facets = unit_square().facets();
  facets[0].offset += 1;
  EXPECT_THROW(LatticePolytope::from_vrep_hrep(unit_square().vertices(), facets), ValidationError);
}

TEST(FromVrepHrep, RejectsNonPrimitiveNormal) {
  auto facets = unit_square().facets();
  for (auto& c : facets[0].normal) c *= 2;
  facets[0].offset *= 2;
  EXPECT_THROW(LatticePolytope::from_vrep_hrep(unit_square().vertices(), facets), ValidationError);
}

TEST(FromVrepHrep, FourDimensionalCube) {
  std::vector<Point> verts;
  for (int mask = 0; mask < 16; ++mask) verts.push_back({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1});
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < 4; ++i) {
    IntVector e(4, 0);
    e[i] = 1;
    facets.push_back({e, 0});
    e[i] = -1;
    facets.push_back({e, 1});
  }
  const auto p = LatticePolytope::from_vrep_hrep(verts, facets);
  EXPECT_EQ(face_lattice(p).f_vector(), (std::vector<std::size_t>{16, 32, 24, 8, 1}));
  EXPECT_TRUE(is_simple(p));
}

TEST(FaceLattice, Counts) {
  EXPECT_EQ(face_lattice(quadrilateral()).f_vector(), (std::vector<std::size_t>{4, 4, 1}));
  EXPECT_EQ(face_lattice(toy()).f_vector(), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_EQ(face_lattice(LatticePolytope::from_vertices(cube_vertices())).f_vector(),
            (std::vector<std::size_t>{8, 12, 6, 1}));
}

TEST(FaceLattice, SimplicityInCodimension) {
  const auto cube = LatticePolytope::from_vertices(cube_vertices());
  const auto lat = face_lattice(cube);
  for (const auto& f : lat.faces()) EXPECT_EQ(f.facets.size(), 3 - f.dim);
}

TEST(LatticePoints, Toy) {
  const auto p = toy();
  const std::vector<Point> expect{{-2, 3}, {-1, 2}, {0, 0}, {0, 1}, {1, 0}};
  EXPECT_EQ(lattice_points(p), expect);
  const auto lat = face_lattice(p);
  const Point a{1, 0}, b{-2, 3};
  bool found = false;
  for (const auto& f : lat.of_dim(1)) {
    std::vector<Point> vs;
    for (auto v : lat[f].vertices) vs.push_back(p.vertices()[v]);
    if (std::find(vs.begin(), vs.end(), a) == vs.end() || std::find(vs.begin(), vs.end(), b) == vs.end()) continue;
    found = true;
    EXPECT_EQ(interior_lattice_points(p, lat[f]), (std::vector<Point>{{-1, 2}, {0, 1}}));
  }
  EXPECT_TRUE(found);
}

TEST(LatticePoints, SquareInteriorEmpty) {
  const auto p = unit_square();
  EXPECT_TRUE(interior_lattice_points(p, face_lattice(p)[face_lattice(p).top()]).empty());
}

TEST(LatticePoints, InteriorsPartitionCorpus) {
  for (const auto& p : corpus::random_polygons(60, 21)) {
    const auto lat = face_lattice(p);
    std::vector<Point> all;
    for (const auto& f : lat.faces()) {
      const auto in = interior_lattice_points(p, f);
      all.insert(all.end(), in.begin(), in.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, lattice_points(p));
  }
}

TEST(Pick, CorpusAndExamples) {
  EXPECT_TRUE(oracle::pick_check(toy()));
  EXPECT_TRUE(oracle::pick_check(unit_square()));
  EXPECT_TRUE(oracle::pick_check(quadrilateral()));
  EXPECT_EQ(oracle::shoelace_area2(toy()), 3);
  EXPECT_EQ(oracle::shoelace_area2(quadrilateral()), 13);
  for (const auto& p : corpus::random_polygons(200, 1)) EXPECT_TRUE(oracle::pick_check(p));
}

TEST(Dilate, Examples) {
  EXPECT_EQ(dilate(unit_square(), 3), LatticePolytope::from_vertices({{0, 0}, {3, 0}, {0, 3}, {3, 3}}));
  EXPECT_EQ(dilate(toy(), 4).vertices(), (std::vector<Point>{{-8, 12}, {0, 0}, {4, 0}}));
  const auto p5 = dilate(toy(), 5);
  for (std::size_t f = 0; f < p5.facets().size(); ++f) EXPECT_EQ(p5.facets()[f].offset, 5 * toy().facets()[f].offset);
  EXPECT_THROW(dilate(toy(), 0), ValidationError);
}

TEST(Dilate, AreaScalesQuadratically) {
  for (const auto& p : corpus::random_polygons(40, 2))
    for (Integer l = 1; l <= 4; ++l) EXPECT_EQ(oracle::shoelace_area2(dilate(p, l)), l * l * oracle::shoelace_area2(p));
}

TEST(OffsetDifference, Examples) {
  const auto p = toy();
  const auto region = offset_difference(dilate(p, 5), p);
  const auto p4 = dilate(p, 4);
  for (Integer x = -12; x <= 8; ++x)
    for (Integer y = -4; y <= 16; ++y) EXPECT_EQ(region.contains({x, y}), p4.contains({x, y}));

  const auto same = offset_difference(p, p);
  for (Integer x = -3; x <= 3; ++x)
    for (Integer y = -3; y <= 3; ++y) EXPECT_EQ(same.contains({x, y}), x == 0 && y == 0);

  const auto seg = offset_difference(LatticePolytope::from_vertices({{0}, {3}}), LatticePolytope::from_vertices({{0}, {1}}));
  for (Integer x = -2; x <= 5; ++x) EXPECT_EQ(seg.contains({x}), x >= 0 && x <= 2);

  EXPECT_THROW(offset_difference(unit_square(), toy()), ValidationError);
}

TEST(Simple, Examples) {
  EXPECT_TRUE(is_simple(quadrilateral()));
  EXPECT_TRUE(is_simple(LatticePolytope::from_vertices(cube_vertices())));
  EXPECT_FALSE(is_simple(LatticePolytope::from_vertices({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}})));
}

TEST(NormalFan, Examples) {
  const auto p = toy();
  EXPECT_TRUE(same_normal_fan(p, dilate(p, 3)));
  EXPECT_FALSE(same_normal_fan(unit_square(), LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}})));
  EXPECT_TRUE(same_normal_fan(p, translate(p, {1, 1})));
}

TEST(AffineImage, PreservesCombinatorics) {
  std::mt19937_64 rng(9);
  for (const auto& p : corpus::random_polygons(40, 3)) {
    const auto u = corpus::random_unimodular(2, rng);
    const auto img = affine_image(p, u, {2, -1});
    EXPECT_EQ(lattice_points(img).size(), lattice_points(p).size());
    EXPECT_EQ(face_lattice(img).f_vector(), face_lattice(p).f_vector());
    EXPECT_EQ(oracle::shoelace_area2(img), oracle::shoelace_area2(p));
    for (const auto& v : p.vertices()) EXPECT_TRUE(img.contains(mat_vec(u, v) + Point{2, -1}));
  }
}
