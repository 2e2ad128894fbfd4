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

// Builds the code of the triangle (0,0), (1,0), (-2,3) over F_4 and prints
// its parameters together with the footprint bound.

#include <iostream>

#include "ptoric/ptoric.hpp"

int main() {
  using namespace ptoric;
  const auto p = LatticePolytope::from_vertices({{0, 0}, {1, 0}, {-2, 3}});
  const Field f(4);

  const auto m = generator_matrix(p, f);
  const auto k = dimension(p, f);
  std::cout << "[" << m.cols() << ", " << k << "] code over F_" << f.q() << '\n';

  const auto lambda = find_surjective_dilate(p, f, 10);
  if (!lambda) return 1;
  const auto b = distance_lower_bound(p, surjective_candidate(p, *lambda), f);
  std::cout << "lambda = " << *lambda << ", d >= " << b.bound << '\n';
  std::cout << "exhaustive d = " << oracle::min_distance_exhaustive(m.entries, f) << '\n';
}
