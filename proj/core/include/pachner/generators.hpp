// Copyright 2026 The Pachner Authors
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

#include <array>
#include <vector>

#include "pachner/triangulation.hpp"

namespace pachner {

// Double cone over the (n-2)-gon: apices 1 and 2, rim 3..n in order.
Triangulation gamma(int n);

// The flag target sphere. Labels: a=1, a0=2, a1=3, a2=4, a3=5, c=6, b=7 and
// the fan vertices x_i = 7+i between a and b. a_sphere(7) is gamma(7).
Triangulation a_sphere(int n);

// The disc Q_k: boundary a0-a-ak-b, path a0..ak fanned from a above and
// from c below, c joined to b.
struct QkDisc {
  int k = 0;
  Vertex a = 0, b = 0, c = 0;
  std::vector<Vertex> path;  // a0, a1, ..., ak
  std::array<Vertex, 4> boundary{};  // a0, a, ak, b
  std::vector<Triangle> triangles;
};
// Labels: a=1, a_i=2+i, c=k+3, b=k+4.
QkDisc q_region(int k);

// Boundary of the ball of n-3 tetrahedra around the edge {1,2}; the fan
// vertices are x_i = i+2.
Triangulation delta_sphere(int n);

// Subdivides every triangle once; new vertices n+1.. follow triangle order.
Triangulation klee(const Triangulation& s);

}  // namespace pachner
