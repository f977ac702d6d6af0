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

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace pachner {

// Vertices are dense labels 1..n.
using Vertex = int;

struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool contains(Vertex v) const { return lo == v || hi == v; }
  Vertex other(Vertex v) const { return v == lo ? hi : lo; }

  auto operator<=>(const Edge&) const = default;
};

struct Triangle {
  std::array<Vertex, 3> v{};

  static Triangle of(Vertex a, Vertex b, Vertex c) {
    Triangle t{{a, b, c}};
    std::sort(t.v.begin(), t.v.end());
    return t;
  }
  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool contains(Edge e) const { return contains(e.lo) && contains(e.hi); }
  // The vertex of the triangle opposite to edge e. Assumes contains(e).
  Vertex opposite(Edge e) const {
    for (Vertex x : v)
      if (x != e.lo && x != e.hi) return x;
    return 0;
  }

  auto operator<=>(const Triangle&) const = default;
};

struct Tetrahedron {
  std::array<Vertex, 4> v{};

  static Tetrahedron of(Vertex a, Vertex b, Vertex c, Vertex d) {
    Tetrahedron t{{a, b, c, d}};
    std::sort(t.v.begin(), t.v.end());
    return t;
  }
  bool contains(Vertex x) const {
    return std::find(v.begin(), v.end(), x) != v.end();
  }
  // Number of shared vertices.
  int meet(const Tetrahedron& o) const {
    int k = 0;
    for (Vertex x : v) k += o.contains(x) ? 1 : 0;
    return k;
  }
  // Face missing vertex x.
  Triangle face_without(Vertex x) const {
    std::array<Vertex, 3> f{};
    int k = 0;
    for (Vertex y : v)
      if (y != x && k < 3) f[k++] = y;
    return Triangle{f};
  }

  auto operator<=>(const Tetrahedron&) const = default;
};

std::string to_string(const Edge& e);
std::string to_string(const Triangle& t);
std::string to_string(const Tetrahedron& t);

}  // namespace pachner
