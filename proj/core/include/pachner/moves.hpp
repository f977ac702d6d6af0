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

#include <vector>

#include "pachner/triangulation.hpp"

namespace pachner {

// Edge flip ab -> cd: triangles abc, abd become acd, bcd.
struct FlipMove {
  Edge remove;
  Edge insert;

  FlipMove inverse() const { return {insert, remove}; }
  auto operator<=>(const FlipMove&) const = default;
};

// Throws IllegalFlip("missing-triangles" | "diagonal-exists").
Triangulation flip(const Triangulation& t, const FlipMove& m);

// The flip of edge e towards its apices, if legal.
bool flip_is_legal(const Triangulation& t, Edge e);

// Sorted by (remove, insert).
std::vector<FlipMove> legal_flips(const Triangulation& t);

// Stellar subdivision of t with the new vertex n+1. Throws UnknownTriangle.
Triangulation zero_move(const Triangulation& t, const Triangle& tri);

struct TwoMoveResult {
  Triangulation sphere;
  // Labels above `removed` moved down by one.
  Vertex removed;
};

// Removes a degree-3 vertex. Throws IllegalMove("degree-not-3" |
// "triangle-exists").
TwoMoveResult two_move(const Triangulation& t, Vertex v);

}  // namespace pachner
