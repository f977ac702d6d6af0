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

#include "pachner/moves.hpp"

#include <algorithm>

#include "pachner/errors.hpp"

namespace pachner {

namespace {

std::string describe(const FlipMove& m) {
  return to_string(m.remove) + " -> " + to_string(m.insert);
}

}  // namespace

Triangulation flip(const Triangulation& t, const FlipMove& m) {
  const Vertex a = m.remove.lo, b = m.remove.hi, c = m.insert.lo, d = m.insert.hi;
  const Triangle abc = Triangle::of(a, b, c), abd = Triangle::of(a, b, d);
  if (a == b || c == d || m.remove.contains(c) || m.remove.contains(d) ||
      !t.has_triangle(abc) || !t.has_triangle(abd))
    throw IllegalFlip("missing-triangles", describe(m));
  if (t.adjacent(c, d)) throw IllegalFlip("diagonal-exists", describe(m));
  std::vector<Triangle> tris;
  tris.reserve(t.triangles().size());
  for (const auto& x : t.triangles())
    if (x != abc && x != abd) tris.push_back(x);
  tris.push_back(Triangle::of(a, c, d));
  tris.push_back(Triangle::of(b, c, d));
  return Triangulation(t.vertex_count(), std::move(tris));
}

bool flip_is_legal(const Triangulation& t, Edge e) {
  auto [x, y] = t.edge_apices(e);
  return !t.adjacent(x, y);
}

std::vector<FlipMove> legal_flips(const Triangulation& t) {
  std::vector<FlipMove> out;
  for (const Edge& e : t.edges()) {
    auto [x, y] = t.edge_apices(e);
    if (!t.adjacent(x, y)) out.push_back({e, Edge{x, y}});
  }
  return out;
}

Triangulation zero_move(const Triangulation& t, const Triangle& tri) {
  const Triangle s = Triangle::of(tri.v[0], tri.v[1], tri.v[2]);
  if (!t.has_triangle(s)) throw UnknownTriangle("unknown triangle " + to_string(s));
  const Vertex x = t.vertex_count() + 1;
  std::vector<Triangle> tris;
  tris.reserve(t.triangles().size() + 2);
  for (const auto& f : t.triangles())
    if (f != s) tris.push_back(f);
  tris.push_back(Triangle::of(s.v[0], s.v[1], x));
  tris.push_back(Triangle::of(s.v[0], s.v[2], x));
  tris.push_back(Triangle::of(s.v[1], s.v[2], x));
  return Triangulation(x, std::move(tris));
}

TwoMoveResult two_move(const Triangulation& t, Vertex v) {
  if (t.degree(v) != 3)
    throw IllegalMove("degree-not-3", "vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(t.degree(v)));
  auto r = t.rotation(v);
  const Triangle link = Triangle::of(r[0], r[1], r[2]);
  if (t.has_triangle(link))
    throw IllegalMove("triangle-exists", "link of " + std::to_string(v) + " is the triangle " +
                                             to_string(link));
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<Triangle> tris;
  tris.reserve(t.triangles().size() - 2);
  for (const auto& f : t.triangles())
    if (!f.contains(v)) tris.push_back(Triangle::of(shift(f.v[0]), shift(f.v[1]), shift(f.v[2])));
  tris.push_back(Triangle::of(shift(link.v[0]), shift(link.v[1]), shift(link.v[2])));
  return {Triangulation(t.vertex_count() - 1, std::move(tris)), v};
}

}  // namespace pachner
