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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "pachner/canonical.hpp"
#include "pachner/errors.hpp"
#include "pachner/generators.hpp"
#include "pachner/moves.hpp"

using namespace pachner;

TEST_CASE("flip replaces two triangles", "[moves]") {
  const auto t = gamma(6);  // octahedron, apices 1 and 2
  const auto [c, d] = t.edge_apices(Edge::of(1, 3));
  const auto u = flip(t, {Edge::of(1, 3), Edge::of(c, d)});
  CHECK_FALSE(u.adjacent(1, 3));
  CHECK(u.adjacent(c, d));
  CHECK(u.has_triangle(Triangle::of(1, c, d)));
  CHECK(u.has_triangle(Triangle::of(3, c, d)));
  CHECK(oracle::triangle_set(u).size() == t.triangles().size());
}

TEST_CASE("the inverse flip restores the sphere", "[moves]") {
  for (int n = 5; n <= 9; ++n)
    for (const auto& t : {gamma(n), delta_sphere(n)})
      for (const auto& m : legal_flips(t)) CHECK(flip(flip(t, m), m.inverse()) == t);
}

TEST_CASE("illegal flips are reported", "[moves]") {
  const auto t = gamma(6);
  try {
    flip(t, {Edge::of(1, 2), Edge::of(3, 4)});
    FAIL("expected IllegalFlip");
  } catch (const IllegalFlip& e) {
    CHECK(e.reason() == "missing-triangles");
  }
  // delta_sphere(5): apices of 12 are already joined
  const auto d = delta_sphere(5);
  const auto [c, e] = d.edge_apices(Edge::of(3, 4));
  if (d.adjacent(c, e)) {
    try {
      flip(d, {Edge::of(3, 4), Edge::of(c, e)});
      FAIL("expected IllegalFlip");
    } catch (const IllegalFlip& err) {
      CHECK(err.reason() == "diagonal-exists");
    }
  }
}

TEST_CASE("legal flips agree with a direct count", "[moves]") {
  for (int n = 5; n <= 10; ++n) {
    const auto t = a_sphere(std::max(n, 8));
    int count = 0;
    for (const auto& e : t.edges()) {
      const auto [c, d] = t.edge_apices(e);
      if (!t.adjacent(c, d)) ++count;
    }
    CHECK(static_cast<int>(legal_flips(t).size()) == count);
  }
}

TEST_CASE("zero-move and two-move are inverse", "[moves]") {
  const auto t = gamma(7);
  for (const auto& f : t.triangles()) {
    const auto s = zero_move(t, f);
    CHECK(s.vertex_count() == 8);
    CHECK(s.degree(8) == 3);
    const auto back = two_move(s, 8);
    CHECK(back.removed == 8);
    CHECK(back.sphere == t);
  }
  CHECK_THROWS_AS(zero_move(t, Triangle::of(1, 2, 3)), UnknownTriangle);
  try {
    two_move(t, 1);
    FAIL("expected IllegalMove");
  } catch (const IllegalMove& e) {
    CHECK(e.reason() == "degree-not-3");
  }
  try {
    two_move(delta_sphere(4), 1);
    FAIL("expected IllegalMove");
  } catch (const IllegalMove& e) {
    CHECK(e.reason() == "triangle-exists");
  }
}
