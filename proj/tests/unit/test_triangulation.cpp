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

#include "pachner/errors.hpp"
#include "pachner/generators.hpp"
#include "pachner/moves.hpp"
#include "pachner/triangulation.hpp"

using namespace pachner;

namespace {
const char* kOctahedron = "6:1,2,3|1,2,5|1,3,4|1,4,5|2,3,6|2,5,6|3,4,6|4,5,6";
}

TEST_CASE("text form round-trips", "[triangulation]") {
  const auto t = Triangulation::parse(kOctahedron);
  CHECK(t.vertex_count() == 6);
  CHECK(t.edge_count() == 12);
  CHECK(t.triangles().size() == 8);
  CHECK(t.to_text() == kOctahedron);
  CHECK(Triangulation::parse(t.to_text()) == t);
}

TEST_CASE("malformed text is rejected", "[triangulation]") {
  CHECK_THROWS_AS(Triangulation::parse(""), ParseError);
  CHECK_THROWS_AS(Triangulation::parse("4:1,2"), ParseError);
  CHECK_THROWS_AS(Triangulation::parse("x:1,2,3"), ParseError);
}

TEST_CASE("invalid spheres are rejected", "[triangulation]") {
  // three triangles only
  CHECK_THROWS_AS(Triangulation(4, {Triangle::of(1, 2, 3), Triangle::of(1, 2, 4), Triangle::of(1, 3, 4)}),
                  ValidationError);
  // two tetrahedra glued at a vertex would be a pinched surface
  std::vector<Triangle> pinched;
  for (auto f : {Triangle::of(1, 2, 3), Triangle::of(1, 2, 4), Triangle::of(1, 3, 4), Triangle::of(2, 3, 4),
                 Triangle::of(4, 5, 6), Triangle::of(4, 5, 7), Triangle::of(4, 6, 7), Triangle::of(5, 6, 7)})
    pinched.push_back(f);
  CHECK_THROWS_AS(Triangulation(7, pinched), ValidationError);
  // out-of-range label
  CHECK_THROWS_AS(Triangulation(4, {Triangle::of(1, 2, 3), Triangle::of(1, 2, 4), Triangle::of(1, 3, 4),
                                    Triangle::of(2, 3, 9)}),
                  ValidationError);
}

TEST_CASE("local queries on the octahedron", "[triangulation]") {
  const auto t = Triangulation::parse(kOctahedron);
  for (Vertex v = 1; v <= 6; ++v) CHECK(t.degree(v) == 4);
  CHECK(t.adjacent(1, 2));
  CHECK_FALSE(t.adjacent(1, 6));
  CHECK(t.link_cycle(1) == std::vector<Vertex>{2, 3, 4, 5});
  CHECK(t.edge_apices(Edge::of(1, 2)) == std::pair<Vertex, Vertex>{3, 5});
  CHECK(t.other_apex(1, 2, 3) == 5);
  CHECK(t.common_neighbors(1, 6) == std::vector<Vertex>{2, 3, 4, 5});
  CHECK(t.nonfacial_3cycles().empty());
  CHECK(t.induced_4cycles().size() == 3);
  CHECK_THROWS_AS(t.edge_apices(Edge::of(1, 6)), UnknownEdge);
}

TEST_CASE("Euler counts hold for generated spheres", "[triangulation]") {
  for (int n = 5; n <= 20; ++n) {
    for (const auto& t : {gamma(n), delta_sphere(n)}) {
      CHECK(static_cast<int>(t.edges().size()) == 3 * n - 6);
      CHECK(static_cast<int>(t.triangles().size()) == 2 * n - 4);
      int sum = 0;
      for (int d : t.degree_sequence()) sum += d;
      CHECK(sum == 6 * n - 12);
    }
  }
}

TEST_CASE("the tetrahedron has a nonfacial 3-cycle only when stacked on", "[triangulation]") {
  const auto d = delta_sphere(5);
  CHECK(d.nonfacial_3cycles().size() == 1);
}
